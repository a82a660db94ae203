#include "burn/json_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace burn {

using nlohmann::json;

json coord_to_json(const VertexCoord& c) {
    switch (c.kind) {
        case VertexCoord::Kind::Head: return json("head");
        case VertexCoord::Kind::Arm: return json{{"arm", c.index}, {"pos", c.pos}};
        case VertexCoord::Kind::Path: return json{{"path", c.index}, {"pos", c.pos}};
        case VertexCoord::Kind::Id: return json{{"id", c.index}};
    }
    throw DomainError("bad coordinate");
}

VertexCoord coord_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "head") return VertexCoord::head();
        throw DomainError("unknown coordinate string: " + j.get<std::string>());
    }
    if (!j.is_object()) throw DomainError("coordinate must be \"head\" or an object");
    if (j.contains("arm")) return VertexCoord::arm(j.at("arm").get<int>(), j.at("pos").get<int>());
    if (j.contains("path"))
        return VertexCoord::path(j.at("path").get<int>(), j.at("pos").get<int>());
    if (j.contains("id")) return VertexCoord::id(j.at("id").get<int>());
    throw DomainError("coordinate object needs arm, path, or id");
}

json schedule_to_json(const BurningSchedule& s) {
    json sources = json::array();
    for (const auto& c : s.sources()) sources.push_back(coord_to_json(c));
    return json{{"m", s.horizon()}, {"sources", sources}};
}

BurningSchedule schedule_from_json(const json& j) {
    std::vector<VertexCoord> sources;
    for (const auto& c : j.at("sources")) sources.push_back(coord_from_json(c));
    return BurningSchedule(std::move(sources), j.at("m").get<int>());
}

json record_to_json(const BurnRecord& r) {
    json burned = json::array();
    for (int round : r.burned_at) burned.push_back(round);
    return json{{"valid", r.valid},
                {"sources_ok", r.sources_ok},
                {"completed_round", r.completed_round > 0 ? json(r.completed_round) : json()},
                {"burned_at", burned}};
}

json verdict_to_json(const OracleVerdict& v) {
    json j{{"burnable", v.burnable}, {"nodes_explored", v.nodes_explored}};
    j["witness"] = v.witness ? schedule_to_json(*v.witness) : json();
    return j;
}

json outcome_to_json(const StrategyOutcome& o) {
    json j;
    switch (o.kind) {
        case StrategyOutcome::Kind::Schedule:
            j["outcome"] = "schedule";
            j["schedule"] = schedule_to_json(*o.schedule);
            if (o.head_burn_round > 0) j["head_burn_round"] = o.head_burn_round;
            break;
        case StrategyOutcome::Kind::Exceptional:
            j["outcome"] = "exceptional";
            j["family"] = family_name(*o.family);
            break;
        case StrategyOutcome::Kind::HypothesisUnmet:
            j["outcome"] = "hypothesis_unmet";
            j["reason"] = o.detail;
            break;
        case StrategyOutcome::Kind::ProofCaseUnreachable:
            j["outcome"] = "proof_case_unreachable";
            j["reason"] = o.detail;
            break;
    }
    return j;
}

json report_to_json(const VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"kind", f.kind},
                                {"instance", f.instance},
                                {"expected", f.expected},
                                {"got", f.got}});
    json hits = json::array();
    for (const auto& h : r.exceptional_hits) hits.push_back(h);
    return json{{"claim", r.claim},
                {"family", r.family},
                {"n", r.n},
                {"m", r.m},
                {"orders", r.orders},
                {"instances_checked", r.instances_checked},
                {"failures", failures},
                {"exceptional_hits", hits},
                {"passed", r.passed()},
                {"note", r.note},
                {"wall_time_ms", r.wall_ms}};
}

Tree read_tree(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw DomainError("tree file: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw DomainError("tree file: missing edge line");
        edges.emplace_back(u, v);
    }
    return Tree(n, std::move(edges));
}

void write_tree(const Tree& t, std::ostream& out) {
    out << t.order() << "\n";
    for (auto [u, v] : t.edges()) out << u << " " << v << "\n";
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw DomainError("empty entry in integer list");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw DomainError("empty integer list");
    return out;
}

}  // namespace burn
