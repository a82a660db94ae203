#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "burn/oracle.hpp"
#include "burn/strategies.hpp"
#include "burn/types.hpp"
#include "burn/verify.hpp"

namespace burn {

// Coordinate wire form: "head" | {"arm":a,"pos":p} | {"path":j,"pos":p} | {"id":v}
nlohmann::json coord_to_json(const VertexCoord& c);
VertexCoord coord_from_json(const nlohmann::json& j);

// Schedule wire form: {"m": int, "sources": [coord...]}
nlohmann::json schedule_to_json(const BurningSchedule& s);
BurningSchedule schedule_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const BurnRecord& r);
nlohmann::json verdict_to_json(const OracleVerdict& v);
nlohmann::json outcome_to_json(const StrategyOutcome& o);
nlohmann::json report_to_json(const VerificationReport& r);

// Tree file: first line the vertex count N, then N-1 lines "u v" (0-based).
Tree read_tree(std::istream& in);
void write_tree(const Tree& t, std::ostream& out);

// Comma-separated positive integers ("8,1,1"); returns them as given.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace burn
