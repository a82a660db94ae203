#pragma once

#include <string>
#include <vector>

#include "burn/oracle.hpp"
#include "burn/types.hpp"

namespace burn {

struct SweepOptions {
    int workers = 1;          // <= 1 runs the serial reference path
    bool full_range = false;  // sweep every order from the smallest instance up
    int search_cap = 400;
};

struct SweepFailure {
    std::string kind;  // oracle-mismatch, head-slack, head-round, hypothesis, proof-case, ...
    std::string instance;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    std::string claim;
    std::string family;
    int n = 0;
    int m = 0;
    std::vector<int> orders;
    long long instances_checked = 0;
    std::vector<SweepFailure> failures;
    std::vector<std::string> exceptional_hits;
    double wall_ms = 0.0;
    std::string note;

    bool passed() const { return failures.empty(); }
    std::string to_table() const;
};

// Tight-bound sweep for spiders: every n-spider of order I_sp(n,m) (and the
// smoke order below it) must be burnable; at I_sp(n,m)+1 there must be an
// unburnable spider including the witness, and for m <= n the unburnable
// spiders must be exactly those containing the balanced m-spider.
VerificationReport verify_first_main(int n, int m, const SweepOptions& opts = {});

// Tight-bound sweep for path forests: everything of order I_pf(n,m) (and
// below) burnable; at I_pf(n,m)+1 the unique unburnable forest is
// (m^2-n^2+2, 2, ..., 2).
VerificationReport verify_second_main(int n, int m, const SweepOptions& opts = {});

// Cross-validation of every constructive strategy applicable at (n, m)
// against the exact oracle over its whole hypothesis class up to max_order:
// outcome classes must match the oracle verdict, schedules must re-simulate
// valid (enforced by the strategies themselves), and the head-round
// guarantees must hold.
VerificationReport verify_constructive_agreement(const std::string& family, int n, int m,
                                                 int max_order, const SweepOptions& opts = {});

// Exploratory sweep: every tree with exactly n_leaves leaves of order at
// most min(max_order, m^2 + n_leaves - 2) is checked for m-burnability;
// counterexamples are reported as failures.
VerificationReport stretch_conjecture_sweep(int n_leaves, int m, int max_order,
                                            const SweepOptions& opts = {});

}  // namespace burn
