#pragma once

#include <string>
#include <vector>

#include "restriction.hpp"

namespace schubrest {

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    bool pass = true;
    long long items = 0;       // objects examined
    std::string detail;        // first counterexample, when failing
};

/// Exhaustive sweeps over I_{d,n}. Suites: "oracles", "bijections", "nsum",
/// "positivity", or "all".
std::vector<CheckResult> run_suite(const std::string& suite, int d, int n);

bool all_pass(const std::vector<CheckResult>& results);
std::string format_report(const std::vector<CheckResult>& results);

/// The three N_S strategies on one tableau; throws on disagreement.
long long n_coefficient_checked(const SetValuedTableau& s);

/// Deterministic pseudo-random set-valued tableaux that are not semistandard,
/// each with at most max_entries entries.
std::vector<SetValuedTableau> random_non_semistandard_tableaux(int count, int max_entries,
                                                               unsigned seed);

/// Ladder-move graph isomorphism of the three models for one (lambda, mu),
/// via the bijections h and g; tops must map to tops.
CheckResult check_model_triad(const Partition& lambda, const Partition& mu);

}  // namespace schubrest
