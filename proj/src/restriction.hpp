#pragma once

#include "laurent.hpp"
#include "tableau.hpp"

namespace schubrest {

/// One tableau of the restriction sum together with its weight factors.
/// Factor (a, b) stands for t_b/t_a - 1 in K-theory and t_b - t_a in
/// cohomology; a is a complement value beta'(x + c - r), b a subset value
/// beta(d + 1 - x), one factor per entry.
struct WeightedTerm {
    SetValuedTableau tableau;
    std::vector<std::pair<int, int>> factors;
};

struct AuditReport {
    AuditReport(GrassIndex a, GrassIndex b) : alpha(std::move(a)), beta(std::move(b)) {}

    GrassIndex alpha;
    GrassIndex beta;
    int global_sign = 1;  // (-1)^{l(alpha)}, factored out of every K term
    std::vector<WeightedTerm> terms;
    bool all_positive = true;  // every factor has b > a
    int factor_count = 0;
};

/// Per-entry factor indices (a, b) of a tableau on pi(beta), in row-major
/// entry order.
std::vector<std::pair<int, int>> entry_factors(const SetValuedTableau& s, const GrassIndex& beta);

/// [X_alpha]_K restricted to the fixed point of beta:
/// (-1)^{l(alpha)} sum over SSVT of the product of (t_b/t_a - 1).
LaurentPolynomial restrict_k(const GrassIndex& alpha, const GrassIndex& beta);

/// [X_alpha]_H restricted to the fixed point of beta:
/// sum over SSYT of the product of (t_b - t_a).
LaurentPolynomial restrict_h(const GrassIndex& alpha, const GrassIndex& beta);

/// K-class of the coordinate subspace cut out by the entries of s: product of
/// (1 - t_b/t_a) over the *distinct* coordinates selected (the subspace
/// depends only on the variable set, so repeated coordinates count once).
LaurentPolynomial coordinate_subspace_class(const SetValuedTableau& s, const GrassIndex& beta);

/// Inclusion-exclusion reference for the class of the union of the coordinate
/// subspaces of the given tableaux; intersections are realized as tableau
/// unions. Exponential in the number of tableaux; guarded by max_q.
LaurentPolynomial union_class_oracle(const std::vector<SetValuedTableau>& tableaux,
                                     const GrassIndex& beta, int max_q = 20);

/// Third computation path: sum of N_S * [W_S]_K over set-valued tableaux,
/// realized over semistandard ones with coefficient (-1)^{|S|+||S||}.
LaurentPolynomial restrict_k_via_nsum(const GrassIndex& alpha, const GrassIndex& beta);

/// Factor-level report of the K sum; every factor must satisfy b > a.
AuditReport positivity_audit(const GrassIndex& alpha, const GrassIndex& beta);

/// Checks that the lowest-degree part of the K restriction under t -> 1 - s
/// equals the cohomology restriction (with t renamed s).
bool consistency_lowest_degree(const GrassIndex& alpha, const GrassIndex& beta);

}  // namespace schubrest
