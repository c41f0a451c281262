#include "restriction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace schubrest {

namespace {

void check_pair(const GrassIndex& alpha, const GrassIndex& beta) {
    if (alpha.d() != beta.d() || alpha.n() != beta.n())
        throw std::invalid_argument("alpha and beta must live in the same I_{d,n}");
}

}  // namespace

std::vector<std::pair<int, int>> entry_factors(const SetValuedTableau& s, const GrassIndex& beta) {
    int d = beta.d();
    std::vector<int> comp = beta.complement();
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(s.entry_count()));
    s.for_each_entry([&](int x, int r, int c) {
        int k = x + c - r;
        if (x < 1 || x > d || k < 1 || k > static_cast<int>(comp.size()))
            throw std::invalid_argument("tableau entry outside the range allowed on pi(beta)");
        out.emplace_back(comp[static_cast<size_t>(k) - 1], beta.entry(d + 1 - x));
    });
    return out;
}

LaurentPolynomial restrict_k(const GrassIndex& alpha, const GrassIndex& beta) {
    check_pair(alpha, beta);
    int n = beta.n();
    Partition lambda = alpha.shape();
    Partition mu = beta.shape();
    LaurentPolynomial total(n);
    for (const SetValuedTableau& s : enumerate_ssvt(lambda, mu)) {
        LaurentPolynomial term = LaurentPolynomial::one(n);
        for (const auto& [a, b] : entry_factors(s, beta))
            term *= -k_weight_factor(n, a, b);  // t_b/t_a - 1
        total += term;
    }
    if (alpha.length() % 2 == 1) total = -total;
    return total;
}

LaurentPolynomial restrict_h(const GrassIndex& alpha, const GrassIndex& beta) {
    check_pair(alpha, beta);
    int n = beta.n();
    LaurentPolynomial total(n);
    for (const SetValuedTableau& s : enumerate_ssyt(alpha.shape(), beta.shape())) {
        LaurentPolynomial term = LaurentPolynomial::one(n);
        for (const auto& [a, b] : entry_factors(s, beta)) term *= h_weight_factor(n, a, b);
        total += term;
    }
    return total;
}

LaurentPolynomial coordinate_subspace_class(const SetValuedTableau& s, const GrassIndex& beta) {
    std::set<std::pair<int, int>> coords;
    for (const auto& ab : entry_factors(s, beta)) coords.insert(ab);
    LaurentPolynomial out = LaurentPolynomial::one(beta.n());
    for (const auto& [a, b] : coords) out *= k_weight_factor(beta.n(), a, b);
    return out;
}

LaurentPolynomial union_class_oracle(const std::vector<SetValuedTableau>& tableaux,
                                     const GrassIndex& beta, int max_q) {
    int q = static_cast<int>(tableaux.size());
    if (q > max_q) throw std::invalid_argument("union_class_oracle: too many subspaces");
    int n = beta.n();
    LaurentPolynomial total(n);
    if (q == 0) return total;

    // Walk the subset tree keeping the class of the running intersection:
    // including a tableau unions its coordinates in, and each coordinate
    // contributes its factor the first time it appears.
    std::vector<std::vector<std::pair<int, int>>> coords(static_cast<size_t>(q));
    for (size_t i = 0; i < tableaux.size(); ++i) {
        std::set<std::pair<int, int>> dedup;
        for (const auto& ab : entry_factors(tableaux[i], beta)) dedup.insert(ab);
        coords[i].assign(dedup.begin(), dedup.end());
    }
    std::map<std::pair<int, int>, int> refcount;
    auto rec = [&](auto&& self, int i, const LaurentPolynomial& cls, int taken) -> void {
        if (i == q) {
            if (taken == 0) return;
            if (taken % 2 == 1)
                total += cls;
            else
                total -= cls;
            return;
        }
        LaurentPolynomial with = cls;
        for (const auto& ab : coords[static_cast<size_t>(i)])
            if (refcount[ab]++ == 0) with *= k_weight_factor(n, ab.first, ab.second);
        self(self, i + 1, with, taken + 1);
        for (const auto& ab : coords[static_cast<size_t>(i)]) --refcount[ab];
        self(self, i + 1, cls, taken);
    };
    rec(rec, 0, LaurentPolynomial::one(n), 0);
    return total;
}

LaurentPolynomial restrict_k_via_nsum(const GrassIndex& alpha, const GrassIndex& beta) {
    check_pair(alpha, beta);
    int n = beta.n();
    LaurentPolynomial total(n);
    for (const SetValuedTableau& s : enumerate_ssvt(alpha.shape(), beta.shape())) {
        long long n_s = n_coefficient_closed_form(s);
        LaurentPolynomial cls = coordinate_subspace_class(s, beta);
        if (n_s == 1)
            total += cls;
        else
            total -= cls;
    }
    return total;
}

AuditReport positivity_audit(const GrassIndex& alpha, const GrassIndex& beta) {
    check_pair(alpha, beta);
    AuditReport report(alpha, beta);
    report.global_sign = alpha.length() % 2 == 0 ? 1 : -1;
    for (const SetValuedTableau& s : enumerate_ssvt(alpha.shape(), beta.shape())) {
        WeightedTerm term{s, entry_factors(s, beta)};
        for (const auto& [a, b] : term.factors) {
            ++report.factor_count;
            if (b <= a) report.all_positive = false;
        }
        report.terms.push_back(std::move(term));
    }
    return report;
}

bool consistency_lowest_degree(const GrassIndex& alpha, const GrassIndex& beta) {
    check_pair(alpha, beta);
    int sign = alpha.length() % 2 == 0 ? 1 : -1;
    std::vector<WeightFactorTerm> sum;
    for (const SetValuedTableau& s : enumerate_ssvt(alpha.shape(), beta.shape()))
        sum.push_back(WeightFactorTerm{sign, entry_factors(s, beta)});
    LaurentPolynomial lowest = lowest_degree_part(sum, beta.n(), alpha.length() + 1);
    return lowest == restrict_h(alpha, beta);
}

}  // namespace schubrest
