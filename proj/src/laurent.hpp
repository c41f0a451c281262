#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace schubrest {

/// Dense exponent vector of fixed length n; entries may be negative.
using Exponents = std::vector<int>;

/// Exact integer-coefficient Laurent polynomial in t_1..t_n. Coefficients are
/// 64-bit and every arithmetic step is overflow-checked; terms are kept in
/// lexicographic order on the exponent vector, which is the canonical order
/// for serialization.
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(int nvars);

    static LaurentPolynomial zero(int nvars) { return LaurentPolynomial(nvars); }
    static LaurentPolynomial constant(int nvars, long long c);
    static LaurentPolynomial one(int nvars) { return constant(nvars, 1); }
    static LaurentPolynomial monomial(Exponents e, long long c);
    /// t_i^power, 1-based i.
    static LaurentPolynomial variable(int nvars, int i, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, long long>& terms() const { return terms_; }
    long long coeff(const Exponents& e) const;
    bool is_constant(long long c) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial operator-() const;
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a += b;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a -= b;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    void add_term(const Exponents& e, long long c);

    int nvars_ = 0;
    std::map<Exponents, long long> terms_;
};

/// 1 - t_b / t_a: the K-class factor of a coordinate with weight t_b / t_a.
LaurentPolynomial k_weight_factor(int nvars, int a, int b);

/// t_b - t_a: the degree-one cohomology weight factor.
LaurentPolynomial h_weight_factor(int nvars, int a, int b);

/// Power series in s_1..s_n truncated beyond total degree `cutoff`;
/// multiplication discards everything above the cutoff.
class TruncatedSeries {
public:
    TruncatedSeries(int nvars, int cutoff);

    static TruncatedSeries zero(int nvars, int cutoff) { return TruncatedSeries(nvars, cutoff); }
    static TruncatedSeries one(int nvars, int cutoff);
    /// Exact polynomial to truncated series (drops high-degree terms).
    static TruncatedSeries from_polynomial(const LaurentPolynomial& p, int cutoff);

    int nvars() const { return nvars_; }
    int cutoff() const { return cutoff_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, long long>& terms() const { return terms_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    /// The homogeneous component of lowest total degree, as a polynomial;
    /// zero if the series is zero.
    LaurentPolynomial lowest_degree_component() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void add_term(const Exponents& e, long long c);

    int nvars_ = 0;
    int cutoff_ = 0;
    std::map<Exponents, long long> terms_;
};

/// One summand of a restriction expressed as sign times a product of
/// K-factors (t_b/t_a - 1), kept unexpanded as the (a, b) index pairs.
struct WeightFactorTerm {
    int sign = 1;  // +1 or -1
    std::vector<std::pair<int, int>> factors;
};

/// Substitutes t_i -> 1 - s_i factorwise into the given signed sum of
/// K-factor products, multiplies in truncated arithmetic, and returns the
/// homogeneous component of minimal total degree. Each factor
/// (t_b/t_a - 1) becomes (s_a - s_b) times the geometric series of
/// 1/(1 - s_a). Throws if the cutoff is below the smallest factor count,
/// which would truncate the answer away.
LaurentPolynomial lowest_degree_part(const std::vector<WeightFactorTerm>& sum, int nvars,
                                     int cutoff);

/// Canonical human-readable form: terms in canonical order, explicit signs.
std::string to_text(const LaurentPolynomial& p);
/// Expanded LaTeX form, canonical term order.
std::string to_latex(const LaurentPolynomial& p);
/// JSON term map: {"n": int, "terms": [{"exponents": [...], "coeff": c}, ...]}.
std::string to_json(const LaurentPolynomial& p);
/// Inverse of to_json; accepts any term order, normalizes.
LaurentPolynomial poly_from_json(const std::string& text);

}  // namespace schubrest
