#include "laurent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace schubrest {

namespace {

long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in +");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in *");
    return r;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents e(a.size());
    for (size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
    return e;
}

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("variable count must be nonnegative");
}

LaurentPolynomial LaurentPolynomial::constant(int nvars, long long c) {
    LaurentPolynomial p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(static_cast<size_t>(nvars), 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Exponents e, long long c) {
    LaurentPolynomial p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(int nvars, int i, int power) {
    if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
    Exponents e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i) - 1] = power;
    return monomial(std::move(e), 1);
}

long long LaurentPolynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

bool LaurentPolynomial::is_constant(long long c) const {
    return *this == constant(nvars_, c);
}

void LaurentPolynomial::add_term(const Exponents& e, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, checked_mul(c, -1));
    return p;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
    LaurentPolynomial p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) p.add_term(add_exponents(ea, eb), checked_mul(ca, cb));
    return p;
}

LaurentPolynomial k_weight_factor(int nvars, int a, int b) {
    Exponents e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(b) - 1] += 1;
    e[static_cast<size_t>(a) - 1] -= 1;
    return LaurentPolynomial::one(nvars) - LaurentPolynomial::monomial(std::move(e), 1);
}

LaurentPolynomial h_weight_factor(int nvars, int a, int b) {
    return LaurentPolynomial::variable(nvars, b) - LaurentPolynomial::variable(nvars, a);
}

TruncatedSeries::TruncatedSeries(int nvars, int cutoff) : nvars_(nvars), cutoff_(cutoff) {
    if (nvars < 0 || cutoff < 0) throw std::invalid_argument("bad truncated series parameters");
}

TruncatedSeries TruncatedSeries::one(int nvars, int cutoff) {
    TruncatedSeries s(nvars, cutoff);
    s.terms_.emplace(Exponents(static_cast<size_t>(nvars), 0), 1);
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const LaurentPolynomial& p, int cutoff) {
    TruncatedSeries s(p.nvars(), cutoff);
    for (const auto& [e, c] : p.terms()) {
        for (int x : e)
            if (x < 0) throw std::invalid_argument("truncated series exponents must be nonnegative");
        if (total_degree(e) <= cutoff) s.terms_.emplace(e, c);
    }
    return s;
}

void TruncatedSeries::add_term(const Exponents& e, long long c) {
    if (c == 0 || total_degree(e) > cutoff_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (nvars_ != o.nvars_ || cutoff_ != o.cutoff_)
        throw std::invalid_argument("truncated series shape mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.nvars_ != b.nvars_ || a.cutoff_ != b.cutoff_)
        throw std::invalid_argument("truncated series shape mismatch");
    TruncatedSeries s(a.nvars_, a.cutoff_);
    for (const auto& [ea, ca] : a.terms_) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > a.cutoff_) continue;
            s.add_term(add_exponents(ea, eb), checked_mul(ca, cb));
        }
    }
    return s;
}

LaurentPolynomial TruncatedSeries::lowest_degree_component() const {
    LaurentPolynomial out(nvars_);
    if (terms_.empty()) return out;
    int best = cutoff_ + 1;
    for (const auto& [e, c] : terms_) best = std::min(best, total_degree(e));
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == best) out += LaurentPolynomial::monomial(e, c);
    return out;
}

LaurentPolynomial lowest_degree_part(const std::vector<WeightFactorTerm>& sum, int nvars,
                                     int cutoff) {
    if (!sum.empty()) {
        size_t min_factors = sum.front().factors.size();
        for (const auto& t : sum) min_factors = std::min(min_factors, t.factors.size());
        if (cutoff < static_cast<int>(min_factors))
            throw std::invalid_argument("lowest_degree_part: cutoff below the answer's degree");
    }
    TruncatedSeries acc(nvars, cutoff);
    for (const auto& term : sum) {
        TruncatedSeries prod =
            TruncatedSeries::from_polynomial(LaurentPolynomial::constant(nvars, term.sign), cutoff);
        for (const auto& [a, b] : term.factors) {
            // (t_b/t_a - 1) at t -> 1 - s equals (s_a - s_b) / (1 - s_a).
            LaurentPolynomial head =
                LaurentPolynomial::variable(nvars, a) - LaurentPolynomial::variable(nvars, b);
            LaurentPolynomial geo(nvars);
            for (int k = 0; k <= cutoff; ++k) geo += LaurentPolynomial::variable(nvars, a, k);
            prod = prod * TruncatedSeries::from_polynomial(head * geo, cutoff);
        }
        acc += prod;
    }
    return acc.lowest_degree_component();
}

namespace {

std::string monomial_text(const Exponents& e, bool latex) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += latex ? " " : "*";
        if (latex) {
            s += "t_{" + std::to_string(i + 1) + "}";
            if (e[i] != 1) s += "^{" + std::to_string(e[i]) + "}";
        } else {
            s += "t" + std::to_string(i + 1);
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

std::string render(const LaurentPolynomial& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        long long mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono = monomial_text(e, latex);
        if (mono.empty()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + (latex ? " " : "*");
            out += mono;
        }
    }
    return out;
}

}  // namespace

std::string to_text(const LaurentPolynomial& p) { return render(p, false); }

std::string to_latex(const LaurentPolynomial& p) { return render(p, true); }

std::string to_json(const LaurentPolynomial& p) {
    nlohmann::json doc;
    doc["n"] = p.nvars();
    doc["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json term;
        term["exponents"] = e;
        term["coeff"] = c;
        doc["terms"].push_back(std::move(term));
    }
    return doc.dump();
}

LaurentPolynomial poly_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad polynomial JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("terms"))
        throw std::invalid_argument("polynomial JSON must carry \"n\" and \"terms\"");
    try {
        int n = doc.at("n").get<int>();
        LaurentPolynomial p(n);
        for (const auto& term : doc.at("terms")) {
            Exponents e = term.at("exponents").get<Exponents>();
            if (static_cast<int>(e.size()) != n)
                throw std::invalid_argument("exponent vector length does not match n");
            long long c = term.at("coeff").get<long long>();
            p += LaurentPolynomial::monomial(std::move(e), c);
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad polynomial JSON: ") + e.what());
    }
}

}  // namespace schubrest
