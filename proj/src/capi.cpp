#include "schubrest.h"

#include <cstring>
#include <new>
#include <string>

#include "serialize.hpp"
#include "verify.hpp"

struct sr_poly {
    schubrest::LaurentPolynomial value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
sr_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SR_OK;
    } catch (const std::overflow_error& e) {
        g_last_error = e.what();
        return SR_ERR_OVERFLOW;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SR_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SR_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SR_ERR_INTERNAL;
    }
}

schubrest::GrassIndex make_index(int d, int n, const int* entries) {
    if (entries == nullptr) throw std::invalid_argument("null subset pointer");
    return schubrest::GrassIndex(d, n, std::vector<int>(entries, entries + d));
}

std::vector<int> make_parts(const int* parts, int len) {
    if (len < 0 || (len > 0 && parts == nullptr))
        throw std::invalid_argument("null partition pointer");
    return std::vector<int>(parts, parts + len);
}

schubrest::OutputFormat make_format(sr_format f) {
    switch (f) {
        case SR_FORMAT_TEXT: return schubrest::OutputFormat::Text;
        case SR_FORMAT_LATEX: return schubrest::OutputFormat::Latex;
        case SR_FORMAT_JSON: return schubrest::OutputFormat::Json;
    }
    throw std::invalid_argument("unknown output format");
}

}  // namespace

extern "C" {

const char* sr_version(void) { return "0.1.0"; }

const char* sr_last_error(void) { return g_last_error.c_str(); }

void sr_string_free(char* s) { delete[] s; }

void sr_poly_free(sr_poly* p) { delete p; }

sr_status sr_restrict(int d, int n, const int* alpha, const int* beta, sr_theory theory,
                      sr_poly** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output pointer");
        schubrest::GrassIndex a = make_index(d, n, alpha);
        schubrest::GrassIndex b = make_index(d, n, beta);
        schubrest::LaurentPolynomial p =
            theory == SR_THEORY_K ? schubrest::restrict_k(a, b) : schubrest::restrict_h(a, b);
        *out = new sr_poly{std::move(p)};
    });
}

sr_status sr_restrict_document(int d, int n, const int* alpha, const int* beta, sr_theory theory,
                               sr_format format, int factored, char** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output pointer");
        if (alpha == nullptr || beta == nullptr) throw std::invalid_argument("null subset pointer");
        schubrest::RestrictRequest req;
        req.d = d;
        req.n = n;
        req.alpha.assign(alpha, alpha + d);
        req.beta.assign(beta, beta + d);
        req.theory = theory == SR_THEORY_K ? schubrest::Theory::K : schubrest::Theory::H;
        req.factored = factored != 0;
        *out = dup_string(schubrest::restrict_document(req, make_format(format)));
    });
}

sr_status sr_poly_format(const sr_poly* p, sr_format format, char** out) {
    return guarded([&] {
        if (p == nullptr || out == nullptr) throw std::invalid_argument("null pointer");
        switch (format) {
            case SR_FORMAT_TEXT: *out = dup_string(schubrest::to_text(p->value)); return;
            case SR_FORMAT_LATEX: *out = dup_string(schubrest::to_latex(p->value)); return;
            case SR_FORMAT_JSON: *out = dup_string(schubrest::to_json(p->value)); return;
        }
        throw std::invalid_argument("unknown output format");
    });
}

sr_status sr_poly_parse_json(const char* json_text, sr_poly** out) {
    return guarded([&] {
        if (json_text == nullptr || out == nullptr) throw std::invalid_argument("null pointer");
        *out = new sr_poly{schubrest::poly_from_json(json_text)};
    });
}

int sr_poly_equal(const sr_poly* a, const sr_poly* b) {
    if (a == nullptr || b == nullptr) return 0;
    return a->value == b->value ? 1 : 0;
}

int sr_poly_is_zero(const sr_poly* p) { return p != nullptr && p->value.is_zero() ? 1 : 0; }

sr_status sr_poly_term_count(const sr_poly* p, long long* out) {
    return guarded([&] {
        if (p == nullptr || out == nullptr) throw std::invalid_argument("null pointer");
        *out = static_cast<long long>(p->value.term_count());
    });
}

sr_status sr_enumerate_count(const char* model, const int* lambda, int lambda_len, const int* mu,
                             int mu_len, long long* out) {
    return guarded([&] {
        if (model == nullptr || out == nullptr) throw std::invalid_argument("null pointer");
        schubrest::EnumerateRequest req;
        req.model = schubrest::parse_model(model);
        req.lambda = make_parts(lambda, lambda_len);
        req.mu = make_parts(mu, mu_len);
        *out = schubrest::enumerate_count(req);
    });
}

sr_status sr_enumerate_document(const char* model, const int* lambda, int lambda_len, const int* mu,
                                int mu_len, sr_format format, int count_only, char** out) {
    return guarded([&] {
        if (model == nullptr || out == nullptr) throw std::invalid_argument("null pointer");
        schubrest::EnumerateRequest req;
        req.model = schubrest::parse_model(model);
        req.lambda = make_parts(lambda, lambda_len);
        req.mu = make_parts(mu, mu_len);
        req.count_only = count_only != 0;
        *out = dup_string(schubrest::enumerate_document(req, make_format(format)));
    });
}

sr_status sr_ladder_graph_dot(const char* model, const int* lambda, int lambda_len, const int* mu,
                              int mu_len, char** out) {
    return guarded([&] {
        if (model == nullptr || out == nullptr) throw std::invalid_argument("null pointer");
        schubrest::Partition lam(make_parts(lambda, lambda_len));
        schubrest::Partition pmu(make_parts(mu, mu_len));
        schubrest::LadderGraph g = schubrest::build_ladder_graph(
            schubrest::parse_model(model), lam.padded(pmu.size()), pmu);
        *out = dup_string(schubrest::graph_to_dot(g));
    });
}

sr_status sr_verify(int d, int n, const char* suite, char** report, int* failure_count) {
    int failures = 0;
    sr_status status = guarded([&] {
        if (suite == nullptr || report == nullptr) throw std::invalid_argument("null pointer");
        auto results = schubrest::run_suite(suite, d, n);
        for (const auto& r : results)
            if (!r.pass) ++failures;
        *report = dup_string(schubrest::format_report(results));
    });
    if (failure_count != nullptr) *failure_count = failures;
    if (status == SR_OK && failures > 0) return SR_ERR_VERIFY_FAILED;
    return status;
}

}  // extern "C"
