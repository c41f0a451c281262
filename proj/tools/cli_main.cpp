// Command-line front end. Links the C API only, exactly like an external
// consumer of the shared library would.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schubrest.h"

namespace {

// Comma-separated list of integers, e.g. "1,3,5" or "0".
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw CLI::ValidationError("empty entry in integer list");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if ((ch >= '0' && ch <= '9') || ch == '-' || ch == '+') {
            cur += ch;
        } else {
            throw CLI::ValidationError("bad character in integer list");
        }
    }
    return out;
}

sr_format parse_format(const std::string& name) {
    if (name == "text") return SR_FORMAT_TEXT;
    if (name == "latex") return SR_FORMAT_LATEX;
    if (name == "json") return SR_FORMAT_JSON;
    throw CLI::ValidationError("unknown format: " + name);
}

int fail_with(sr_status status) {
    std::fprintf(stderr, "error: %s\n", sr_last_error());
    if (status == SR_ERR_INVALID_ARGUMENT || status == SR_ERR_LIMIT) return 2;
    return 1;
}

int emit(char* text) {
    std::printf("%s\n", text);
    sr_string_free(text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restrictions of Grassmannian Schubert classes to torus-fixed points "
                 "in equivariant K-theory and cohomology, with the set-valued tableau, "
                 "path-family and diagram-subset models"};
    app.require_subcommand(1);

    // restrict
    int d = 0, n = 0;
    std::string alpha_text, beta_text, theory = "k", format = "text";
    bool factored = false;
    CLI::App* restrict_cmd = app.add_subcommand("restrict", "Restrict a Schubert class");
    restrict_cmd->add_option("--d", d, "Dimension d")->required();
    restrict_cmd->add_option("--n", n, "Ambient dimension n")->required();
    restrict_cmd->add_option("--alpha", alpha_text, "Schubert index, comma list")->required();
    restrict_cmd->add_option("--beta", beta_text, "Fixed point index, comma list")->required();
    restrict_cmd->add_option("--theory", theory, "k or h (default k)");
    restrict_cmd->add_option("--format", format, "text, latex or json (default text)");
    restrict_cmd->add_flag("--factored", factored, "Include the factored sum over tableaux");

    // enumerate
    std::string model = "ssvt", lambda_text, mu_text, enum_format = "text";
    bool count_only = false;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "List or count model objects");
    enum_cmd->add_option("--model", model, "ssyt, ssvt, paths or subsets")->required();
    enum_cmd->add_option("--lambda", lambda_text, "Shape partition, comma list")->required();
    enum_cmd->add_option("--mu", mu_text, "Bounding partition, comma list")->required();
    enum_cmd->add_option("--format", enum_format, "text or json (default text)");
    enum_cmd->add_flag("--count-only", count_only, "Print only the count");

    // graph
    std::string graph_model, graph_lambda, graph_mu;
    CLI::App* graph_cmd = app.add_subcommand("graph", "Ladder-move graph as DOT");
    graph_cmd->add_option("--model", graph_model, "ssyt, paths or subsets")->required();
    graph_cmd->add_option("--lambda", graph_lambda, "Shape partition, comma list")->required();
    graph_cmd->add_option("--mu", graph_mu, "Bounding partition, comma list")->required();

    // verify
    int vd = 0, vn = 0;
    std::string suite = "all";
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification sweeps over I_{d,n}");
    verify_cmd->add_option("--d", vd, "Dimension d")->required();
    verify_cmd->add_option("--n", vn, "Ambient dimension n")->required();
    verify_cmd->add_option("--suite", suite, "all, oracles, bijections, nsum or positivity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (restrict_cmd->parsed()) {
            std::vector<int> alpha = parse_int_list(alpha_text);
            std::vector<int> beta = parse_int_list(beta_text);
            if (static_cast<int>(alpha.size()) != d || static_cast<int>(beta.size()) != d) {
                std::fprintf(stderr, "error: --alpha and --beta must have exactly d entries\n");
                return 2;
            }
            sr_theory th = (theory == "h" || theory == "H") ? SR_THEORY_H : SR_THEORY_K;
            if (theory != "k" && theory != "K" && theory != "h" && theory != "H") {
                std::fprintf(stderr, "error: --theory must be k or h\n");
                return 2;
            }
            char* text = nullptr;
            sr_status status = sr_restrict_document(d, n, alpha.data(), beta.data(), th,
                                                    parse_format(format), factored ? 1 : 0, &text);
            if (status != SR_OK) return fail_with(status);
            return emit(text);
        }
        if (enum_cmd->parsed()) {
            std::vector<int> lambda = parse_int_list(lambda_text);
            std::vector<int> mu = parse_int_list(mu_text);
            char* text = nullptr;
            sr_status status = sr_enumerate_document(
                model.c_str(), lambda.data(), static_cast<int>(lambda.size()), mu.data(),
                static_cast<int>(mu.size()), parse_format(enum_format), count_only ? 1 : 0, &text);
            if (status != SR_OK) return fail_with(status);
            return emit(text);
        }
        if (graph_cmd->parsed()) {
            std::vector<int> lambda = parse_int_list(graph_lambda);
            std::vector<int> mu = parse_int_list(graph_mu);
            char* text = nullptr;
            sr_status status = sr_ladder_graph_dot(graph_model.c_str(), lambda.data(),
                                                   static_cast<int>(lambda.size()), mu.data(),
                                                   static_cast<int>(mu.size()), &text);
            if (status != SR_OK) return fail_with(status);
            std::printf("%s", text);  // DOT text already ends with a newline
            sr_string_free(text);
            return 0;
        }
        if (verify_cmd->parsed()) {
            char* report = nullptr;
            int failures = 0;
            sr_status status = sr_verify(vd, vn, suite.c_str(), &report, &failures);
            if (report != nullptr) {
                std::printf("%s\n", report);
                sr_string_free(report);
            }
            if (status == SR_OK) return 0;
            if (status == SR_ERR_VERIFY_FAILED) return 1;
            return fail_with(status);
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
