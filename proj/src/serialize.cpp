#include "serialize.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace schubrest {

using nlohmann::json;

Model parse_model(const std::string& name) {
    if (name == "ssyt") return Model::Ssyt;
    if (name == "ssvt") return Model::Ssvt;
    if (name == "paths") return Model::Paths;
    if (name == "subsets") return Model::Subsets;
    throw std::invalid_argument("unknown model: " + name);
}

Theory parse_theory(const std::string& name) {
    if (name == "k" || name == "K") return Theory::K;
    if (name == "h" || name == "H") return Theory::H;
    throw std::invalid_argument("unknown theory: " + name);
}

std::string tableau_label(const SetValuedTableau& s) { return to_string(s); }
std::string subset_label(const DiagramSubset& d) { return to_string(d); }
std::string family_label(const PathFamily& f) { return to_string(f); }

namespace {

json box_json(const Box& b) { return json::array({b.row, b.col}); }

json tableau_json_value(const SetValuedTableau& s) {
    json rows = json::array();
    for (int r = 1; r <= s.shape().size(); ++r) {
        json row = json::array();
        for (int c = 1; c <= s.shape().part(r); ++c) row.push_back(s.cell(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json subset_json_value(const DiagramSubset& d) {
    json boxes = json::array();
    for (const Box& b : d.boxes) boxes.push_back(box_json(b));
    return boxes;
}

json family_json_value(const PathFamily& f) {
    json paths = json::array();
    for (const auto& p : f.paths()) {
        json path = json::array();
        for (const Box& b : p.boxes()) path.push_back(box_json(b));
        paths.push_back(std::move(path));
    }
    return paths;
}

Partition parse_partition(const std::vector<int>& parts) { return Partition(parts); }

// lambda padded to the length of mu; rejects lambda longer than mu.
std::pair<Partition, Partition> normalized_shapes(const std::vector<int>& lambda,
                                                  const std::vector<int>& mu) {
    Partition pmu = parse_partition(mu);
    Partition plam = parse_partition(lambda);
    if (plam.size() > pmu.size()) {
        for (int i = pmu.size() + 1; i <= plam.size(); ++i)
            if (plam.part(i) != 0)
                throw std::invalid_argument("lambda has more parts than mu");
    }
    return {plam.padded(pmu.size()), pmu};
}

}  // namespace

std::string tableau_json(const SetValuedTableau& s) { return tableau_json_value(s).dump(); }
std::string subset_json(const DiagramSubset& d) { return subset_json_value(d).dump(); }
std::string family_json(const PathFamily& f) { return family_json_value(f).dump(); }

LadderGraph build_ladder_graph(Model model, const Partition& lambda, const Partition& mu) {
    if (model == Model::Ssvt)
        throw std::invalid_argument("ladder graphs are defined for ssyt, paths, subsets");
    if (!partition_leq(lambda, mu))
        throw std::invalid_argument("ladder graph requires lambda <= mu");
    LadderGraph g;
    auto finish = [&](auto&& nodes, auto&& moves_of, auto&& label_of, auto&& top_node) {
        std::map<std::decay_t<decltype(nodes[0])>, int> index;
        for (size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = static_cast<int>(i);
        for (const auto& node : nodes) g.labels.push_back(label_of(node));
        for (size_t i = 0; i < nodes.size(); ++i)
            for (const auto& next : moves_of(nodes[i]))
                g.edges.emplace_back(static_cast<int>(i), index.at(next));
        std::sort(g.edges.begin(), g.edges.end());
        g.top = index.at(top_node);
    };
    switch (model) {
        case Model::Ssyt: {
            auto nodes = enumerate_ssyt(lambda, mu);
            finish(
                nodes, [&](const SetValuedTableau& t) { return ladder_moves_ssyt(t, mu); },
                [](const SetValuedTableau& t) { return tableau_label(t); }, top_ssyt(lambda));
            break;
        }
        case Model::Paths: {
            auto nodes = enumerate_families(lambda, mu);
            finish(
                nodes, [&](const PathFamily& f) { return family_ladder_moves(f, mu); },
                [](const PathFamily& f) { return family_label(f); }, top_family(lambda, mu));
            break;
        }
        case Model::Subsets: {
            auto nodes = enumerate_subsets(lambda, mu);
            finish(
                nodes, [&](const DiagramSubset& d) { return subset_ladder_moves(d, mu); },
                [](const DiagramSubset& d) { return subset_label(d); }, top_subset(lambda, mu));
            break;
        }
        default:
            break;
    }
    return g;
}

std::string graph_to_dot(const LadderGraph& g) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"' || ch == '\\') out += '\\';
            out += ch;
        }
        return out + "\"";
    };
    std::string dot = "digraph ladder {\n";
    for (size_t i = 0; i < g.labels.size(); ++i) {
        dot += "  " + quote(g.labels[i]);
        if (static_cast<int>(i) == g.top) dot += " [shape=doublecircle]";
        dot += ";\n";
    }
    for (const auto& [from, to] : g.edges)
        dot += "  " + quote(g.labels[static_cast<size_t>(from)]) + " -> " +
               quote(g.labels[static_cast<size_t>(to)]) + ";\n";
    dot += "}\n";
    return dot;
}

namespace {

std::string factored_sum(const AuditReport& report, Theory theory, bool latex) {
    std::string out;
    bool first_term = true;
    for (const auto& term : report.terms) {
        if (theory == Theory::H && term.tableau.entry_count() != term.tableau.box_count())
            continue;  // cohomology sums over Young tableaux only
        if (!first_term) out += " + ";
        first_term = false;
        if (term.factors.empty()) out += "1";
        for (const auto& [a, b] : term.factors) {
            std::string sa = std::to_string(a);
            std::string sb = std::to_string(b);
            if (theory == Theory::K)
                out += latex ? "\\left(\\frac{t_{" + sb + "}}{t_{" + sa + "}}-1\\right)"
                             : "(t" + sb + "/t" + sa + "-1)";
            else
                out += latex ? "\\left(t_{" + sb + "}-t_{" + sa + "}\\right)"
                             : "(t" + sb + "-t" + sa + ")";
        }
    }
    if (first_term) return "0";
    // The global sign applies to the whole sum, bracketed as in -[...].
    if (theory == Theory::K && report.global_sign < 0)
        out = latex ? "-\\left[" + out + "\\right]" : "-[" + out + "]";
    return out;
}

std::string factored_text(const AuditReport& report, Theory theory) {
    return factored_sum(report, theory, false);
}

std::string factored_latex(const AuditReport& report, Theory theory) {
    return factored_sum(report, theory, true);
}

}  // namespace

std::string restrict_document(const RestrictRequest& req, OutputFormat format) {
    GrassIndex alpha(req.d, req.n, req.alpha);
    GrassIndex beta(req.d, req.n, req.beta);
    LaurentPolynomial result =
        req.theory == Theory::K ? restrict_k(alpha, beta) : restrict_h(alpha, beta);
    AuditReport report = positivity_audit(alpha, beta);

    if (format == OutputFormat::Text) {
        std::string out = to_text(result);
        if (req.factored) out += "\nfactored: " + factored_text(report, req.theory);
        return out;
    }
    if (format == OutputFormat::Latex) {
        return req.factored ? factored_latex(report, req.theory) : to_latex(result);
    }
    json doc;
    doc["request"] = {{"command", "restrict"},
                      {"d", req.d},
                      {"n", req.n},
                      {"alpha", req.alpha},
                      {"beta", req.beta},
                      {"theory", req.theory == Theory::K ? "k" : "h"}};
    doc["result"] = json::parse(to_json(result));
    doc["metadata"] = {{"lambda", alpha.shape().parts()},
                       {"mu", beta.shape().parts()},
                       {"length_alpha", alpha.length()},
                       {"ssvt_count", report.terms.size()},
                       {"text", to_text(result)},
                       {"latex", to_latex(result)}};
    if (req.factored) {
        json terms = json::array();
        for (const auto& term : report.terms) {
            json t;
            t["tableau"] = tableau_json_value(term.tableau);
            json factors = json::array();
            for (const auto& [a, b] : term.factors) factors.push_back({{"a", a}, {"b", b}});
            t["factors"] = std::move(factors);
            terms.push_back(std::move(t));
        }
        doc["factored"] = {{"global_sign", report.global_sign}, {"terms", std::move(terms)}};
    }
    return doc.dump(2);
}

long long enumerate_count(const EnumerateRequest& req) {
    auto [lambda, mu] = normalized_shapes(req.lambda, req.mu);
    switch (req.model) {
        case Model::Ssyt:
            return static_cast<long long>(enumerate_ssyt(lambda, mu).size());
        case Model::Ssvt:
            return static_cast<long long>(enumerate_ssvt(lambda, mu).size());
        case Model::Paths:
            return static_cast<long long>(enumerate_families(lambda, mu).size());
        case Model::Subsets:
            return static_cast<long long>(enumerate_subsets(lambda, mu).size());
    }
    throw std::logic_error("unreachable");
}

std::string enumerate_document(const EnumerateRequest& req, OutputFormat format) {
    auto [lambda, mu] = normalized_shapes(req.lambda, req.mu);
    std::vector<std::string> labels;
    std::vector<json> values;
    auto collect = [&](const auto& items, auto&& label_of, auto&& json_of) {
        for (const auto& item : items) {
            labels.push_back(label_of(item));
            values.push_back(json_of(item));
        }
    };
    switch (req.model) {
        case Model::Ssyt:
            collect(enumerate_ssyt(lambda, mu), [](const auto& t) { return tableau_label(t); },
                    [](const auto& t) { return tableau_json_value(t); });
            break;
        case Model::Ssvt:
            collect(enumerate_ssvt(lambda, mu), [](const auto& t) { return tableau_label(t); },
                    [](const auto& t) { return tableau_json_value(t); });
            break;
        case Model::Paths:
            collect(enumerate_families(lambda, mu), [](const auto& f) { return family_label(f); },
                    [](const auto& f) { return family_json_value(f); });
            break;
        case Model::Subsets:
            collect(enumerate_subsets(lambda, mu), [](const auto& d) { return subset_label(d); },
                    [](const auto& d) { return subset_json_value(d); });
            break;
    }
    if (format == OutputFormat::Json) {
        json doc;
        const char* names[] = {"ssyt", "ssvt", "paths", "subsets"};
        doc["request"] = {{"command", "enumerate"},
                          {"model", names[static_cast<int>(req.model)]},
                          {"lambda", lambda.parts()},
                          {"mu", mu.parts()}};
        doc["count"] = labels.size();
        if (!req.count_only) doc["items"] = values;
        return doc.dump(2);
    }
    if (req.count_only) return std::to_string(labels.size());
    std::string out;
    for (const auto& label : labels) {
        out += label;
        out += "\n";
    }
    if (!out.empty()) out.pop_back();
    return out;
}

}  // namespace schubrest
