#pragma once

#include "path_model.hpp"
#include "restriction.hpp"

namespace schubrest {

enum class OutputFormat { Text, Latex, Json };
enum class Theory { K, H };
enum class Model { Ssyt, Ssvt, Paths, Subsets };

Model parse_model(const std::string& name);
Theory parse_theory(const std::string& name);

/// Directed ladder-move graph of one combinatorial model: nodes in canonical
/// order, edges as index pairs into the node list.
struct LadderGraph {
    std::vector<std::string> labels;              // canonical node labels
    std::vector<std::pair<int, int>> edges;       // sorted (from, to) index pairs
    int top = -1;                                 // index of the top element
};

LadderGraph build_ladder_graph(Model model, const Partition& lambda, const Partition& mu);
std::string graph_to_dot(const LadderGraph& g);

std::string tableau_label(const SetValuedTableau& s);
std::string subset_label(const DiagramSubset& d);
std::string family_label(const PathFamily& f);

std::string tableau_json(const SetValuedTableau& s);
std::string subset_json(const DiagramSubset& d);
std::string family_json(const PathFamily& f);

/// Full result document for a restriction request.
struct RestrictRequest {
    int d = 0;
    int n = 0;
    std::vector<int> alpha;
    std::vector<int> beta;
    Theory theory = Theory::K;
    bool factored = false;
};

std::string restrict_document(const RestrictRequest& req, OutputFormat format);

/// Listing or count of one model's objects.
struct EnumerateRequest {
    Model model = Model::Ssvt;
    std::vector<int> lambda;
    std::vector<int> mu;
    bool count_only = false;
};

long long enumerate_count(const EnumerateRequest& req);
std::string enumerate_document(const EnumerateRequest& req, OutputFormat format);

}  // namespace schubrest
