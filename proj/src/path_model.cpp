#include "path_model.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace schubrest {

LatticePath::LatticePath(std::vector<Box> boxes, const Partition& mu) : boxes_(std::move(boxes)) {
    if (boxes_.empty()) throw std::invalid_argument("path must contain at least one box");
    for (size_t i = 0; i < boxes_.size(); ++i) {
        if (!mu.contains(boxes_[i])) throw std::invalid_argument("path box outside D_mu");
        if (i > 0) {
            const Box& prev = boxes_[i - 1];
            const Box& cur = boxes_[i];
            bool up = cur.row == prev.row - 1 && cur.col == prev.col;
            bool right = cur.row == prev.row && cur.col == prev.col + 1;
            if (!up && !right) throw std::invalid_argument("path steps must move up or right");
        }
    }
    if (mu.contains(start().row + 1, start().col))
        throw std::invalid_argument("path must begin on the lowest box of a column");
    if (mu.contains(end().row, end().col + 1))
        throw std::invalid_argument("path must end on the rightmost box of a row");
}

PathFamily::PathFamily(std::vector<LatticePath> paths) : paths_(std::move(paths)) {
    std::sort(paths_.begin(), paths_.end(),
              [](const LatticePath& a, const LatticePath& b) { return a.glb() < b.glb(); });
    std::set<Box> seen;
    for (const auto& p : paths_)
        for (const Box& b : p.boxes())
            if (!seen.insert(b).second)
                throw std::invalid_argument("paths of a family must be box-disjoint");
}

std::vector<Box> PathFamily::support() const {
    std::vector<Box> out;
    for (const auto& p : paths_) out.insert(out.end(), p.boxes().begin(), p.boxes().end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Box> PathFamily::twist() const {
    std::vector<Box> out;
    out.reserve(paths_.size());
    for (const auto& p : paths_) out.push_back(p.glb());
    std::sort(out.begin(), out.end());
    return out;
}

DiagramSubset::DiagramSubset(std::vector<Box> b) : boxes(std::move(b)) {
    std::sort(boxes.begin(), boxes.end());
    if (std::adjacent_find(boxes.begin(), boxes.end()) != boxes.end())
        throw std::invalid_argument("duplicate box in diagram subset");
}

namespace {

std::set<Box> skew_boxes(const Partition& inner, const Partition& outer) {
    std::set<Box> out;
    for (int r = 1; r <= outer.size(); ++r)
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) out.insert(Box{r, c});
    return out;
}

}  // namespace

PathFamily top_family(const Partition& lambda, const Partition& mu) {
    if (!partition_leq(lambda, mu)) throw std::invalid_argument("top_family requires lambda <= mu");
    Partition inner = lambda.padded(mu.size());
    std::vector<LatticePath> paths;
    while (inner != mu) {
        std::set<Box> skew = skew_boxes(inner, mu);
        // Upper-left boundary layer: boxes whose upper-left diagonal neighbor
        // is outside the skew shape.
        std::set<Box> layer;
        for (const Box& b : skew)
            if (!skew.count(Box{b.row - 1, b.col - 1})) layer.insert(b);
        // Split the layer into maximal up/right walks; each is one path.
        std::set<Box> remaining = layer;
        while (!remaining.empty()) {
            // A walk start has no predecessor (below or left) inside the layer.
            Box start{0, 0};
            bool found = false;
            for (const Box& b : remaining) {
                if (!layer.count(Box{b.row + 1, b.col}) && !layer.count(Box{b.row, b.col - 1})) {
                    start = b;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("top_family: boundary layer has no walk start");
            std::vector<Box> walk{start};
            remaining.erase(start);
            for (;;) {
                const Box& cur = walk.back();
                Box up{cur.row - 1, cur.col};
                Box right{cur.row, cur.col + 1};
                if (layer.count(up)) {
                    walk.push_back(up);
                    remaining.erase(up);
                } else if (layer.count(right)) {
                    walk.push_back(right);
                    remaining.erase(right);
                } else {
                    break;
                }
            }
            paths.emplace_back(std::move(walk), mu);
        }
        // The layer extends the inner shape to a larger partition.
        std::vector<int> grown(static_cast<size_t>(mu.size()));
        for (int r = 1; r <= mu.size(); ++r) {
            int add = 0;
            for (const Box& b : layer)
                if (b.row == r) ++add;
            grown[static_cast<size_t>(r) - 1] = inner.part(r) + add;
        }
        inner = Partition(std::move(grown));
    }
    PathFamily f{std::move(paths)};
    std::set<Box> expected = skew_boxes(lambda.padded(mu.size()), mu);
    if (f.support() != std::vector<Box>(expected.begin(), expected.end()))
        throw std::logic_error("top_family: support mismatch");
    return f;
}

namespace {

// Backtracking reconstruction of a family from its support. Boxes are
// processed bottom row first, left to right, so that both potential
// predecessors of a box (below, left) are settled before the box itself.
// succ values: 0 = up, 1 = right, 2 = path ends here.
struct Decomposer {
    const Partition& mu;
    std::vector<Box> order;
    std::set<Box> in_support;
    std::map<Box, int> index_of;
    std::vector<int> succ;
    std::vector<char> claimed;
    int solutions = 0;
    int solution_cap;
    std::optional<PathFamily> first;

    Decomposer(const std::vector<Box>& support, const Partition& m, int cap)
        : mu(m), in_support(support.begin(), support.end()), solution_cap(cap) {
        order.assign(in_support.begin(), in_support.end());
        std::sort(order.begin(), order.end(), [](const Box& a, const Box& b) {
            return a.row != b.row ? a.row > b.row : a.col < b.col;
        });
        for (size_t i = 0; i < order.size(); ++i) index_of[order[i]] = static_cast<int>(i);
        succ.assign(order.size(), -1);
        claimed.assign(order.size(), 0);
    }

    void record() {
        ++solutions;
        if (first) return;
        std::vector<LatticePath> paths;
        for (size_t i = 0; i < order.size(); ++i) {
            if (claimed[i]) continue;  // not a path start
            std::vector<Box> walk;
            size_t cur = i;
            for (;;) {
                walk.push_back(order[cur]);
                if (succ[cur] == 2) break;
                Box next = succ[cur] == 0 ? Box{order[cur].row - 1, order[cur].col}
                                          : Box{order[cur].row, order[cur].col + 1};
                cur = static_cast<size_t>(index_of.at(next));
            }
            paths.emplace_back(std::move(walk), mu);
        }
        first = PathFamily(std::move(paths));
    }

    void solve(size_t i) {
        if (solutions >= solution_cap) return;
        if (i == order.size()) {
            record();
            return;
        }
        const Box& b = order[i];
        if (!claimed[i] && mu.contains(b.row + 1, b.col)) return;  // not a column bottom
        Box up{b.row - 1, b.col};
        Box right{b.row, b.col + 1};
        auto try_link = [&](const Box& target, int code) {
            auto it = index_of.find(target);
            if (it == index_of.end()) return;
            size_t t = static_cast<size_t>(it->second);
            if (claimed[t]) return;
            claimed[t] = 1;
            succ[i] = code;
            solve(i + 1);
            claimed[t] = 0;
            succ[i] = -1;
        };
        try_link(up, 0);
        try_link(right, 1);
        if (!mu.contains(right)) {
            succ[i] = 2;
            solve(i + 1);
            succ[i] = -1;
        }
    }
};

}  // namespace

std::optional<PathFamily> decompose_support(const std::vector<Box>& support, const Partition& mu) {
    for (const Box& b : support)
        if (!mu.contains(b)) return std::nullopt;
    Decomposer dec(support, mu, 1);
    dec.solve(0);
    return dec.first;
}

int count_support_decompositions(const std::vector<Box>& support, const Partition& mu) {
    for (const Box& b : support)
        if (!mu.contains(b)) return 0;
    Decomposer dec(support, mu, 1 << 20);
    dec.solve(0);
    return dec.solutions;
}

std::vector<PathFamily> family_ladder_moves(const PathFamily& f, const Partition& mu) {
    std::vector<Box> supp = f.support();
    std::set<Box> in(supp.begin(), supp.end());
    std::vector<PathFamily> out;
    for (int i = 1; i + 1 <= mu.size(); ++i) {
        for (int j = 1; j + 1 <= mu.part(i + 1); ++j) {
            if (!mu.contains(i, j + 1)) continue;  // square fully inside D_mu
            Box nw{i, j}, sw{i + 1, j}, ne{i, j + 1}, se{i + 1, j + 1};
            if (in.count(nw) || !in.count(sw) || !in.count(ne) || !in.count(se)) continue;
            std::vector<Box> moved;
            moved.reserve(supp.size());
            for (const Box& b : supp)
                if (!(b == se)) moved.push_back(b);
            moved.push_back(nw);
            std::sort(moved.begin(), moved.end());
            auto g = decompose_support(moved, mu);
            if (!g) throw std::logic_error("family ladder move produced an invalid support");
            out.push_back(std::move(*g));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PathFamily> enumerate_families(const Partition& lambda, const Partition& mu) {
    PathFamily start = top_family(lambda, mu);
    std::map<std::vector<Box>, PathFamily> seen;
    seen.emplace(start.support(), start);
    std::queue<PathFamily> work;
    work.push(start);
    while (!work.empty()) {
        PathFamily cur = std::move(work.front());
        work.pop();
        for (auto& next : family_ladder_moves(cur, mu)) {
            auto key = next.support();
            if (seen.emplace(key, next).second) work.push(std::move(next));
        }
    }
    std::vector<PathFamily> out;
    out.reserve(seen.size());
    for (auto& [key, fam] : seen) out.push_back(fam);
    return out;  // map order = canonical order by support
}

std::vector<PathFamily> enumerate_families_by_twist(const Partition& lambda, const Partition& mu) {
    std::vector<Box> all = mu.boxes();
    if (all.size() > 22)
        throw std::invalid_argument("enumerate_families_by_twist: diagram too large for brute force");
    std::vector<Box> target = top_family(lambda, mu).twist();
    std::vector<PathFamily> out;
    for (unsigned long long mask = 0; mask < (1ull << all.size()); ++mask) {
        std::vector<Box> support;
        for (size_t i = 0; i < all.size(); ++i)
            if (mask & (1ull << i)) support.push_back(all[i]);
        auto fam = decompose_support(support, mu);
        if (fam && fam->twist() == target) out.push_back(std::move(*fam));
    }
    std::sort(out.begin(), out.end(),
              [](const PathFamily& a, const PathFamily& b) { return a.support() < b.support(); });
    return out;
}

bool is_twisted_chain(const std::vector<Box>& boxes, const Partition& mu) {
    for (const Box& b : boxes)
        if (!mu.contains(b)) return false;
    for (size_t i = 0; i < boxes.size(); ++i) {
        for (size_t j = i + 1; j < boxes.size(); ++j) {
            const Box& p = boxes[i];
            const Box& q = boxes[j];
            if (p.row == q.row || p.col == q.col) return false;
            if (box_below_eq(p, q) || box_below_eq(q, p)) continue;
            // Incomparable: the least upper bound must fall outside D_mu.
            if (mu.contains(std::max(p.row, q.row), std::max(p.col, q.col))) return false;
        }
    }
    return true;
}

TwistedChain twisted_chain_target(const Partition& lambda, const Partition& mu, int d, int n) {
    GrassIndex beta = GrassIndex::from_shape(mu, d, n);
    GrassIndex alpha = GrassIndex::from_shape(lambda, d, n);
    std::vector<Box> chain = top_family(lambda.padded(d), mu.padded(d)).twist();

    std::set<int> entries(beta.entries().begin(), beta.entries().end());
    std::vector<int> comp = beta.complement();
    for (const Box& b : chain) {
        int removed = beta.entry(d + 1 - b.row);
        int added = comp.at(static_cast<size_t>(b.col) - 1);
        if (!entries.erase(removed))
            throw std::logic_error("twisted chain reconstruction: entry removed twice");
        if (!entries.insert(added).second)
            throw std::logic_error("twisted chain reconstruction: entry added twice");
    }
    std::vector<int> rebuilt(entries.begin(), entries.end());
    if (rebuilt != alpha.entries())
        throw std::logic_error("twisted chain reconstruction does not recover alpha");
    return TwistedChain{std::move(chain)};
}

DiagramSubset top_subset(const Partition& lambda, const Partition& mu) {
    if (!partition_leq(lambda, mu)) throw std::invalid_argument("top_subset requires lambda <= mu");
    return DiagramSubset(lambda.boxes());
}

std::vector<DiagramSubset> subset_ladder_moves(const DiagramSubset& d, const Partition& mu) {
    std::set<Box> in(d.boxes.begin(), d.boxes.end());
    std::vector<DiagramSubset> out;
    for (const Box& b : d.boxes) {
        Box sw{b.row + 1, b.col}, ne{b.row, b.col + 1}, se{b.row + 1, b.col + 1};
        if (!mu.contains(se) || !mu.contains(sw) || !mu.contains(ne)) continue;
        if (in.count(sw) || in.count(ne) || in.count(se)) continue;
        std::vector<Box> moved;
        moved.reserve(d.boxes.size());
        for (const Box& x : d.boxes)
            if (!(x == b)) moved.push_back(x);
        moved.push_back(se);
        out.emplace_back(std::move(moved));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DiagramSubset> enumerate_subsets(const Partition& lambda, const Partition& mu) {
    DiagramSubset start = top_subset(lambda, mu);
    std::set<DiagramSubset> seen{start};
    std::queue<DiagramSubset> work;
    work.push(start);
    while (!work.empty()) {
        DiagramSubset cur = std::move(work.front());
        work.pop();
        for (auto& next : subset_ladder_moves(cur, mu))
            if (seen.insert(next).second) work.push(std::move(next));
    }
    return std::vector<DiagramSubset>(seen.begin(), seen.end());
}

DiagramSubset family_to_subset(const PathFamily& f, const Partition& mu) {
    std::set<Box> supp;
    for (const Box& b : f.support()) supp.insert(b);
    std::vector<Box> rest;
    for (const Box& b : mu.boxes())
        if (!supp.count(b)) rest.push_back(b);
    return DiagramSubset(std::move(rest));
}

DiagramSubset ssyt_to_subset(const SetValuedTableau& p, const Partition& mu) {
    if (!p.is_young()) throw std::invalid_argument("ssyt_to_subset expects a Young tableau");
    std::vector<Box> out;
    p.for_each_entry([&](int x, int r, int c) {
        Box b{x, x - r + c};
        if (!mu.contains(b)) throw std::invalid_argument("tableau is not on mu");
        out.push_back(b);
    });
    return DiagramSubset(std::move(out));
}

SetValuedTableau subset_to_ssyt(const DiagramSubset& d, const Partition& lambda,
                                const Partition& mu) {
    // f preserves the diagonal col - row and entries increase strictly down
    // a diagonal, so sorting the rows within each diagonal inverts f.
    std::map<int, std::vector<int>> diag_entries;
    for (const Box& b : d.boxes) diag_entries[b.col - b.row].push_back(b.row);

    std::map<int, std::vector<Box>> diag_targets;
    for (const Box& b : lambda.boxes()) diag_targets[b.col - b.row].push_back(b);

    if (diag_entries.size() != diag_targets.size())
        throw std::invalid_argument("subset has no preimage of the given shape");
    std::vector<std::vector<Cell>> rows(static_cast<size_t>(lambda.size()));
    for (int r = 1; r <= lambda.size(); ++r)
        rows[static_cast<size_t>(r) - 1].resize(static_cast<size_t>(lambda.part(r)));
    for (auto& [k, xs] : diag_entries) {
        auto it = diag_targets.find(k);
        if (it == diag_targets.end() || it->second.size() != xs.size())
            throw std::invalid_argument("subset has no preimage of the given shape");
        std::sort(xs.begin(), xs.end());
        std::sort(it->second.begin(), it->second.end());
        for (size_t i = 0; i < xs.size(); ++i) {
            const Box& target = it->second[i];
            rows[static_cast<size_t>(target.row) - 1][static_cast<size_t>(target.col) - 1] =
                Cell{xs[i]};
        }
    }
    SetValuedTableau result(lambda, std::move(rows));
    if (!is_semistandard(result) || !is_on_mu(result, mu) || !(ssyt_to_subset(result, mu) == d))
        throw std::invalid_argument("subset has no semistandard preimage on mu");
    return result;
}

std::string to_string(const LatticePath& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.boxes().size(); ++i) {
        if (i > 0) s += " ";
        s += to_string(p.boxes()[i]);
    }
    return s + "]";
}

std::string to_string(const PathFamily& f) {
    std::string s = "{";
    for (size_t i = 0; i < f.paths().size(); ++i) {
        if (i > 0) s += " ";
        s += to_string(f.paths()[i]);
    }
    return s + "}";
}

std::string to_string(const DiagramSubset& d) {
    std::string s = "[";
    for (size_t i = 0; i < d.boxes.size(); ++i) {
        if (i > 0) s += " ";
        s += to_string(d.boxes[i]);
    }
    return s + "]";
}

}  // namespace schubrest
