#include "tableau.hpp"

#include <algorithm>
#include <set>

namespace schubrest {

SetValuedTableau::SetValuedTableau(Partition shape, std::vector<std::vector<Cell>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    // Trailing zero rows of the shape need no cell storage.
    size_t need = 0;
    while (need < static_cast<size_t>(shape_.size()) && shape_.part(static_cast<int>(need) + 1) > 0)
        ++need;
    if (rows_.size() < need || rows_.size() > static_cast<size_t>(shape_.size()))
        throw std::invalid_argument("tableau rows do not match shape");
    rows_.resize(static_cast<size_t>(shape_.size()));
    for (int r = 1; r <= shape_.size(); ++r) {
        auto& row = rows_[static_cast<size_t>(r) - 1];
        if (static_cast<int>(row.size()) != shape_.part(r))
            throw std::invalid_argument("tableau row length does not match shape");
        for (auto& c : row) {
            if (c.empty()) throw std::invalid_argument("tableau cells must be nonempty");
            for (size_t i = 0; i < c.size(); ++i) {
                if (c[i] < 1) throw std::invalid_argument("tableau entries must be positive");
                if (i > 0 && c[i] <= c[i - 1])
                    throw std::invalid_argument("tableau cells must be sorted sets");
            }
        }
    }
}

SetValuedTableau SetValuedTableau::young(const Partition& shape,
                                         const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Cell>> cells(rows.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (int v : rows[r]) cells[r].push_back(Cell{v});
    return SetValuedTableau(shape, std::move(cells));
}

int SetValuedTableau::entry_count() const {
    int total = 0;
    for (const auto& row : rows_)
        for (const auto& c : row) total += static_cast<int>(c.size());
    return total;
}

SetValuedTableau SetValuedTableau::with_cell(int row, int col, Cell value) const {
    auto rows = rows_;
    rows.at(static_cast<size_t>(row) - 1).at(static_cast<size_t>(col) - 1) = std::move(value);
    return SetValuedTableau(shape_, std::move(rows));
}

GeneralizedTableau tableau_difference(const SetValuedTableau& s, const SetValuedTableau& r) {
    if (s.shape() != r.shape()) throw std::invalid_argument("tableau shapes differ");
    GeneralizedTableau out;
    out.shape = s.shape();
    out.rows.resize(s.rows().size());
    for (size_t i = 0; i < s.rows().size(); ++i) {
        out.rows[i].resize(s.rows()[i].size());
        for (size_t j = 0; j < s.rows()[i].size(); ++j) {
            std::set_difference(s.rows()[i][j].begin(), s.rows()[i][j].end(),
                                r.rows()[i][j].begin(), r.rows()[i][j].end(),
                                std::back_inserter(out.rows[i][j]));
        }
    }
    return out;
}

int GeneralizedTableau::entry_count() const {
    int total = 0;
    for (const auto& row : rows)
        for (const auto& c : row) total += static_cast<int>(c.size());
    return total;
}

bool is_semistandard(const SetValuedTableau& s) {
    const Partition& sh = s.shape();
    for (int r = 1; r <= sh.size(); ++r) {
        for (int c = 1; c <= sh.part(r); ++c) {
            const Cell& here = s.cell(r, c);
            if (c + 1 <= sh.part(r) && here.back() > s.cell(r, c + 1).front()) return false;
            if (r + 1 <= sh.size() && c <= sh.part(r + 1) && here.back() >= s.cell(r + 1, c).front())
                return false;
        }
    }
    return true;
}

bool is_on_mu(const SetValuedTableau& s, const Partition& mu) {
    int h = mu.size();
    bool ok = true;
    s.for_each_entry([&](int x, int r, int c) {
        if (x > h || x + c - r > mu.part(x)) ok = false;
    });
    return ok;
}

SetValuedTableau tableau_union(const SetValuedTableau& a, const SetValuedTableau& b) {
    if (a.shape() != b.shape()) throw std::invalid_argument("tableau shapes differ");
    std::vector<std::vector<Cell>> rows(a.rows().size());
    for (size_t i = 0; i < a.rows().size(); ++i) {
        rows[i].resize(a.rows()[i].size());
        for (size_t j = 0; j < a.rows()[i].size(); ++j) {
            std::set_union(a.rows()[i][j].begin(), a.rows()[i][j].end(),
                           b.rows()[i][j].begin(), b.rows()[i][j].end(),
                           std::back_inserter(rows[i][j]));
        }
    }
    return SetValuedTableau(a.shape(), std::move(rows));
}

bool tableau_contains(const SetValuedTableau& r, const SetValuedTableau& s) {
    if (r.shape() != s.shape()) throw std::invalid_argument("tableau shapes differ");
    for (size_t i = 0; i < r.rows().size(); ++i)
        for (size_t j = 0; j < r.rows()[i].size(); ++j)
            if (!std::includes(s.rows()[i][j].begin(), s.rows()[i][j].end(),
                               r.rows()[i][j].begin(), r.rows()[i][j].end()))
                return false;
    return true;
}

namespace {

// Shared depth-first fill over the boxes of lambda in row-major order.
// At box (r,c) the admissible values form the contiguous range
// [lower, xmax(r,c)]: lower comes from the left (weak) and upper (strict)
// neighbors, and xmax from the on-mu bound, which is downward closed in x.
struct FillContext {
    const Partition& lambda;
    const Partition& mu;
    std::vector<Box> boxes;
    std::vector<std::vector<Cell>> work;

    FillContext(const Partition& l, const Partition& m) : lambda(l), mu(m) {
        boxes = lambda.boxes();
        work.resize(static_cast<size_t>(lambda.size()));
        for (int r = 1; r <= lambda.size(); ++r)
            work[static_cast<size_t>(r) - 1].resize(static_cast<size_t>(lambda.part(r)));
    }

    Cell& at(const Box& b) {
        return work[static_cast<size_t>(b.row) - 1][static_cast<size_t>(b.col) - 1];
    }

    int lower_bound_for(const Box& b) {
        int lb = 1;
        if (b.col > 1) lb = std::max(lb, at(Box{b.row, b.col - 1}).back());
        if (b.row > 1 && lambda.part(b.row - 1) >= b.col)
            lb = std::max(lb, at(Box{b.row - 1, b.col}).back() + 1);
        return lb;
    }

    int max_value_for(const Box& b, int lb) {
        // Feasibility of x + c - r <= mu_x is downward closed in x.
        int best = lb - 1;
        for (int x = lb; x <= mu.size(); ++x) {
            if (x + b.col - b.row <= mu.part(x)) best = x;
            else break;
        }
        return best;
    }
};

}  // namespace

std::vector<SetValuedTableau> enumerate_ssyt(const Partition& lambda, const Partition& mu) {
    FillContext ctx(lambda, mu);
    std::vector<SetValuedTableau> out;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == ctx.boxes.size()) {
            out.emplace_back(lambda, ctx.work);
            return;
        }
        const Box& b = ctx.boxes[i];
        int lb = ctx.lower_bound_for(b);
        int hi = ctx.max_value_for(b, lb);
        for (int x = lb; x <= hi; ++x) {
            ctx.at(b) = Cell{x};
            self(self, i + 1);
        }
        ctx.at(b).clear();
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetValuedTableau> enumerate_ssvt(const Partition& lambda, const Partition& mu) {
    FillContext ctx(lambda, mu);
    std::vector<SetValuedTableau> out;
    Cell scratch;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == ctx.boxes.size()) {
            out.emplace_back(lambda, ctx.work);
            return;
        }
        const Box& b = ctx.boxes[i];
        int lb = ctx.lower_bound_for(b);
        int hi = ctx.max_value_for(b, lb);
        if (hi < lb) return;
        int w = hi - lb + 1;
        for (unsigned mask = 1; mask < (1u << w); ++mask) {
            scratch.clear();
            for (int k = 0; k < w; ++k)
                if (mask & (1u << k)) scratch.push_back(lb + k);
            ctx.at(b) = scratch;
            self(self, i + 1);
        }
        ctx.at(b).clear();
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Depth-first choice of one entry per box of s, keeping semistandardness.
// Visitor returns false to stop early.
template <class Visitor>
bool visit_selections(const SetValuedTableau& s, Visitor&& visit) {
    const Partition& sh = s.shape();
    std::vector<Box> boxes = sh.boxes();
    std::vector<std::vector<int>> chosen(static_cast<size_t>(sh.size()));
    for (int r = 1; r <= sh.size(); ++r)
        chosen[static_cast<size_t>(r) - 1].resize(static_cast<size_t>(sh.part(r)));
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == boxes.size()) {
            std::vector<std::vector<int>> rows = chosen;
            return visit(rows);
        }
        const Box& b = boxes[i];
        int lb = 1;
        if (b.col > 1) lb = std::max(lb, chosen[static_cast<size_t>(b.row) - 1][static_cast<size_t>(b.col) - 2]);
        if (b.row > 1 && sh.part(b.row - 1) >= b.col)
            lb = std::max(lb, chosen[static_cast<size_t>(b.row) - 2][static_cast<size_t>(b.col) - 1] + 1);
        for (int v : s.cell(b.row, b.col)) {
            if (v < lb) continue;
            chosen[static_cast<size_t>(b.row) - 1][static_cast<size_t>(b.col) - 1] = v;
            if (!self(self, i + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

}  // namespace

std::vector<SetValuedTableau> ssyt_contained_in(const SetValuedTableau& s) {
    std::vector<SetValuedTableau> out;
    visit_selections(s, [&](const std::vector<std::vector<int>>& rows) {
        out.push_back(SetValuedTableau::young(s.shape(), rows));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool has_ssyt_selection(const SetValuedTableau& s) {
    bool found = false;
    visit_selections(s, [&](const std::vector<std::vector<int>>&) {
        found = true;
        return false;
    });
    return found;
}

long long n_coefficient_definition(const SetValuedTableau& s, int max_q) {
    std::vector<SetValuedTableau> inner = ssyt_contained_in(s);
    int q = static_cast<int>(inner.size());
    if (q > max_q) throw std::invalid_argument("n_coefficient_definition: q_S over bound");
    long long total = 0;
    for (unsigned long long mask = 1; mask < (1ull << q); ++mask) {
        SetValuedTableau u;
        bool first = true;
        int j = 0;
        for (int i = 0; i < q; ++i) {
            if (!(mask & (1ull << i))) continue;
            ++j;
            u = first ? inner[static_cast<size_t>(i)] : tableau_union(u, inner[static_cast<size_t>(i)]);
            first = false;
        }
        if (u == s) total += (j % 2 == 1) ? 1 : -1;
    }
    return total;
}

long long n_coefficient_inclusion_exclusion(const SetValuedTableau& s) {
    // Iterate over every sub-tableau R of S (nonempty cell choices box by box).
    const Partition& sh = s.shape();
    std::vector<Box> boxes = sh.boxes();
    std::vector<std::vector<Cell>> work(static_cast<size_t>(sh.size()));
    for (int r = 1; r <= sh.size(); ++r)
        work[static_cast<size_t>(r) - 1].resize(static_cast<size_t>(sh.part(r)));

    long long full_sum = 0;
    long long empty_ssyt_sum = 0;
    Cell scratch;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == boxes.size()) {
            SetValuedTableau r(sh, work);
            long long sign = (tableau_difference(s, r).entry_count() % 2 == 0) ? 1 : -1;
            full_sum += sign;
            if (!has_ssyt_selection(r)) empty_ssyt_sum += sign;
            return;
        }
        const Box& b = boxes[i];
        const Cell& full = s.cell(b.row, b.col);
        int w = static_cast<int>(full.size());
        for (unsigned mask = 1; mask < (1u << w); ++mask) {
            scratch.clear();
            for (int k = 0; k < w; ++k)
                if (mask & (1u << k)) scratch.push_back(full[static_cast<size_t>(k)]);
            work[static_cast<size_t>(b.row) - 1][static_cast<size_t>(b.col) - 1] = scratch;
            self(self, i + 1);
        }
    };
    if (boxes.empty()) {
        // Single empty tableau: R = S, |R bar| = 0, q_R = 1.
        return 1;
    }
    rec(rec, 0);
    return full_sum - empty_ssyt_sum;
}

long long n_coefficient_closed_form(const SetValuedTableau& s) {
    if (!is_semistandard(s)) return 0;
    return ((s.entry_count() + s.box_count()) % 2 == 0) ? 1 : -1;
}

SetValuedTableau top_ssyt(const Partition& lambda) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(lambda.size()));
    for (int r = 1; r <= lambda.size(); ++r)
        rows[static_cast<size_t>(r) - 1].assign(static_cast<size_t>(lambda.part(r)), r);
    return SetValuedTableau::young(lambda, rows);
}

std::vector<SetValuedTableau> ladder_moves_ssyt(const SetValuedTableau& p, const Partition& mu) {
    if (!p.is_young()) throw std::invalid_argument("ladder moves are defined on Young tableaux");
    std::vector<SetValuedTableau> out;
    const Partition& sh = p.shape();
    for (int r = 1; r <= sh.size(); ++r) {
        for (int c = 1; c <= sh.part(r); ++c) {
            int v = p.cell(r, c).front();
            SetValuedTableau q = p.with_cell(r, c, Cell{v + 1});
            if (is_semistandard(q) && is_on_mu(q, mu)) out.push_back(std::move(q));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const SetValuedTableau& s) {
    std::string out;
    for (int r = 1; r <= s.shape().size(); ++r) {
        if (s.shape().part(r) == 0) break;
        if (r > 1) out += "/";
        for (int c = 1; c <= s.shape().part(r); ++c) {
            const Cell& cell = s.cell(r, c);
            if (cell.size() == 1) {
                out += std::to_string(cell.front());
            } else {
                out += "{";
                for (size_t i = 0; i < cell.size(); ++i) {
                    if (i > 0) out += ",";
                    out += std::to_string(cell[i]);
                }
                out += "}";
            }
        }
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace schubrest
