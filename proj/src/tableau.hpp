#pragma once

#include <vector>

#include "grass_index.hpp"

namespace schubrest {

/// Entries of one box, sorted ascending, no repeats.
using Cell = std::vector<int>;

/// Set-valued tableau: a nonempty finite set of positive integers in each box
/// of the shape. Young tableaux are the all-singleton special case.
class SetValuedTableau {
public:
    SetValuedTableau() = default;  // empty shape
    SetValuedTableau(Partition shape, std::vector<std::vector<Cell>> rows);

    /// Convenience constructor for Young tableaux from plain entry rows.
    static SetValuedTableau young(const Partition& shape,
                                  const std::vector<std::vector<int>>& rows);

    const Partition& shape() const { return shape_; }
    /// 1-based box access.
    const Cell& cell(int row, int col) const {
        return rows_.at(static_cast<size_t>(row) - 1).at(static_cast<size_t>(col) - 1);
    }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }

    /// ||S||: number of boxes.
    int box_count() const { return shape_.weight(); }
    /// |S|: number of entries counted with multiplicity across boxes.
    int entry_count() const;
    bool is_young() const { return entry_count() == box_count(); }

    /// Calls f(value, row, col) for every entry, row-major, entries ascending
    /// within a box.
    template <class F>
    void for_each_entry(F&& f) const {
        for (int r = 1; r <= shape_.size(); ++r)
            for (int c = 1; c <= shape_.part(r); ++c)
                for (int v : cell(r, c)) f(v, r, c);
    }

    SetValuedTableau with_cell(int row, int col, Cell value) const;

    /// Canonical comparison: shape, then the row-reading word of sorted cells.
    friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;
    friend auto operator<=>(const SetValuedTableau&, const SetValuedTableau&) = default;

private:
    Partition shape_;
    std::vector<std::vector<Cell>> rows_;
};

/// Like a set-valued tableau but boxes may be empty. Arises only as the
/// difference of two tableaux of equal shape.
struct GeneralizedTableau {
    Partition shape;
    std::vector<std::vector<Cell>> rows;
    int entry_count() const;
};

/// Cellwise set difference s \ r; requires r, s of equal shape.
GeneralizedTableau tableau_difference(const SetValuedTableau& s, const SetValuedTableau& r);

/// Weak rows, strict columns, setwise: max of a box <= min of the box to its
/// right and < min of the box below.
bool is_semistandard(const SetValuedTableau& s);

/// Every entry x satisfies x <= (number of parts of mu) and
/// x + c(x) - r(x) <= mu_x.
bool is_on_mu(const SetValuedTableau& s, const Partition& mu);

/// Cellwise union; shapes must match.
SetValuedTableau tableau_union(const SetValuedTableau& a, const SetValuedTableau& b);

/// r contained in s cellwise; shapes must match.
bool tableau_contains(const SetValuedTableau& r, const SetValuedTableau& s);

/// All semistandard Young tableaux on mu of shape lambda, canonical order.
/// Empty when lambda is not below mu.
std::vector<SetValuedTableau> enumerate_ssyt(const Partition& lambda, const Partition& mu);

/// All semistandard set-valued tableaux on mu of shape lambda, canonical order.
std::vector<SetValuedTableau> enumerate_ssvt(const Partition& lambda, const Partition& mu);

/// All semistandard Young tableaux of the same shape contained in s
/// (one entry chosen per box). q_S is the size of this list.
std::vector<SetValuedTableau> ssyt_contained_in(const SetValuedTableau& s);

/// Whether at least one semistandard selection exists (q_S > 0), without
/// materializing the list.
bool has_ssyt_selection(const SetValuedTableau& s);

/// N_S by its definition: signed count of subsets of SSYT(S) whose union is S.
long long n_coefficient_definition(const SetValuedTableau& s, int max_q = 20);

/// N_S via the inclusion-exclusion identity over all sub-tableaux R of S,
/// including the correction sum over R with no semistandard selection.
long long n_coefficient_inclusion_exclusion(const SetValuedTableau& s);

/// Closed form: (-1)^{|S|+||S||} for semistandard S, else 0.
long long n_coefficient_closed_form(const SetValuedTableau& s);

/// Young tableau of shape lambda whose i-th row is filled with i.
SetValuedTableau top_ssyt(const Partition& lambda);

/// All results of incrementing a single entry of p by 1 that remain
/// semistandard and on mu. Canonical order.
std::vector<SetValuedTableau> ladder_moves_ssyt(const SetValuedTableau& p, const Partition& mu);

std::string to_string(const SetValuedTableau& s);

}  // namespace schubrest
