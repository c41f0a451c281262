#pragma once

#include <optional>

#include "tableau.hpp"

namespace schubrest {

/// Path of contiguous boxes on D_mu moving only up or to the right, starting
/// on the lowest box of a column and ending on the rightmost box of a row.
class LatticePath {
public:
    LatticePath(std::vector<Box> boxes, const Partition& mu);

    const std::vector<Box>& boxes() const { return boxes_; }
    const Box& start() const { return boxes_.front(); }
    const Box& end() const { return boxes_.back(); }

    /// Greatest lower bound of the boxes: (end row, start column).
    Box glb() const { return Box{end().row, start().col}; }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

private:
    std::vector<Box> boxes_;
};

/// Family of pairwise box-disjoint paths on D_mu, kept sorted by glb.
class PathFamily {
public:
    PathFamily() = default;
    explicit PathFamily(std::vector<LatticePath> paths);

    const std::vector<LatticePath>& paths() const { return paths_; }
    int path_count() const { return static_cast<int>(paths_.size()); }

    /// Union of all boxes, sorted.
    std::vector<Box> support() const;
    /// Set of glb's, sorted.
    std::vector<Box> twist() const;

    friend bool operator==(const PathFamily&, const PathFamily&) = default;
    friend auto operator<=>(const PathFamily&, const PathFamily&) = default;

private:
    std::vector<LatticePath> paths_;
};

/// Arbitrary set of boxes of D_mu, kept sorted.
struct DiagramSubset {
    std::vector<Box> boxes;

    DiagramSubset() = default;
    explicit DiagramSubset(std::vector<Box> b);

    friend bool operator==(const DiagramSubset&, const DiagramSubset&) = default;
    friend auto operator<=>(const DiagramSubset&, const DiagramSubset&) = default;
};

/// Set of boxes, pairwise on distinct rows and columns, each pair comparable
/// or without an upper bound in D_mu.
struct TwistedChain {
    std::vector<Box> boxes;  // sorted

    friend bool operator==(const TwistedChain&, const TwistedChain&) = default;
};

/// The unique family with support D_mu minus D_lambda, built by peeling
/// upper-left boundary layers of the skew shape. Requires lambda <= mu.
PathFamily top_family(const Partition& lambda, const Partition& mu);

/// Reconstructs the unique family with the given support, or nullopt if the
/// box set is not the support of any family of nonintersecting paths on D_mu.
std::optional<PathFamily> decompose_support(const std::vector<Box>& support, const Partition& mu);

/// Number of distinct families with the given support (0 or 1 by uniqueness;
/// exposed so tests can confirm there is never more than one).
int count_support_decompositions(const std::vector<Box>& support, const Partition& mu);

/// All families reachable from f by one ladder move: a square of D_mu where
/// the family holds (i+1,j), (i,j+1), (i+1,j+1) but not (i,j); the move
/// replaces (i+1,j+1) with (i,j).
std::vector<PathFamily> family_ladder_moves(const PathFamily& f, const Partition& mu);

/// Ladder-move closure of the top family, canonical order (by support).
std::vector<PathFamily> enumerate_families(const Partition& lambda, const Partition& mu);

/// Brute-force alternative: every family on D_mu whose twist equals the twist
/// of the top family. Must agree with enumerate_families.
std::vector<PathFamily> enumerate_families_by_twist(const Partition& lambda, const Partition& mu);

bool is_twisted_chain(const std::vector<Box>& boxes, const Partition& mu);

/// twist(top_family(lambda, mu)), verified against the index identity:
/// removing beta(d+1-x) and adjoining beta'(y) over the chain boxes (x,y)
/// turns beta into alpha. A mismatch means an internal bug.
TwistedChain twisted_chain_target(const Partition& lambda, const Partition& mu, int d, int n);

/// Embedded copy of D_lambda in D_mu (shared top-left corner).
DiagramSubset top_subset(const Partition& lambda, const Partition& mu);

/// Subsets reachable by one ladder move: a square of D_mu intersecting d in
/// exactly its top-left box (i,j); the move replaces (i,j) with (i+1,j+1).
std::vector<DiagramSubset> subset_ladder_moves(const DiagramSubset& d, const Partition& mu);

/// Ladder-move closure of the top subset, canonical order.
std::vector<DiagramSubset> enumerate_subsets(const Partition& lambda, const Partition& mu);

/// Bijection h: complement of the support in D_mu.
DiagramSubset family_to_subset(const PathFamily& f, const Partition& mu);

/// Bijection f: entry x in box (r,c) contributes box (x, x - r + c).
DiagramSubset ssyt_to_subset(const SetValuedTableau& p, const Partition& mu);

/// Bijection g = f^{-1}: boxes are grouped per diagonal, sorted, and placed
/// along the matching diagonal of the shape. Throws if d has no preimage.
SetValuedTableau subset_to_ssyt(const DiagramSubset& d, const Partition& lambda,
                                const Partition& mu);

std::string to_string(const LatticePath& p);
std::string to_string(const PathFamily& f);
std::string to_string(const DiagramSubset& d);

}  // namespace schubrest
