#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubrest {

/// Box of a Young diagram, 1-based, rows counted from the top and columns
/// from the left.
struct Box {
    int row = 0;
    int col = 0;

    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

/// Componentwise partial order on boxes: (i,j) <= (k,l) iff i <= k and j <= l.
inline bool box_below_eq(const Box& a, const Box& b) {
    return a.row <= b.row && a.col <= b.col;
}

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// significant: a partition stored with d parts stays d parts, so that
/// mu_x lookups for x <= d are always defined.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Same parts padded with trailing zeros to exactly d parts.
    Partition padded(int d) const;

    int size() const { return static_cast<int>(parts_.size()); }
    /// 1-based part access; zero beyond the stored parts.
    int part(int i) const {
        if (i < 1) throw std::invalid_argument("partition part index must be >= 1");
        return i <= size() ? parts_[i - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    bool empty_diagram() const { return weight() == 0; }

    /// Membership of a box in the diagram D_mu.
    bool contains(int row, int col) const {
        return row >= 1 && col >= 1 && row <= size() && col <= parts_[row - 1];
    }
    bool contains(const Box& b) const { return contains(b.row, b.col); }

    /// All boxes of the diagram in row-major order.
    std::vector<Box> boxes() const;
    int box_count() const { return weight(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// lambda_i <= mu_i for all i (missing parts read as zero).
bool partition_leq(const Partition& lambda, const Partition& mu);

/// Element of I_{d,n}: a strictly increasing d-subset of {1..n}.
class GrassIndex {
public:
    GrassIndex(int d, int n, std::vector<int> entries);

    int d() const { return d_; }
    int n() const { return n_; }
    /// 1-based access: alpha(i).
    int entry(int i) const { return entries_.at(static_cast<size_t>(i) - 1); }
    const std::vector<int>& entries() const { return entries_; }

    /// The n-d elements of {1..n} not in this subset, increasing.
    std::vector<int> complement() const;
    /// 1-based access into the complement.
    int complement_entry(int i) const;

    /// l(alpha) = sum over i of (alpha(i) - i).
    int length() const;

    /// The bijection pi: alpha -> (alpha(d)-d, ..., alpha(1)-1), d parts.
    Partition shape() const;

    /// Inverse bijection. Rejects partitions outside J_{d,n}.
    static GrassIndex from_shape(const Partition& lambda, int d, int n);

    friend bool operator==(const GrassIndex&, const GrassIndex&) = default;
    friend auto operator<=>(const GrassIndex&, const GrassIndex&) = default;

private:
    int d_ = 0;
    int n_ = 0;
    std::vector<int> entries_;
};

/// Self-check of the column-count identity
/// mu_j = #{ i : beta'(i) < beta(d+1-j) } for mu = pi(beta). Always true.
bool mu_column_identity(const GrassIndex& beta);

/// All elements of I_{d,n} in lexicographic order.
std::vector<GrassIndex> all_indices(int d, int n);

/// All partitions lambda <= mu with the same number of stored parts as mu.
std::vector<Partition> partitions_below(const Partition& mu);

std::string to_string(const Box& b);
std::string to_string(const Partition& p);
std::string to_string(const GrassIndex& a);

}  // namespace schubrest
