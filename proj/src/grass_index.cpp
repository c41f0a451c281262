#include "grass_index.hpp"

#include <algorithm>
#include <numeric>

namespace schubrest {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::padded(int d) const {
    if (d < size()) {
        for (int i = d; i < size(); ++i)
            if (parts_[i] != 0)
                throw std::invalid_argument("partition has more than d nonzero parts");
    }
    std::vector<int> p(parts_.begin(), parts_.begin() + std::min(d, size()));
    p.resize(static_cast<size_t>(d), 0);
    return Partition(std::move(p));
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Box> Partition::boxes() const {
    std::vector<Box> out;
    out.reserve(static_cast<size_t>(weight()));
    for (int i = 1; i <= size(); ++i)
        for (int j = 1; j <= part(i); ++j) out.push_back(Box{i, j});
    return out;
}

bool partition_leq(const Partition& lambda, const Partition& mu) {
    int m = std::max(lambda.size(), mu.size());
    for (int i = 1; i <= m; ++i)
        if (lambda.part(i) > mu.part(i)) return false;
    return true;
}

GrassIndex::GrassIndex(int d, int n, std::vector<int> entries)
    : d_(d), n_(n), entries_(std::move(entries)) {
    if (d < 1 || n <= d) throw std::invalid_argument("GrassIndex requires 0 < d < n");
    if (static_cast<int>(entries_.size()) != d)
        throw std::invalid_argument("GrassIndex requires exactly d entries");
    for (int i = 0; i < d; ++i) {
        if (entries_[i] < 1 || entries_[i] > n)
            throw std::invalid_argument("GrassIndex entries must lie in [1, n]");
        if (i > 0 && entries_[i] <= entries_[i - 1])
            throw std::invalid_argument("GrassIndex entries must be strictly increasing");
    }
}

std::vector<int> GrassIndex::complement() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n_ - d_));
    size_t k = 0;
    for (int v = 1; v <= n_; ++v) {
        if (k < entries_.size() && entries_[k] == v) {
            ++k;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

int GrassIndex::complement_entry(int i) const {
    return complement().at(static_cast<size_t>(i) - 1);
}

int GrassIndex::length() const {
    int l = 0;
    for (int i = 1; i <= d_; ++i) l += entry(i) - i;
    return l;
}

Partition GrassIndex::shape() const {
    std::vector<int> parts(static_cast<size_t>(d_));
    for (int i = 1; i <= d_; ++i) parts[static_cast<size_t>(i) - 1] = entry(d_ + 1 - i) - (d_ + 1 - i);
    return Partition(std::move(parts));
}

GrassIndex GrassIndex::from_shape(const Partition& lambda, int d, int n) {
    if (d < 1 || n <= d) throw std::invalid_argument("from_shape requires 0 < d < n");
    Partition p = lambda.padded(d);
    if (p.part(1) > n - d)
        throw std::invalid_argument("partition does not fit in J_{d,n}: part exceeds n-d");
    std::vector<int> entries(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i) entries[static_cast<size_t>(i) - 1] = p.part(d + 1 - i) + i;
    return GrassIndex(d, n, std::move(entries));
}

bool mu_column_identity(const GrassIndex& beta) {
    Partition mu = beta.shape();
    std::vector<int> comp = beta.complement();
    int d = beta.d();
    for (int j = 1; j <= d; ++j) {
        int count = 0;
        for (int v : comp)
            if (v < beta.entry(d + 1 - j)) ++count;
        if (count != mu.part(j)) return false;
    }
    return true;
}

std::vector<GrassIndex> all_indices(int d, int n) {
    std::vector<GrassIndex> out;
    std::vector<int> cur(static_cast<size_t>(d));
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == d) {
            out.emplace_back(d, n, cur);
            return;
        }
        for (int v = next; v <= n - (d - 1 - pos); ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

std::vector<Partition> partitions_below(const Partition& mu) {
    std::vector<Partition> out;
    std::vector<int> cur(static_cast<size_t>(mu.size()));
    auto rec = [&](auto&& self, int i, int cap) -> void {
        if (i > mu.size()) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= std::min(cap, mu.part(i)); ++v) {
            cur[static_cast<size_t>(i) - 1] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 1, mu.size() > 0 ? mu.part(1) : 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Box& b) {
    return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(p.part(i));
    }
    return s + ")";
}

std::string to_string(const GrassIndex& a) {
    std::string s = "{";
    for (int i = 1; i <= a.d(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(a.entry(i));
    }
    return s + "}";
}

}  // namespace schubrest
