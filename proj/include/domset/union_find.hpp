#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace domset {

/// Disjoint sets with path compression and union by rank.
class UnionFind {
public:
    explicit UnionFind(std::int32_t n = 0) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0), components_(n) {
        for (std::int32_t i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
    }

    std::int32_t find(std::int32_t x) {
        check(x);
        std::int32_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            std::int32_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    /// Returns true iff x and y were in different sets.
    bool unite(std::int32_t x, std::int32_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (rank_[x] < rank_[y]) std::swap(x, y);
        parent_[y] = x;
        if (rank_[x] == rank_[y]) ++rank_[x];
        --components_;
        return true;
    }

    bool same(std::int32_t x, std::int32_t y) { return find(x) == find(y); }
    std::int32_t components() const noexcept { return components_; }
    std::int32_t size() const noexcept { return static_cast<std::int32_t>(parent_.size()); }

private:
    void check(std::int32_t x) const {
        if (x < 0 || x >= size()) throw std::out_of_range("UnionFind: id " + std::to_string(x) + " out of range");
    }

    std::vector<std::int32_t> parent_;
    std::vector<std::uint8_t> rank_;
    std::int32_t components_;
};

} // namespace domset
