#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace segbite {

/// Disjoint sets with path halving and union by size. The representative
/// of a set is stable under element order: always the smallest index that
/// was merged in, which keeps downstream segment numbering deterministic.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        // Keep the smaller index as root.
        if (b < a) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
    }

    std::size_t set_size(std::size_t x) { return size_[find(x)]; }

    std::size_t count() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace segbite
