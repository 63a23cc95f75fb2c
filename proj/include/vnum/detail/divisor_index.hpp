#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "../exponent_vector.hpp"

namespace vnum::detail {

// Trie keyed by exponents, one level per variable. Answers "is some stored
// vector componentwise <= u" by descending only into children whose key is
// <= u[level].
class DivisorIndex {
public:
    explicit DivisorIndex(std::size_t n) : n_(n) { nodes_.emplace_back(); }

    template <class Range>
    DivisorIndex(std::size_t n, const Range& vectors) : DivisorIndex(n) {
        for (const ExponentVector& v : vectors) insert(v);
    }

    std::size_t dimension() const noexcept { return n_; }
    bool empty() const noexcept { return count_ == 0; }

    void insert(const ExponentVector& v) {
        std::uint32_t node = 0;
        for (std::size_t level = 0; level < n_; ++level) {
            auto& kids = nodes_[node].children;
            auto it = std::lower_bound(kids.begin(), kids.end(), v[level],
                                       [](const Child& c, Exponent key) { return c.key < key; });
            if (it != kids.end() && it->key == v[level]) {
                node = it->node;
                continue;
            }
            const auto fresh = static_cast<std::uint32_t>(nodes_.size());
            const auto pos = it - kids.begin();
            nodes_[node].children.insert(nodes_[node].children.begin() + pos, Child{v[level], fresh});
            nodes_.emplace_back();
            node = fresh;
        }
        ++count_;
    }

    bool has_divisor_of(const ExponentVector& u) const {
        if (count_ == 0) return false;
        return search(0, 0, u);
    }

private:
    struct Child {
        Exponent key;
        std::uint32_t node;
    };
    struct Node {
        std::vector<Child> children;
    };

    bool search(std::uint32_t node, std::size_t level, const ExponentVector& u) const {
        if (level == n_) return true;
        const Exponent bound = u[level];
        for (const Child& c : nodes_[node].children) {
            if (c.key > bound) break;
            if (search(c.node, level + 1, u)) return true;
        }
        return false;
    }

    std::size_t n_;
    std::size_t count_ = 0;
    std::vector<Node> nodes_;
};

} // namespace vnum::detail
