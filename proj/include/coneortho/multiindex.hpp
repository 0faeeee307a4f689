#pragma once

#include <compare>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace coneortho {

/// d-tuple of non-negative integer exponents.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int d) : e_(static_cast<size_t>(d), 0) {
        if (d < 1) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
    }
    MultiIndex(std::initializer_list<int> e) : e_(e) { validate(); }
    explicit MultiIndex(std::vector<int> e) : e_(std::move(e)) { validate(); }

    int dim() const { return static_cast<int>(e_.size()); }
    int total() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    int& operator[](int i) { return e_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return e_; }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.e_ <=> b.e_;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        MultiIndex r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

private:
    void validate() const {
        if (e_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
        for (int v : e_)
            if (v < 0) throw std::invalid_argument("MultiIndex: negative entry");
    }

    std::vector<int> e_;
};

/// componentwise j <= k
inline bool leq(const MultiIndex& j, const MultiIndex& k) {
    for (int i = 0; i < j.dim(); ++i)
        if (j[i] > k[i]) return false;
    return true;
}

/// componentwise 2j <= k
inline bool twice_leq(const MultiIndex& j, const MultiIndex& k) {
    for (int i = 0; i < j.dim(); ++i)
        if (2 * j[i] > k[i]) return false;
    return true;
}

/// k - 2j (requires 2j <= k)
inline MultiIndex sub_twice(const MultiIndex& k, const MultiIndex& j) {
    MultiIndex r = k;
    for (int i = 0; i < k.dim(); ++i) r[i] -= 2 * j[i];
    return r;
}

/// k - j (requires j <= k)
inline MultiIndex sub(const MultiIndex& k, const MultiIndex& j) {
    MultiIndex r = k;
    for (int i = 0; i < k.dim(); ++i) r[i] -= j[i];
    return r;
}

/// all j with 2j <= k, in lexicographic order
std::vector<MultiIndex> half_indices(const MultiIndex& k);

/// all i with i <= j componentwise
std::vector<MultiIndex> indices_leq(const MultiIndex& j);

/// all k in N0^d with |k| = m
std::vector<MultiIndex> indices_of_degree(int d, int m);

/// all k in N0^d with |k| <= m
std::vector<MultiIndex> indices_up_to_degree(int d, int m);

}  // namespace coneortho
