#include "coneortho/multiindex.hpp"

namespace coneortho {

namespace {

void product_rec(const std::vector<int>& caps, size_t i, std::vector<int>& cur,
                 std::vector<MultiIndex>& out) {
    if (i == caps.size()) {
        out.emplace_back(cur);
        return;
    }
    for (int v = 0; v <= caps[i]; ++v) {
        cur.push_back(v);
        product_rec(caps, i + 1, cur, out);
        cur.pop_back();
    }
}

void degree_rec(int d, int rem, bool exact, std::vector<int>& cur,
                std::vector<MultiIndex>& out) {
    if (static_cast<int>(cur.size()) == d - 1) {
        if (exact) {
            cur.push_back(rem);
            out.emplace_back(cur);
            cur.pop_back();
        } else {
            for (int v = 0; v <= rem; ++v) {
                cur.push_back(v);
                out.emplace_back(cur);
                cur.pop_back();
            }
        }
        return;
    }
    for (int v = 0; v <= rem; ++v) {
        cur.push_back(v);
        degree_rec(d, rem - v, exact, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> half_indices(const MultiIndex& k) {
    std::vector<int> caps(static_cast<size_t>(k.dim()));
    for (int i = 0; i < k.dim(); ++i) caps[static_cast<size_t>(i)] = k[i] / 2;
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    product_rec(caps, 0, cur, out);
    return out;
}

std::vector<MultiIndex> indices_leq(const MultiIndex& j) {
    std::vector<int> caps(j.entries().begin(), j.entries().end());
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    product_rec(caps, 0, cur, out);
    return out;
}

std::vector<MultiIndex> indices_of_degree(int d, int m) {
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    degree_rec(d, m, true, cur, out);
    return out;
}

std::vector<MultiIndex> indices_up_to_degree(int d, int m) {
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    degree_rec(d, m, false, cur, out);
    return out;
}

}  // namespace coneortho
