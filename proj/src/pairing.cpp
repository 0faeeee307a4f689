#include "coneortho/pairing.hpp"

#include <mutex>

#include "coneortho/ball.hpp"
#include "coneortho/pochhammer.hpp"

namespace coneortho {

Rational cone_moment(const MultiIndex& a, int s, const WeightSpec& w) {
    if (a.dim() != w.d) throw std::invalid_argument("cone_moment: dimension mismatch");
    if (s < 0) throw std::invalid_argument("cone_moment: negative t exponent");
    int m = s + a.total();
    Rational base = w.mu * Rational(2) + w.beta + Rational(w.d);
    Rational radial = pochhammer(base, m);
    if (w.family == Family::jacobi)
        radial /= pochhammer(base + w.gamma + Rational(1), m);
    return radial * ball_moment(a, w.mu);
}

Rational Pairing::moment(const MultiIndex& a, int s) const {
    std::pair<MultiIndex, int> key{a, s};
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    Rational v = cone_moment(a, s, w_);
    std::unique_lock lock(mutex_);
    return cache_.emplace(std::move(key), std::move(v)).first->second;
}

Rational Pairing::operator()(const MVPoly& p, const MVPoly& q) const {
    if (p.dim() != q.dim() || p.dim() != w_.d)
        throw std::invalid_argument("Pairing: dimension mismatch");
    Rational s(0);
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms())
            s += cp * cq * moment(mp.x + mq.x, mp.t + mq.t);
    return s;
}

GramMatrix gram_matrix(int degree, const WeightSpec& w) {
    GramMatrix g;
    for (int total = 0; total <= degree; ++total)
        for (int s = 0; s <= total; ++s)
            for (const auto& a : indices_of_degree(w.d, total - s))
                g.monomials.emplace_back(a, s);
    Pairing pair(w);
    size_t m = g.monomials.size();
    g.entries.assign(m, std::vector<Rational>(m, Rational(0)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i; j < m; ++j) {
            Rational v = pair.moment(g.monomials[i].first + g.monomials[j].first,
                                     g.monomials[i].second + g.monomials[j].second);
            g.entries[i][j] = v;
            g.entries[j][i] = v;
        }
    return g;
}

Rational bareiss_determinant(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    if (n == 0) return Rational(1);
    int sign = 1;
    Rational prev(1);
    for (size_t p = 0; p < n; ++p) {
        if (m[p][p].is_zero()) {
            size_t swap_row = p + 1;
            while (swap_row < n && m[swap_row][p].is_zero()) ++swap_row;
            if (swap_row == n) return Rational(0);
            std::swap(m[p], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < n; ++i) {
            for (size_t j = p + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
            m[i][p] = Rational(0);
        }
        prev = m[p][p];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Rational solve_normal_equations(const MVPoly& target, int degree, const WeightSpec& w) {
    GramMatrix g = gram_matrix(degree, w);
    Pairing pair(w);
    size_t m = g.monomials.size();
    std::vector<std::vector<Rational>> bordered(m + 1, std::vector<Rational>(m + 1, Rational(0)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) bordered[i][j] = g.entries[i][j];
    for (size_t i = 0; i < m; ++i) {
        MVPoly mono = MVPoly::monomial(w.d, g.monomials[i].first, g.monomials[i].second);
        Rational v = pair(target, mono);
        bordered[i][m] = v;
        bordered[m][i] = v;
    }
    bordered[m][m] = pair(target, target);
    Rational det_g = bareiss_determinant(g.entries);
    if (det_g.is_zero())
        throw std::logic_error("solve_normal_equations: singular Gram matrix");
    return bareiss_determinant(std::move(bordered)) / det_g;
}

}  // namespace coneortho
