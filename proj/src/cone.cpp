#include "coneortho/cone.hpp"

#include "coneortho/ball.hpp"
#include "coneortho/pochhammer.hpp"
#include "coneortho/univariate.hpp"

namespace coneortho {

namespace {

void check_kn(const MultiIndex& k, int n, const WeightSpec& w) {
    if (k.dim() != w.d) throw std::invalid_argument("cone basis: k dimension mismatch");
    if (k.total() > n) throw std::invalid_argument("cone basis: requires |k| <= n");
}

/// top term must be exactly t^{n-|k|} x^k, everything else of degree < n
void assert_monomiality(const MVPoly& p, const MultiIndex& k, int n) {
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() < n) continue;
        if (m.degree() > n || m.x != k || m.t != n - k.total() || c != Rational(1))
            throw std::logic_error("cone_V: monomiality postcondition failed");
    }
    if (p.coeff(k, n - k.total()) != Rational(1))
        throw std::logic_error("cone_V: missing top term");
}

MVPoly cone_S_poly(const MultiIndex& k, int n, const WeightSpec& w, bool monic_ball) {
    int m = k.total();
    MVPoly ballpart = (w.d == 1 && !monic_ball) ? gegenbauer_poly(k[0], w.mu, 1)
                                                : ball_V(k, w.mu);
    return monic_q(n - m, m, w) * homogenize_sub(ballpart, m);
}

}  // namespace

ConeBasisElement cone_S(const MultiIndex& k, int n, const WeightSpec& w) {
    check_kn(k, n, w);
    return {'S', k, n, w, cone_S_poly(k, n, w, /*monic_ball=*/w.d >= 2)};
}

ConeBasisElement cone_S_monic_ball(const MultiIndex& k, int n, const WeightSpec& w) {
    check_kn(k, n, w);
    return {'S', k, n, w, cone_S_poly(k, n, w, /*monic_ball=*/true)};
}

ConeBasisElement cone_V(const MultiIndex& k, int n, const WeightSpec& w) {
    check_kn(k, n, w);
    MVPoly p(w.d);
    if (w.d == 1) {
        auto cs = monomial_to_gegenbauer(k[0], w.mu);
        for (int j = 0; j <= k[0] / 2; ++j) {
            MultiIndex kj{k[0] - 2 * j};
            p += cone_S_poly(kj, n, w, false).scaled(cs[static_cast<size_t>(j)]);
        }
    } else {
        for (const auto& j : half_indices(k))
            p += cone_S_poly(sub_twice(k, j), n, w, true).scaled(ball_c_coeff(k, j, w.mu));
    }
    assert_monomiality(p, k, n);
    return {'V', k, n, w, std::move(p)};
}

ConeBasisElement cone_V_generic(const MultiIndex& k, int n, const WeightSpec& w) {
    check_kn(k, n, w);
    MVPoly p(w.d);
    for (const auto& j : half_indices(k))
        p += cone_S_poly(sub_twice(k, j), n, w, true).scaled(ball_c_coeff(k, j, w.mu));
    assert_monomiality(p, k, n);
    return {'V', k, n, w, std::move(p)};
}

Rational b_im(const MultiIndex& k, const MultiIndex& i, int m, const Rational& mu) {
    if (!twice_leq(i, k)) throw std::invalid_argument("b_im: requires 2i <= k");
    if (m < 0 || m > i.total()) throw std::invalid_argument("b_im: requires 0 <= m <= |i|");
    Rational l = mu + Rational(k.dim() - 1, 2);
    Rational mkl = Rational(-k.total()) - l;
    std::vector<Rational> h0, h1;
    for (int c = 0; c < k.dim(); ++c) {
        h0.push_back(Rational(-k[c], 2));
        h1.push_back(Rational(-k[c] + 1, 2));
    }
    Rational num = pochhammer_multi(h0, i) * pochhammer_multi(h1, i);
    if (m % 2 == 1) num = -num;
    Rational den = pochhammer(mkl + Rational(1), i.total() + m) * multi_factorial(i);
    if (den.is_zero()) throw std::logic_error("b_im: vanishing denominator Pochhammer");
    Rational fac = binomial(i.total(), m) *
                   (Rational(2) * pochhammer(mkl + Rational(1), m) - pochhammer(mkl, m));
    return num * fac / den;
}

BTable b_table(const MultiIndex& k, const Rational& mu) {
    BTable t{k, mu, {}};
    for (const auto& i : half_indices(k))
        for (int m = 0; m <= i.total(); ++m) t.entries[{i, m}] = b_im(k, i, m, mu);
    return t;
}

ConeBasisElement cone_V_via_btable(const MultiIndex& k, int n, const WeightSpec& w) {
    check_kn(k, n, w);
    int kk = k.total();
    MVPoly p(w.d);
    for (const auto& i : half_indices(k)) {
        for (int m = 0; m <= i.total(); ++m) {
            MVPoly q = monic_q(n - kk + 2 * m, kk - 2 * m, w);
            MVPoly mono = MVPoly::monomial(w.d, sub_twice(k, i), 2 * i.total() - 2 * m);
            p += (q * mono).scaled(b_im(k, i, m, w.mu));
        }
    }
    return {'V', k, n, w, std::move(p)};
}

Rational cone_V_norm_sq(const MultiIndex& k, int n, const WeightSpec& w) {
    check_kn(k, n, w);
    if (w.d > 1) return cone_V_norm_sq_generic(k, n, w);
    auto cs = monomial_to_gegenbauer(k[0], w.mu);
    Rational s(0);
    for (int i = 0; i <= k[0] / 2; ++i) {
        Rational c = cs[static_cast<size_t>(i)];
        s += c * c * gegenbauer_norm_sq(k[0] - 2 * i, w.mu) *
             monic_norm_sq(w, k[0] - 2 * i, n - k[0] + 2 * i);
    }
    return s;
}

Rational cone_V_norm_sq_generic(const MultiIndex& k, int n, const WeightSpec& w) {
    check_kn(k, n, w);
    int kk = k.total();
    Rational l = w.lambda();
    std::vector<Rational> halves(static_cast<size_t>(w.d), Rational(1, 2));
    std::vector<Rational> mk_half;
    for (int c = 0; c < w.d; ++c) mk_half.push_back(Rational(-k[c]) + Rational(1, 2));
    Rational pref = pochhammer_multi(halves, k) / pochhammer(w.mu + Rational(w.d + 1, 2), kk);
    Rational s(0);
    for (const auto& i : half_indices(k)) {
        Rational ratio = pochhammer(Rational(-kk) - l, i.total()) / pochhammer_multi(mk_half, i);
        for (int m = 0; m <= i.total(); ++m)
            s += b_im(k, i, m, w.mu) * monic_norm_sq(w, kk - 2 * m, n - kk + 2 * m) * ratio;
    }
    return pref * s;
}

ConeBasisElement cone_S_from_V(const MultiIndex& k, int n, const WeightSpec& w) {
    check_kn(k, n, w);
    MVPoly p(w.d);
    for (const auto& j : half_indices(k))
        p += cone_V_generic(sub_twice(k, j), n, w).poly.scaled(ball_b_coeff(k, j, w.mu));
    return {'S', k, n, w, std::move(p)};
}

std::vector<Rational> least_squares_error_table(const WeightSpec& w, int n, int kmax) {
    if (w.d != 1) throw std::invalid_argument("least_squares_error_table: d must be 1");
    if (kmax > n) throw std::invalid_argument("least_squares_error_table: kmax exceeds n");
    std::vector<Rational> out;
    for (int k = 0; k <= kmax; ++k) out.push_back(cone_V_norm_sq(MultiIndex{k}, n, w));
    return out;
}

Rational en_closed_form(const WeightSpec& w, int n, int k) {
    if (w.d != 1) throw std::invalid_argument("en_closed_form: d must be 1");
    const Rational one(1), two(2);
    Rational mu = w.mu, b = w.beta;
    Rational m2b1 = b + mu * two + one;
    if (w.family == Family::laguerre) {
        switch (k) {
            case 0:
                return factorial(n) * pochhammer(m2b1, n);
            case 1:
                return factorial(n - 1) * pochhammer(m2b1, n + 1) / (two * (mu + one));
            case 2:
                return factorial(n) * pochhammer(m2b1, n) / (Rational(4) * (mu + one) * (mu + one)) +
                       (mu * two + one) * factorial(n - 2) * pochhammer(m2b1, n + 2) /
                           (Rational(4) * (mu + one) * (mu + one) * (mu + two));
            case 3:
                return Rational(9) * factorial(n - 1) * pochhammer(m2b1, n + 1) /
                           (Rational(8) * (mu + one) * (mu + two) * (mu + two)) +
                       Rational(3) * (mu * two + one) * factorial(n - 3) * pochhammer(m2b1, n + 3) /
                           (Rational(8) * (mu + one) * (mu + two) * (mu + two) * (mu + Rational(3)));
            default:
                throw std::invalid_argument("en_closed_form: Laguerre k must be 0..3");
        }
    }
    Rational g = w.gamma;
    Rational a = b + g + mu * two + one;
    switch (k) {
        case 0:
            return factorial(n) * pochhammer(g + one, n) * pochhammer(a, n) * pochhammer(m2b1, n) /
                   (pochhammer(a, 2 * n) * pochhammer(a + one, 2 * n));
        case 1:
            return factorial(n - 1) * pochhammer(g + one, n - 1) * pochhammer(a + one, n) *
                   pochhammer(m2b1, n + 1) /
                   (two * (mu + one) * pochhammer(a + one, 2 * n) * pochhammer(a + one, 2 * n - 1));
        case 2:
            return factorial(n) * pochhammer(g + one, n) * pochhammer(a, n) * pochhammer(m2b1, n) /
                       (Rational(4) * (mu + one) * (mu + one) * pochhammer(a, 2 * n) *
                        pochhammer(a + one, 2 * n)) +
                   (mu * two + one) * factorial(n - 2) * pochhammer(g + one, n - 2) *
                       pochhammer(a + two, n) * pochhammer(m2b1, n + 2) /
                       (Rational(4) * (mu + one) * (mu + one) * (mu + two) *
                        pochhammer(a + one, 2 * n) * pochhammer(a + two, 2 * n - 2));
        default:
            throw std::invalid_argument("en_closed_form: Jacobi k must be 0..2");
    }
}

}  // namespace coneortho
