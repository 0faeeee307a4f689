#include "coneortho/ball.hpp"

#include "coneortho/pochhammer.hpp"
#include "coneortho/weighted_form.hpp"

namespace coneortho {

namespace {

Rational lambda_of(int d, const Rational& mu) { return mu + Rational(d - 1, 2); }

std::vector<Rational> half_of(const MultiIndex& k, int offset) {
    std::vector<Rational> a;
    a.reserve(static_cast<size_t>(k.dim()));
    for (int i = 0; i < k.dim(); ++i) a.push_back(Rational(-k[i] + offset, 2));
    return a;
}

Rational denom_poch(const MultiIndex& k, const Rational& lambda, int n) {
    Rational v = pochhammer(Rational(-k.total()) - lambda + Rational(1), n);
    if (v.is_zero())
        throw std::logic_error("ball coefficients: vanishing denominator Pochhammer");
    return v;
}

}  // namespace

Rational ball_b_coeff(const MultiIndex& k, const MultiIndex& j, const Rational& mu) {
    if (!twice_leq(j, k)) throw std::invalid_argument("ball_b_coeff: requires 2j <= k");
    Rational l = lambda_of(k.dim(), mu);
    Rational num = pochhammer_multi(half_of(k, 0), j) * pochhammer_multi(half_of(k, 1), j);
    return num / (denom_poch(k, l, j.total()) * multi_factorial(j));
}

Rational ball_c_coeff(const MultiIndex& k, const MultiIndex& j, const Rational& mu) {
    if (!twice_leq(j, k)) throw std::invalid_argument("ball_c_coeff: requires 2j <= k");
    Rational l = lambda_of(k.dim(), mu);
    Rational num = pochhammer_multi(half_of(k, 0), j) * pochhammer_multi(half_of(k, 1), j);
    if (j.total() % 2 == 1) num = -num;
    Rational fac = Rational(2) * pochhammer(Rational(-k.total()) - l + Rational(1), j.total()) -
                   pochhammer(Rational(-k.total()) - l, j.total());
    return num * fac / (denom_poch(k, l, 2 * j.total()) * multi_factorial(j));
}

BallCoeffs ball_coeffs(const MultiIndex& k, const Rational& mu) {
    BallCoeffs out{k, mu, lambda_of(k.dim(), mu), {}, {}};
    for (const auto& j : half_indices(k)) {
        out.b.emplace(j, ball_b_coeff(k, j, mu));
        out.c.emplace(j, ball_c_coeff(k, j, mu));
    }
    return out;
}

MVPoly ball_V(const MultiIndex& k, const Rational& mu) {
    MVPoly p(k.dim());
    for (const auto& j : half_indices(k))
        p.add_term(sub_twice(k, j), 0, ball_b_coeff(k, j, mu));
    return p;
}

MVPoly ball_U(const MultiIndex& k, const Rational& mu) {
    if (!(mu > Rational(-1, 2))) throw std::invalid_argument("ball_U: mu must exceed -1/2");
    const int d = k.dim();
    const int n = k.total();
    WeightedForm f(MVPoly::constant(d, Rational(1)), ball_radical(d), n, mu - Rational(1, 2));
    WeightedForm g = weighted_derivative(f, k);
    if (g.shift != 0) throw std::logic_error("ball_U: residual radical power");
    Rational pref = pochhammer(mu * Rational(2), n) /
                    (pow2(n) * pochhammer(mu + Rational(1, 2), n) * multi_factorial(k));
    if (n % 2 == 1) pref = -pref;
    return g.base.scaled(pref);
}

Rational ball_moment(const MultiIndex& a, const Rational& mu) {
    MultiIndex alpha(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] % 2 == 1) return Rational(0);
        alpha[i] = a[i] / 2;
    }
    std::vector<Rational> halves(static_cast<size_t>(a.dim()), Rational(1, 2));
    return pochhammer_multi(halves, alpha) /
           pochhammer(mu + Rational(a.dim() + 1, 2), alpha.total());
}

Rational ball_pairing(const MVPoly& p, const MVPoly& q, const Rational& mu) {
    Rational s(0);
    for (const auto& [mp, cp] : p.terms()) {
        if (mp.t != 0) throw std::invalid_argument("ball_pairing: t-dependence");
        for (const auto& [mq, cq] : q.terms()) {
            if (mq.t != 0) throw std::invalid_argument("ball_pairing: t-dependence");
            s += cp * cq * ball_moment(mp.x + mq.x, mu);
        }
    }
    return s;
}

}  // namespace coneortho
