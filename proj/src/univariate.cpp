#include "coneortho/univariate.hpp"

#include "coneortho/pochhammer.hpp"

namespace coneortho {

std::vector<Rational> gegenbauer_coeffs(int n, const Rational& mu) {
    if (!(mu > Rational(-1, 2)))
        throw std::invalid_argument("gegenbauer_coeffs: mu must exceed -1/2");
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n / 2 + 1));
    for (int i = 0; i <= n / 2; ++i) {
        if (mu.is_zero()) {
            if (n == 0) {
                out.push_back(Rational(1));
                continue;
            }
            // T_n: (-1)^i 2^{n-2i-1} n (n-i-1)! / (i! (n-2i)!)
            Rational c = pow2(n - 2 * i - 1) * Rational(n) * factorial(n - i - 1) /
                         (factorial(i) * factorial(n - 2 * i));
            out.push_back(i % 2 == 0 ? c : -c);
        } else {
            Rational c = pow2(n - 2 * i) * pochhammer(mu, n - i) /
                         (factorial(i) * factorial(n - 2 * i));
            out.push_back(i % 2 == 0 ? c : -c);
        }
    }
    return out;
}

std::vector<Rational> monomial_to_gegenbauer(int k, const Rational& mu) {
    if (!(mu > Rational(-1, 2)))
        throw std::invalid_argument("monomial_to_gegenbauer: mu must exceed -1/2");
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(k / 2 + 1));
    for (int j = 0; j <= k / 2; ++j) {
        if (mu.is_zero()) {
            Rational c = binomial(k, j) / pow2(k);
            if (k != 2 * j) c *= Rational(2);
            out.push_back(c);
        } else {
            out.push_back(factorial(k) / pow2(k) * (Rational(k - 2 * j) + mu) /
                          (pochhammer(mu, k - j + 1) * factorial(j)));
        }
    }
    return out;
}

MVPoly gegenbauer_poly(int n, const Rational& mu, int dim) {
    auto bs = gegenbauer_coeffs(n, mu);
    MVPoly p(dim);
    for (int i = 0; i <= n / 2; ++i) {
        MultiIndex e(dim);
        e[0] = n - 2 * i;
        p.add_term(e, 0, bs[static_cast<size_t>(i)]);
    }
    return p;
}

Rational gegenbauer_norm_sq(int n, const Rational& mu) {
    if (mu.is_zero()) return n == 0 ? Rational(1) : Rational(1, 2);
    return mu * pochhammer(mu * Rational(2), n) / ((Rational(n) + mu) * factorial(n));
}

MVPoly monic_laguerre(int n, const Rational& alpha, int dim) {
    if (!(alpha > Rational(-1)))
        throw std::invalid_argument("monic_laguerre: alpha must exceed -1");
    MVPoly p(dim);
    Rational pref = pochhammer(alpha + Rational(1), n);
    if (n % 2 == 1) pref = -pref;
    MultiIndex zero(dim);
    for (int k = 0; k <= n; ++k) {
        Rational c = pref * pochhammer(Rational(-n), k) /
                     (pochhammer(alpha + Rational(1), k) * factorial(k));
        p.add_term(zero, k, c);
    }
    return p;
}

MVPoly classical_laguerre(int n, const Rational& alpha, int dim) {
    MVPoly p(dim);
    Rational pref = pochhammer(alpha + Rational(1), n) / factorial(n);
    MultiIndex zero(dim);
    for (int k = 0; k <= n; ++k) {
        Rational c = pref * pochhammer(Rational(-n), k) /
                     (pochhammer(alpha + Rational(1), k) * factorial(k));
        p.add_term(zero, k, c);
    }
    return p;
}

MVPoly classical_jacobi_1m2t(int n, const Rational& a, const Rational& c, int dim) {
    MVPoly p(dim);
    Rational pref = pochhammer(a + Rational(1), n) / factorial(n);
    MultiIndex zero(dim);
    for (int k = 0; k <= n; ++k) {
        Rational coef = pref * pochhammer(Rational(-n), k) *
                        pochhammer(Rational(n) + a + c + Rational(1), k) /
                        (pochhammer(a + Rational(1), k) * factorial(k));
        p.add_term(zero, k, coef);
    }
    return p;
}

MVPoly monic_jacobi_shifted(int n, const Rational& a, const Rational& c, int dim) {
    if (!(a > Rational(-1)) || !(c > Rational(-1)))
        throw std::invalid_argument("monic_jacobi_shifted: parameters must exceed -1");
    Rational scale = factorial(n) / pochhammer(Rational(n) + a + c + Rational(1), n);
    if (n % 2 == 1) scale = -scale;
    return classical_jacobi_1m2t(n, a, c, dim).scaled(scale);
}

MVPoly monic_q(int nu, int jslot, const WeightSpec& w) {
    Rational a = Rational(2 * jslot) + w.mu * Rational(2) + w.beta + Rational(w.d - 1);
    if (w.family == Family::laguerre) return monic_laguerre(nu, a, w.d);
    return monic_jacobi_shifted(nu, a, w.gamma, w.d);
}

Rational monic_norm_sq(const WeightSpec& w, int jslot, int nu) {
    Rational base = w.mu * Rational(2) + w.beta + Rational(w.d);
    if (w.family == Family::laguerre) return factorial(nu) * pochhammer(base, 2 * jslot + nu);
    Rational s = base + w.gamma + Rational(1);
    Rational num = factorial(nu) * pochhammer(base, 2 * jslot + nu) *
                   pochhammer(w.gamma + Rational(1), nu);
    Rational den = pochhammer(s, 2 * jslot + 2 * nu) *
                   pochhammer(Rational(2 * jslot + nu) + base + w.gamma, nu);
    return num / den;
}

}  // namespace coneortho
