#include "coneortho/rodrigues.hpp"

#include "coneortho/ball.hpp"
#include "coneortho/pochhammer.hpp"
#include "coneortho/univariate.hpp"
#include "coneortho/weighted_form.hpp"

namespace coneortho {

namespace {

MVPoly cone_U_closed(const MultiIndex& k, int n, const WeightSpec& w) {
    int kk = k.total();
    Rational ck = pow2(kk) * pochhammer(w.mu + Rational(1, 2), kk) * multi_factorial(k) /
                  pochhammer(w.mu * Rational(2), kk);
    if (kk % 2 == 1) ck = -ck;
    Rational a = Rational(2 * kk) + w.alpha();
    MVPoly uni = w.family == Family::laguerre
                     ? classical_laguerre(n - kk, a, w.d)
                     : classical_jacobi_1m2t(n - kk, a, w.gamma, w.d);
    MVPoly hom = homogenize_sub(ball_U(k, w.mu), kk);
    return (hom * uni).scaled(ck * factorial(n - kk));
}

MVPoly cone_U_rodrigues(const MultiIndex& k, int n, const WeightSpec& w) {
    int kk = k.total();
    // x-part: d^k/dx^k (t^2-|x|^2)^{|k|+mu-1/2}, the residual
    // (t^2-|x|^2)^{mu-1/2} cancels against the weight
    WeightedForm f(MVPoly::constant(w.d, Rational(1)), cone_radical(w.d), kk,
                   w.mu - Rational(1, 2));
    WeightedForm g = weighted_derivative(f, k);
    if (g.shift != 0) throw std::logic_error("cone_U: residual radical power");
    // t-part: the quotient polynomial; the residual t and (1-t) powers
    // cancel against the weight and the 1/t^{2k+2mu+d-1} factor
    Rational s = Rational(n + kk) + w.beta + w.mu * Rational(2) + Rational(w.d - 1);
    MVPoly q = w.family == Family::laguerre
                   ? laguerre_t_quotient(s, n - kk, w.d)
                   : jacobi_t_quotient(s, w.gamma + Rational(n - kk), n - kk, w.d);
    return g.base * q;
}

}  // namespace

ConeBasisElement cone_U(const MultiIndex& k, int n, const WeightSpec& w, UMethod method) {
    if (k.dim() != w.d) throw std::invalid_argument("cone_U: k dimension mismatch");
    if (k.total() > n) throw std::invalid_argument("cone_U: requires |k| <= n");
    MVPoly p = method == UMethod::closed ? cone_U_closed(k, n, w) : cone_U_rodrigues(k, n, w);
    return {'U', k, n, w, std::move(p)};
}

BiorthoClass biortho_classify(const MultiIndex& k, const MultiIndex& j) {
    if (k == j) return BiorthoClass::diagonal;
    if (k.total() >= j.total()) return BiorthoClass::forced_zero;
    // |j| > |k|: d^k x^j vanishes unless k <= j; an odd component of j-k
    // kills the ball integral by symmetry
    if (!leq(k, j)) return BiorthoClass::forced_zero;
    for (int i = 0; i < k.dim(); ++i)
        if ((j[i] - k[i]) % 2 != 0) return BiorthoClass::forced_zero;
    return BiorthoClass::unconstrained;
}

Rational biortho_diagonal_value(const MultiIndex& k, int n, const WeightSpec& w) {
    int kk = k.total();
    Rational v = multi_factorial(k) * factorial(n - kk) *
                 pochhammer(w.mu * Rational(2) + w.beta + Rational(w.d), n + kk) *
                 pochhammer(w.mu + Rational(1, 2), kk) /
                 pochhammer(w.mu + Rational(w.d + 1, 2), kk);
    if (w.family == Family::jacobi)
        v *= pochhammer(w.gamma + Rational(1), n - kk) /
             pochhammer(w.mu * Rational(2) + w.beta + w.gamma + Rational(w.d + 1), 2 * n);
    return n % 2 == 0 ? v : -v;
}

BiorthoEntry biortho_pair(const MultiIndex& k, const MultiIndex& j, int n,
                          const Pairing& pairing) {
    const WeightSpec& w = pairing.weight();
    Rational v = pairing(cone_U(k, n, w).poly, cone_V(j, n, w).poly);
    BiorthoClass cls = biortho_classify(k, j);
    if (cls == BiorthoClass::forced_zero && !v.is_zero())
        throw std::logic_error("biortho_pair: forced-zero cell is nonzero");
    if (cls == BiorthoClass::diagonal && v != biortho_diagonal_value(k, n, w))
        throw std::logic_error("biortho_pair: diagonal cell mismatch");
    return {k, j, n, cls, std::move(v)};
}

std::vector<BiorthoEntry> biortho_report(int n, const WeightSpec& w) {
    Pairing pairing(w);
    std::vector<BiorthoEntry> out;
    auto ks = indices_up_to_degree(w.d, n);
    for (const auto& k : ks)
        for (const auto& j : ks) out.push_back(biortho_pair(k, j, n, pairing));
    return out;
}

Rational y_coeff_laguerre(int i, int k, int n, const WeightSpec& w) {
    return factorial(k) * pochhammer(w.mu + Rational(i + n - k + 1), i) /
           (pow2(2 * i) * factorial(k - 2 * i) * factorial(i) *
            pochhammer(w.mu + Rational(n - k) + Rational(1, 2), 2 * i) *
            pochhammer(w.mu * Rational(2) + w.beta + Rational(2 * n - k + 1), 2 * i));
}

Rational y_coeff_jacobi(int i, int k, int n, const WeightSpec& w) {
    return y_coeff_laguerre(i, k, n, w) * pochhammer(w.gamma + Rational(k - 2 * i + 1), 2 * i);
}

Rational u_v_cross_value_laguerre(int k, int i, int n, const WeightSpec& w) {
    Rational v = factorial(k + 2 * i) * factorial(n - k) *
                 pochhammer(w.mu * Rational(2) + w.beta + Rational(1), n + k) *
                 pochhammer(w.mu + Rational(1, 2), k) * pochhammer(Rational(1, 2), i) /
                 (factorial(2 * i) * pochhammer(w.mu + Rational(1), k + i));
    return n % 2 == 0 ? v : -v;
}

std::vector<ConeBasisElement> y_basis(int n, const WeightSpec& w) {
    if (w.d != 1) throw std::invalid_argument("y_basis: requires d = 1");
    // Y_{n-k,n} for recursion parameter k = 0..n; ys[idx] holds Y_{idx,n}
    std::vector<MVPoly> ys(static_cast<size_t>(n + 1), MVPoly(1));
    for (int k = 0; k <= n; ++k) {
        int idx = n - k;
        MVPoly p = cone_U(MultiIndex{idx}, n, w).poly;
        for (int i = 1; i <= k / 2; ++i) {
            Rational c = w.family == Family::laguerre ? y_coeff_laguerre(i, k, n, w)
                                                      : y_coeff_jacobi(i, k, n, w);
            p -= ys[static_cast<size_t>(idx + 2 * i)].scaled(c);
        }
        ys[static_cast<size_t>(idx)] = std::move(p);
    }
    std::vector<ConeBasisElement> out;
    for (int idx = 0; idx <= n; ++idx)
        out.push_back({'Y', MultiIndex{idx}, n, w, ys[static_cast<size_t>(idx)]});
    return out;
}

ConeBasisElement cone_Y(int kindex, int n, const WeightSpec& w) {
    if (kindex < 0 || kindex > n) throw std::invalid_argument("cone_Y: index out of range");
    return y_basis(n, w)[static_cast<size_t>(kindex)];
}

}  // namespace coneortho
