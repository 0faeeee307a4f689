#include "coneortho/weighted_form.hpp"

namespace coneortho {

MVPoly cone_radical(int d) {
    MVPoly r = MVPoly::var_t(d) * MVPoly::var_t(d);
    for (int i = 0; i < d; ++i) r -= MVPoly::var_x(d, i) * MVPoly::var_x(d, i);
    return r;
}

MVPoly ball_radical(int d) {
    MVPoly r = MVPoly::constant(d, Rational(1));
    for (int i = 0; i < d; ++i) r -= MVPoly::var_x(d, i) * MVPoly::var_x(d, i);
    return r;
}

WeightedForm weighted_derivative(const WeightedForm& f, const MultiIndex& k) {
    if (f.shift < k.total())
        throw std::invalid_argument("weighted_derivative: shift smaller than |k|");
    WeightedForm g = f;
    for (int i = 0; i < k.dim(); ++i)
        for (int c = 0; c < k[i]; ++c) g = g.deriv_x(i);
    return g;
}

MVPoly laguerre_t_quotient(const Rational& s, int m, int dim) {
    if (m < 0) throw std::invalid_argument("laguerre_t_quotient: negative order");
    MVPoly q = MVPoly::constant(dim, Rational(1));
    MVPoly t = MVPoly::var_t(dim);
    Rational a = s;
    for (int i = 0; i < m; ++i) {
        q = q.deriv_t() * t + q.scaled(a) - q * t;
        a -= Rational(1);
    }
    if (q.degree() != m)
        throw std::logic_error("laguerre_t_quotient: quotient degree mismatch");
    return q;
}

MVPoly jacobi_t_quotient(const Rational& s, const Rational& c, int m, int dim) {
    if (m < 0) throw std::invalid_argument("jacobi_t_quotient: negative order");
    MVPoly q = MVPoly::constant(dim, Rational(1));
    MVPoly t = MVPoly::var_t(dim);
    MVPoly omt = MVPoly::constant(dim, Rational(1)) - t;
    Rational a = s, cc = c;
    for (int i = 0; i < m; ++i) {
        q = q.deriv_t() * t * omt + q.scaled(a) * omt - q.scaled(cc) * t;
        a -= Rational(1);
        cc -= Rational(1);
    }
    if (q.degree() != m)
        throw std::logic_error("jacobi_t_quotient: quotient degree mismatch");
    return q;
}

}  // namespace coneortho
