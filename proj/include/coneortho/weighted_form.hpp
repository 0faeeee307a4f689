#pragma once

#include "coneortho/mvpoly.hpp"
#include "coneortho/multiindex.hpp"
#include "coneortho/rational.hpp"

namespace coneortho {

/// base(x,t) * radical(x,t)^(shift + sigma), with sigma a fixed rational
/// exponent offset (mu - 1/2 in every use here) and shift an integer.
/// Closed under d/dx_i: one derivative lowers shift by 1,
///   (p, e)  ->  (dp/dx_i * radical + p * (e + sigma) * dradical/dx_i, e - 1).
struct WeightedForm {
    MVPoly base;
    MVPoly radical;
    int shift;
    Rational sigma;

    WeightedForm(MVPoly base_, MVPoly radical_, int shift_, Rational sigma_)
        : base(std::move(base_)),
          radical(std::move(radical_)),
          shift(shift_),
          sigma(std::move(sigma_)) {
        if (shift < 0) throw std::invalid_argument("WeightedForm: shift must be >= 0");
    }

    WeightedForm deriv_x(int i) const {
        Rational expo = Rational(shift) + sigma;
        MVPoly nb = base.deriv_x(i) * radical + base.scaled(expo) * radical.deriv_x(i);
        return WeightedForm(std::move(nb), radical, shift - 1, sigma);
    }
};

/// radical t^2 - |x|^2 on the cone (dim = d x-variables plus t)
MVPoly cone_radical(int d);

/// radical 1 - |y|^2 on the ball
MVPoly ball_radical(int d);

/// |k|-fold partial derivative d^k/dx^k applied to f. Requires
/// f.shift >= |k| so the resulting shift stays non-negative.
WeightedForm weighted_derivative(const WeightedForm& f, const MultiIndex& k);

/// Polynomial quotient q of degree m with
///   d^m/dt^m [ t^s e^{-t} ] = q(t) t^{s-m} e^{-t}.
/// s may be any rational.
MVPoly laguerre_t_quotient(const Rational& s, int m, int dim);

/// Polynomial quotient q of degree m with
///   d^m/dt^m [ t^s (1-t)^c ] = q(t) t^{s-m} (1-t)^{c-m}.
MVPoly jacobi_t_quotient(const Rational& s, const Rational& c, int m, int dim);

}  // namespace coneortho
