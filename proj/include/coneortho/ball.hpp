#pragma once

#include <map>

#include "coneortho/multiindex.hpp"
#include "coneortho/mvpoly.hpp"
#include "coneortho/rational.hpp"

namespace coneortho {

/// Expansion coefficient b^mu_{k,j} of the monomial orthogonal polynomial
/// on the ball, V_k(y) = sum_{2j<=k} b^mu_{k,j} y^{k-2j}. Requires 2j <= k
/// and parameters for which the denominator Pochhammer cannot vanish
/// (lambda > 0, or d = 1 with mu in (-1/2,0) or mu > 0).
Rational ball_b_coeff(const MultiIndex& k, const MultiIndex& j, const Rational& mu);

/// Both coefficient tables for one k, with j ranging over 2j <= k.
/// b_{k,0} = c_{k,0} = 1 always.
struct BallCoeffs {
    MultiIndex k;
    Rational mu;
    Rational lambda;
    std::map<MultiIndex, Rational> b;
    std::map<MultiIndex, Rational> c;
};

BallCoeffs ball_coeffs(const MultiIndex& k, const Rational& mu);

/// Inverse-expansion coefficient c^mu_{k,j} with
/// y^k = sum_{2j<=k} c^mu_{k,j} V_{k-2j}(y).
Rational ball_c_coeff(const MultiIndex& k, const MultiIndex& j, const Rational& mu);

/// Monomial orthogonal polynomial V_k on the unit ball; leading term y^k
/// with coefficient 1.
MVPoly ball_V(const MultiIndex& k, const Rational& mu);

/// Rodrigues polynomial U_k on the unit ball, computed symbolically by
/// differentiating (1-|y|^2)^{|k|+mu-1/2} and dividing out the residual
/// weight exactly.
MVPoly ball_U(const MultiIndex& k, const Rational& mu);

/// Normalized ball moment of y^a under (1-|y|^2)^{mu-1/2};
/// zero when any a_i is odd.
Rational ball_moment(const MultiIndex& a, const Rational& mu);

/// Normalized pairing of two ball polynomials (all t-exponents zero).
Rational ball_pairing(const MVPoly& p, const MVPoly& q, const Rational& mu);

}  // namespace coneortho
