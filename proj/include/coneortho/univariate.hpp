#pragma once

#include <vector>

#include "coneortho/mvpoly.hpp"
#include "coneortho/rational.hpp"
#include "coneortho/weight.hpp"

namespace coneortho {

/// Coefficients b^mu_{n,i} of C_n^mu in monomials,
///   C_n^mu(x) = sum_i b^mu_{n,i} x^{n-2i},  i = 0..floor(n/2).
/// mu = 0 returns the Chebyshev T_n coefficients.
std::vector<Rational> gegenbauer_coeffs(int n, const Rational& mu);

/// Coefficients c^mu_{k,j} of the reversed expansion
///   x^k = sum_j c^mu_{k,j} C^mu_{k-2j}(x),  j = 0..floor(k/2).
/// mu = 0 uses the Chebyshev coefficients with the halved k = 2j tail.
std::vector<Rational> monomial_to_gegenbauer(int k, const Rational& mu);

/// C_n^mu as a polynomial in x_1 (ambient dimension dim); T_n at mu = 0.
MVPoly gegenbauer_poly(int n, const Rational& mu, int dim);

/// Normalized squared Gegenbauer norm h_n^mu; Chebyshev values at mu = 0.
Rational gegenbauer_norm_sq(int n, const Rational& mu);

/// Monic degree-n polynomial in t orthogonal w.r.t. t^alpha e^{-t} on R+.
MVPoly monic_laguerre(int n, const Rational& alpha, int dim);

/// Classical Laguerre L_n^alpha as a polynomial in t.
MVPoly classical_laguerre(int n, const Rational& alpha, int dim);

/// Monic degree-n polynomial in t orthogonal w.r.t. t^a (1-t)^c on [0,1].
MVPoly monic_jacobi_shifted(int n, const Rational& a, const Rational& c, int dim);

/// Classical Jacobi P_n^{(a,c)}(1-2t) as a polynomial in t.
MVPoly classical_jacobi_1m2t(int n, const Rational& a, const Rational& c, int dim);

/// Monic one-variable orthogonal polynomial q of degree nu for the radial
/// weight t^{d+2j+2mu-1} w(t), in the ambient dimension w.d.
MVPoly monic_q(int nu, int jslot, const WeightSpec& w);

/// Normalized squared norm of monic_q(nu, jslot, w) under the cone's
/// radial pairing (radial integral divided by its jslot = 0, nu = 0 value).
Rational monic_norm_sq(const WeightSpec& w, int jslot, int nu);

}  // namespace coneortho
