#pragma once

#include <map>
#include <vector>

#include "coneortho/multiindex.hpp"
#include "coneortho/mvpoly.hpp"
#include "coneortho/rational.hpp"
#include "coneortho/weight.hpp"

namespace coneortho {

/// One basis polynomial on the cone, tagged by family.
struct ConeBasisElement {
    char family;  // 'S', 'V', 'U' or 'Y'
    MultiIndex k;
    int n;
    WeightSpec weight;
    MVPoly poly;
};

/// Separable basis element S_{k,n} = q^{alpha}_{n-|k|}(t) t^{|k|} P_k(x/t).
/// For d = 1 the ball factor is the plain Gegenbauer C^mu_k (Chebyshev at
/// mu = 0); for d >= 2 it is the monic ball polynomial V_k.
ConeBasisElement cone_S(const MultiIndex& k, int n, const WeightSpec& w);

/// S_{k,n} built on the monic ball V_k for every d. Coincides with cone_S
/// for d >= 2; for d = 1 it differs from cone_S by the leading coefficient
/// of C^mu_k. This is the normalization the S <-> V inversion and the
/// S-family generating functions are stated in.
ConeBasisElement cone_S_monic_ball(const MultiIndex& k, int n, const WeightSpec& w);

/// Monomial orthogonal polynomial V_{k,n} = t^{n-|k|} x^k + lower degree.
/// d = 1 runs the Gegenbauer-coefficient path (Chebyshev at mu = 0);
/// d >= 2 runs the multi-index path. The unique-top-term postcondition is
/// verified on every construction.
ConeBasisElement cone_V(const MultiIndex& k, int n, const WeightSpec& w);

/// The d-generic multi-index construction of V_{k,n}, also meaningful at
/// d = 1 for mu != 0. Used to reconcile the two d = 1 presentations.
ConeBasisElement cone_V_generic(const MultiIndex& k, int n, const WeightSpec& w);

/// Table coefficient B_{i,m}; depends on i only through the half-integer
/// Pochhammers and |i|.
Rational b_im(const MultiIndex& k, const MultiIndex& i, int m, const Rational& mu);

struct BTable {
    MultiIndex k;
    Rational mu;
    std::map<std::pair<MultiIndex, int>, Rational> entries;  // (i, m) -> B_{i,m}
};

/// All B_{i,m} for 2i <= k, 0 <= m <= |i|. Requires lambda > 0 (or the
/// d = 1, mu != 0 range).
BTable b_table(const MultiIndex& k, const Rational& mu);

/// Direct monomial-expansion construction of V_{k,n} through the B table.
/// Must agree with cone_V / cone_V_generic exactly.
ConeBasisElement cone_V_via_btable(const MultiIndex& k, int n, const WeightSpec& w);

/// Closed-form squared norm of V_{k,n}; equals pairing(V,V) exactly.
Rational cone_V_norm_sq(const MultiIndex& k, int n, const WeightSpec& w);

/// The d-generic closed-form norm (also meaningful at d = 1, mu != 0).
Rational cone_V_norm_sq_generic(const MultiIndex& k, int n, const WeightSpec& w);

/// S_{k,n} reconstructed as sum_{2j<=k} b^mu_{k,j} V_{k-2j,n}; equals
/// cone_S_monic_ball exactly (and cone_S for d >= 2).
ConeBasisElement cone_S_from_V(const MultiIndex& k, int n, const WeightSpec& w);

/// Squared least-squares errors [E_n(t^{n-k} x^k)]^2 for k = 0..kmax,
/// d = 1 only, via cone_V_norm_sq.
std::vector<Rational> least_squares_error_table(const WeightSpec& w, int n, int kmax);

/// The displayed closed forms for [E_n(t^{n-k} x^k)]^2, d = 1:
/// k = 0..3 for Laguerre, k = 0..2 for Jacobi.
Rational en_closed_form(const WeightSpec& w, int n, int k);

}  // namespace coneortho
