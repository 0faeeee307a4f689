#pragma once

#include <string>
#include <vector>

#include "coneortho/cone.hpp"
#include "coneortho/pairing.hpp"

namespace coneortho {

enum class UMethod { closed, rodrigues };

/// Rodrigues-family polynomial U_{k,n} on the cone. `closed` assembles the
/// product of the ball Rodrigues polynomial with the classical univariate
/// polynomial; `rodrigues` evaluates the defining repeated derivatives
/// symbolically, dividing out the residual weight exactly. The two agree.
ConeBasisElement cone_U(const MultiIndex& k, int n, const WeightSpec& w,
                        UMethod method = UMethod::closed);

enum class BiorthoClass { diagonal, forced_zero, unconstrained };

inline std::string biortho_class_name(BiorthoClass c) {
    switch (c) {
        case BiorthoClass::diagonal: return "diagonal";
        case BiorthoClass::forced_zero: return "forced-zero";
        default: return "unconstrained";
    }
}

/// Which cell of the <U_{k,n}, V_{j,n}> matrix (k,j) falls in. Cells with
/// |k| >= |j| (off the diagonal), or with j - k not a componentwise
/// non-negative even vector, pair to exactly zero.
BiorthoClass biortho_classify(const MultiIndex& k, const MultiIndex& j);

/// Closed form of the diagonal <U_{k,n}, V_{k,n}> (componentwise k!).
Rational biortho_diagonal_value(const MultiIndex& k, int n, const WeightSpec& w);

struct BiorthoEntry {
    MultiIndex k;
    MultiIndex j;
    int n;
    BiorthoClass cls;
    Rational value;
};

/// Normalized pairing <U_{k,n}, V_{j,n}> with its classification. Verifies
/// forced-zero cells are exactly zero and diagonal cells match the closed
/// form; a violation throws (it would mean a construction bug).
BiorthoEntry biortho_pair(const MultiIndex& k, const MultiIndex& j, int n,
                          const Pairing& pairing);

/// Full report over |k|, |j| <= n.
std::vector<BiorthoEntry> biortho_report(int n, const WeightSpec& w);

/// Recursion coefficient c_{i,k} for the Laguerre Y-family (d = 1).
Rational y_coeff_laguerre(int i, int k, int n, const WeightSpec& w);

/// Recursion coefficient d_{i,k} for the Jacobi Y-family (d = 1).
Rational y_coeff_jacobi(int i, int k, int n, const WeightSpec& w);

/// Closed form of <U_{k,n}, V_{k+2i,n}> for d = 1 Laguerre, the cross term
/// driving the Y recursion.
Rational u_v_cross_value_laguerre(int k, int i, int n, const WeightSpec& w);

/// Y_{kindex,n} for d = 1: the recursive correction of U_{kindex,n} that is
/// fully biorthogonal to the V-family. kindex ranges over 0..n.
ConeBasisElement cone_Y(int kindex, int n, const WeightSpec& w);

/// All of Y_{0,n}..Y_{n,n} (shares the recursion work).
std::vector<ConeBasisElement> y_basis(int n, const WeightSpec& w);

}  // namespace coneortho
