#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coneortho/rational.hpp"
#include "coneortho/weight.hpp"

namespace coneortho {

struct VerifyResult {
    std::string suite;
    size_t checked = 0;
    std::vector<std::string> tuples;  // one label per checked tuple
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool pass() const { return failures.empty(); }
};

/// Parameter grids used by the verification sweeps:
/// mu in {1/2, 1}, beta in {0, 1}, gamma in {0, 1/2}.
std::vector<WeightSpec> laguerre_grid(int d);
std::vector<WeightSpec> jacobi_grid(int d);
std::vector<WeightSpec> weight_grid(int d, std::optional<Family> only = {});

/// sum_{i<=j} b_{k,i} c_{k-2i,j-i} = delta_{j,0}, exact.
VerifyResult verify_bc_delta(const std::vector<int>& dims, int max_k,
                             const std::vector<Rational>& mus, unsigned jobs = 0);

/// Ball-side checks: V_k and U_k orthogonal to lower-degree monomials and
/// the normalized U/V pairing diagonal.
VerifyResult verify_ball_ortho(const std::vector<int>& dims, int max_k, unsigned jobs = 0);

/// Monomiality of V_{k,n} plus exact orthogonality to all lower-degree
/// monomials, over the parameter grid.
VerifyResult verify_cone_ortho(const std::vector<int>& dims, int max_n, unsigned jobs = 0,
                               std::optional<Family> only = {});

/// The two explicit constructions of V_{k,n} coincide.
VerifyResult verify_construction_equiv(const std::vector<int>& dims, int max_k, int max_n,
                                       unsigned jobs = 0, std::optional<Family> only = {});

/// Closed-form norms equal the exact pairing; includes the d = 1
/// reconciliation of the two construction paths.
VerifyResult verify_norms(const std::vector<int>& dims, int max_n, unsigned jobs = 0,
                          std::optional<Family> only = {});

/// The displayed least-squares error closed forms against the norm sums,
/// d = 1, on the parameter grid.
VerifyResult verify_en_tables(int max_n, unsigned jobs = 0, std::optional<Family> only = {});

/// Brute-force normal-equation minima equal the closed-form norms (d = 1).
VerifyResult verify_least_squares(int max_n, unsigned jobs = 0,
                                  std::optional<Family> only = {});

/// Closed and symbolic-derivative constructions of U_{k,n} agree, and
/// U_{k,n} is orthogonal to everything of lower degree.
VerifyResult verify_rodrigues_dual(const std::vector<int>& dims, int max_n, unsigned jobs = 0,
                                   std::optional<Family> only = {});

/// Partial biorthogonality classification of <U,V>, with at least one
/// genuinely unconstrained nonzero cell exhibited.
VerifyResult verify_biortho(const std::vector<int>& dims, int max_n, unsigned jobs = 0,
                            std::optional<Family> only = {});

/// Full biorthogonality of the Y basis against the V basis (d = 1).
VerifyResult verify_y_biortho(int max_n, unsigned jobs = 0, std::optional<Family> only = {});

/// S_{k,n} = sum_j b_{k,j} V_{k-2j,n}.
VerifyResult verify_s_from_v(const std::vector<int>& dims, int max_k, int max_n,
                             unsigned jobs = 0, std::optional<Family> only = {});

/// All six generating functions, coefficientwise at the given order.
VerifyResult verify_genfunc_suite(const std::vector<int>& dims, int order, unsigned jobs = 0,
                                  std::optional<Family> only = {},
                                  std::optional<std::string> target = {});

/// Everything above at the acceptance bounds.
std::vector<VerifyResult> verify_all(unsigned jobs = 0);

}  // namespace coneortho
