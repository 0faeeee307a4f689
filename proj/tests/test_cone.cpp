#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coneortho/ball.hpp"
#include "coneortho/cone.hpp"
#include "coneortho/pairing.hpp"
#include "coneortho/pochhammer.hpp"
#include "coneortho/univariate.hpp"

using namespace coneortho;

TEST_CASE("cone S pinned cases") {
    WeightSpec w = WeightSpec::laguerre(1, Rational(1, 2), Rational(0));
    // k = 0: plain monic radial polynomial
    CHECK(cone_S(MultiIndex{0}, 2, w).poly == monic_q(2, 0, w));
    // k = n: q_0 = 1, pure homogenized Gegenbauer
    CHECK(cone_S(MultiIndex{2}, 2, w).poly ==
          homogenize_sub(gegenbauer_poly(2, w.mu, 1), 2));
    // k=1, n=2, mu=1/2, beta=0: monic_laguerre(1, alpha=3) = t-4, C_1^{1/2}(u)=u
    MVPoly expect = (MVPoly::var_t(1) - MVPoly::constant(1, Rational(4))) *
                    MVPoly::var_x(1, 0);
    CHECK(cone_S(MultiIndex{1}, 2, w).poly == expect);
    CHECK_THROWS_AS(cone_S(MultiIndex{3}, 2, w), std::invalid_argument);
}

TEST_CASE("cone V pinned cases, d = 1") {
    WeightSpec w = WeightSpec::laguerre(1, Rational(1, 2), Rational(0));
    // k=0: the monic Laguerre with alpha = 2mu+beta = 1: t - 2
    CHECK(cone_V(MultiIndex{0}, 1, w).poly ==
          MVPoly::var_t(1) - MVPoly::constant(1, Rational(2)));
    // k=1: q^{2+2mu+beta}_{n-1}(t) * x  (the 2mu of C_1 cancels against c_{1,0})
    for (int n = 1; n <= 4; ++n)
        CHECK(cone_V(MultiIndex{1}, n, w).poly ==
              monic_q(n - 1, 1, w) * MVPoly::var_x(1, 0));
    // k=2, n=2: x^2 - (2mu+beta+2) t/(mu+1) + (2mu+beta+1)(2mu+beta+2)/(2(mu+1))
    // at mu=1/2, beta=0: x^2 - 2t + 2
    MVPoly expect = MVPoly::monomial(1, MultiIndex{2}, 0) -
                    MVPoly::var_t(1).scaled(Rational(2)) +
                    MVPoly::constant(1, Rational(2));
    CHECK(cone_V(MultiIndex{2}, 2, w).poly == expect);
}

TEST_CASE("cone V pinned cases, d = 2") {
    // V_{(1,1),2} is just the monomial x1 x2 (no lower terms)
    WeightSpec wj = WeightSpec::jacobi(2, Rational(1), Rational(1), Rational(1, 2));
    CHECK(cone_V(MultiIndex{1, 1}, 2, wj).poly ==
          MVPoly::monomial(2, MultiIndex{1, 1}, 0));

    // V_{(2,0),3} for Laguerre mu=1, beta=0, frozen from the moment oracle
    WeightSpec wl = WeightSpec::laguerre(2, Rational(1), Rational(0));
    MVPoly expect = MVPoly::monomial(2, MultiIndex{2, 0}, 1) -
                    MVPoly::monomial(2, MultiIndex{2, 0}, 0, Rational(8)) -
                    MVPoly::monomial(2, MultiIndex{0, 0}, 2, Rational(2)) +
                    MVPoly::monomial(2, MultiIndex{0, 0}, 1, Rational(18)) -
                    MVPoly::monomial(2, MultiIndex{0, 0}, 0, Rational(24));
    CHECK(cone_V(MultiIndex{2, 0}, 3, wl).poly == expect);
}

TEST_CASE("monomiality: single top-degree term") {
    for (int d = 1; d <= 2; ++d) {
        WeightSpec w = WeightSpec::jacobi(d, Rational(1, 2), Rational(0), Rational(1, 2));
        for (const auto& k : indices_up_to_degree(d, 4))
            for (int n = k.total(); n <= 5; ++n) {
                MVPoly p = cone_V(k, n, w).poly;  // construction asserts internally
                MVPoly top = MVPoly::monomial(d, k, n - k.total());
                CHECK((p - top).degree() <= n - 1);
            }
    }
}

TEST_CASE("B table") {
    // i = 0, m = 0 entry is 1
    CHECK(b_im(MultiIndex{4, 2}, MultiIndex{0, 0}, 0, Rational(1)) == Rational(1));

    // d=2, k=(2,0), i=(1,0): the m=0 entry equals b^mu_{k,i}'s Pochhammer core
    for (const Rational& mu : {Rational(1, 2), Rational(1)}) {
        Rational lambda = mu + Rational(1, 2);
        Rational expect = Rational(-1) / (Rational(2) * (Rational(1) + lambda));
        CHECK(b_im(MultiIndex{2, 0}, MultiIndex{1, 0}, 0, mu) == expect);
        // m=1 entry must equal the single-term sum c_{k,(1,0)} b_{k-2(1,0),0}
        CHECK(b_im(MultiIndex{2, 0}, MultiIndex{1, 0}, 1, mu) ==
              ball_c_coeff(MultiIndex{2, 0}, MultiIndex{1, 0}, mu) *
                  ball_b_coeff(MultiIndex{0, 0}, MultiIndex{0, 0}, mu));
    }

    // generally B_{i,m} = sum over |j| = m of c_{k,j} b_{k-2j,i-j}
    for (const Rational& mu : {Rational(1, 2), Rational(7, 3)}) {
        MultiIndex k{4, 2};
        for (const auto& i : half_indices(k))
            for (int m = 0; m <= i.total(); ++m) {
                Rational direct(0);
                for (const auto& j : indices_leq(i)) {
                    if (j.total() != m || !twice_leq(j, k)) continue;
                    if (!twice_leq(sub(i, j), sub_twice(k, j))) continue;
                    direct += ball_c_coeff(k, j, mu) *
                              ball_b_coeff(sub_twice(k, j), sub(i, j), mu);
                }
                CHECK(b_im(k, i, m, mu) == direct);
            }
    }

    BTable table = b_table(MultiIndex{2, 2}, Rational(1));
    CHECK(table.entries.size() == 1 + 2 + 2 + 3);  // (i,m) pairs with m <= |i|
    CHECK(table.entries.at({MultiIndex{0, 0}, 0}) == Rational(1));
}

TEST_CASE("construction equivalence of the two explicit forms") {
    for (int d = 2; d <= 3; ++d) {
        WeightSpec wl = WeightSpec::laguerre(d, Rational(1, 2), Rational(1));
        WeightSpec wj = WeightSpec::jacobi(d, Rational(1), Rational(0), Rational(1, 2));
        for (const auto& w : {wl, wj})
            for (const auto& k : indices_up_to_degree(d, d == 3 ? 3 : 4))
                for (int n = k.total(); n <= (d == 3 ? 4 : 5); ++n)
                    CHECK(cone_V_generic(k, n, w).poly == cone_V_via_btable(k, n, w).poly);
    }
}

TEST_CASE("orthogonality of V to all lower degree monomials") {
    for (int d = 1; d <= 2; ++d) {
        WeightSpec wl = WeightSpec::laguerre(d, Rational(1, 2), Rational(0));
        WeightSpec wj = WeightSpec::jacobi(d, Rational(1), Rational(1), Rational(1, 2));
        for (const auto& w : {wl, wj}) {
            Pairing pairing(w);
            for (const auto& k : indices_up_to_degree(d, 3))
                for (int n = k.total(); n <= 4; ++n) {
                    MVPoly v = cone_V(k, n, w).poly;
                    for (int m = 0; m < n; ++m)
                        for (int s = 0; s <= m; ++s)
                            for (const auto& a : indices_of_degree(d, m - s))
                                CHECK(pairing(v, MVPoly::monomial(d, a, s)).is_zero());
                }
        }
    }
}

TEST_CASE("chebyshev path: d = 1, mu = 0") {
    WeightSpec w = WeightSpec::jacobi(1, Rational(0), Rational(0), Rational(0));
    Pairing pairing(w);
    for (int k = 0; k <= 4; ++k)
        for (int n = k; n <= 4; ++n) {
            MVPoly v = cone_V(MultiIndex{k}, n, w).poly;
            for (int m = 0; m < n; ++m)
                for (int s = 0; s <= m; ++s)
                    CHECK(pairing(v, MVPoly::monomial(1, MultiIndex{m - s}, s)).is_zero());
            CHECK(pairing(v, v) == cone_V_norm_sq(MultiIndex{k}, n, w));
        }
}

TEST_CASE("norm closed forms equal the exact pairing") {
    for (int d = 1; d <= 2; ++d) {
        WeightSpec wl = WeightSpec::laguerre(d, Rational(1, 2), Rational(1));
        WeightSpec wj = WeightSpec::jacobi(d, Rational(1), Rational(0), Rational(1, 2));
        for (const auto& w : {wl, wj}) {
            Pairing pairing(w);
            for (const auto& k : indices_up_to_degree(d, 3))
                for (int n = k.total(); n <= 4; ++n) {
                    MVPoly v = cone_V(k, n, w).poly;
                    CHECK(pairing(v, v) == cone_V_norm_sq(k, n, w));
                }
        }
    }
}

TEST_CASE("d = 1 reconciliation: generic machinery matches the Gegenbauer path") {
    for (const Rational& mu : {Rational(1, 2), Rational(1), Rational(7, 3)}) {
        WeightSpec w = WeightSpec::laguerre(1, mu, Rational(1));
        for (int k = 0; k <= 4; ++k)
            for (int n = k; n <= 5; ++n) {
                CHECK(cone_V(MultiIndex{k}, n, w).poly ==
                      cone_V_generic(MultiIndex{k}, n, w).poly);
                CHECK(cone_V_norm_sq(MultiIndex{k}, n, w) ==
                      cone_V_norm_sq_generic(MultiIndex{k}, n, w));
            }
    }
}

TEST_CASE("S from V inversion") {
    WeightSpec w2 = WeightSpec::laguerre(2, Rational(1), Rational(0));
    for (const auto& k : indices_up_to_degree(2, 4))
        for (int n = k.total(); n <= 5; ++n)
            CHECK(cone_S_from_V(k, n, w2).poly == cone_S(k, n, w2).poly);

    // trivial single-term cases
    WeightSpec wj = WeightSpec::jacobi(2, Rational(1, 2), Rational(0), Rational(0));
    CHECK(cone_S_from_V(MultiIndex{0, 0}, 3, wj).poly ==
          cone_V(MultiIndex{0, 0}, 3, wj).poly);
    CHECK(cone_S_from_V(MultiIndex{1, 1}, 3, wj).poly ==
          cone_V(MultiIndex{1, 1}, 3, wj).poly);
}

TEST_CASE("least-squares error tables: pinned Laguerre values") {
    WeightSpec w = WeightSpec::laguerre(1, Rational(1, 2), Rational(0));
    auto table = least_squares_error_table(w, 2, 2);
    CHECK(table == std::vector<Rational>{Rational(12), Rational(8), Rational(12)});
    // E_n(t^n): n!(beta+2mu+1)_n; n=2: 2*(2)_2 = 12. E_2(tx): 1!*(2)_3/(2*3/2) = 8.
    CHECK(en_closed_form(w, 2, 0) == Rational(12));
    CHECK(en_closed_form(w, 2, 1) == Rational(8));
    CHECK_THROWS_AS(least_squares_error_table(WeightSpec::laguerre(2, Rational(1, 2),
                                                                   Rational(0)),
                                              2, 1),
                    std::invalid_argument);
}

TEST_CASE("displayed error closed forms match the norm sums") {
    for (const Rational& mu : {Rational(1, 2), Rational(1)})
        for (const Rational& beta : {Rational(0), Rational(1)}) {
            WeightSpec wl = WeightSpec::laguerre(1, mu, beta);
            for (int n = 3; n <= 6; ++n)
                for (int k = 0; k <= 3; ++k)
                    CHECK(en_closed_form(wl, n, k) == cone_V_norm_sq(MultiIndex{k}, n, wl));
            for (const Rational& gamma : {Rational(0), Rational(1, 2)}) {
                WeightSpec wj = WeightSpec::jacobi(1, mu, beta, gamma);
                for (int n = 2; n <= 6; ++n)
                    for (int k = 0; k <= 2; ++k)
                        CHECK(en_closed_form(wj, n, k) ==
                              cone_V_norm_sq(MultiIndex{k}, n, wj));
            }
        }
}

TEST_CASE("normal-equation minima equal the norm closed forms") {
    WeightSpec wl = WeightSpec::laguerre(1, Rational(1, 2), Rational(1));
    WeightSpec wj = WeightSpec::jacobi(1, Rational(1), Rational(0), Rational(1, 2));
    for (const auto& w : {wl, wj})
        for (int n = 1; n <= 3; ++n)
            for (int k = 0; k <= n; ++k) {
                MVPoly target = MVPoly::monomial(1, MultiIndex{k}, n - k);
                CHECK(solve_normal_equations(target, n - 1, w) ==
                      cone_V_norm_sq(MultiIndex{k}, n, w));
            }
}
