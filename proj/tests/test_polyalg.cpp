#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coneortho/mvpoly.hpp"
#include "coneortho/weighted_form.hpp"

using namespace coneortho;

namespace {

MVPoly random_poly(std::mt19937& rng, int dim, int max_deg, int nterms) {
    std::uniform_int_distribution<int> deg(0, max_deg), num(-5, 5), den(1, 3);
    MVPoly p(dim);
    for (int i = 0; i < nterms; ++i) {
        MultiIndex x(dim);
        for (int j = 0; j < dim; ++j) x[j] = deg(rng);
        p.add_term(x, deg(rng), Rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    MVPoly x1 = MVPoly::var_x(2, 0);
    MVPoly x2 = MVPoly::var_x(2, 1);
    MVPoly t = MVPoly::var_t(2);
    MVPoly one = MVPoly::constant(2, Rational(1));

    CHECK(x1 + x1 == x1.scaled(Rational(2)));
    CHECK((t - one) * (t + one) == t * t - one);
    CHECK((x1 * x2).scaled(Rational(1, 2)) ==
          MVPoly::monomial(2, MultiIndex{1, 1}, 0, Rational(1, 2)));
    CHECK((x1 - x1).is_zero());
    CHECK((x1 - x1).term_count() == 0);  // zero terms pruned
    CHECK(x1.degree() == 1);
    CHECK((t * t * x2).degree() == 3);
    CHECK_THROWS_AS(x1 + MVPoly::var_t(1), std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        MVPoly a = random_poly(rng, 2, 3, 4);
        MVPoly b = random_poly(rng, 2, 3, 4);
        MVPoly c = random_poly(rng, 2, 3, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("homogenization") {
    MVPoly one = MVPoly::constant(2, Rational(1));
    CHECK(homogenize_sub(one, 3) == MVPoly::monomial(2, MultiIndex{0, 0}, 3));

    MVPoly y1sq = MVPoly::monomial(2, MultiIndex{2, 0}, 0);
    CHECK(homogenize_sub(y1sq, 2) == MVPoly::monomial(2, MultiIndex{2, 0}, 0));

    MVPoly p = MVPoly::monomial(2, MultiIndex{1, 1}, 0, Rational(2)) - one;
    MVPoly expect = MVPoly::monomial(2, MultiIndex{1, 1}, 0, Rational(2)) -
                    MVPoly::monomial(2, MultiIndex{0, 0}, 2);
    CHECK(homogenize_sub(p, 2) == expect);

    CHECK_THROWS_AS(homogenize_sub(y1sq, 1), std::invalid_argument);
    CHECK_THROWS_AS(homogenize_sub(MVPoly::var_t(2), 3), std::invalid_argument);
}

TEST_CASE("homogenization is multiplicative") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        MVPoly p(2), q(2);
        std::uniform_int_distribution<int> deg(0, 2), num(-4, 4), den(1, 3);
        for (int i = 0; i < 3; ++i) {
            MultiIndex a(2);
            a[0] = deg(rng);
            a[1] = deg(rng);
            p.add_term(a, 0, Rational(num(rng), den(rng)));
            MultiIndex b(2);
            b[0] = deg(rng);
            b[1] = deg(rng);
            q.add_term(b, 0, Rational(num(rng), den(rng)));
        }
        int m1 = 4, m2 = 4;
        CHECK(homogenize_sub(p * q, m1 + m2) ==
              homogenize_sub(p, m1) * homogenize_sub(q, m2));
    }
}

TEST_CASE("weighted derivative: single chain-rule step") {
    // d/dx of (t^2-x^2)^{1+mu-1/2} = (mu+1/2)(-2x)(t^2-x^2)^{mu-1/2}
    Rational mu(1, 3);
    WeightedForm f(MVPoly::constant(1, Rational(1)), cone_radical(1), 1,
                   mu - Rational(1, 2));
    WeightedForm g = f.deriv_x(0);
    CHECK(g.shift == 0);
    CHECK(g.base == MVPoly::var_x(1, 0).scaled((mu + Rational(1, 2)) * Rational(-2)));

    WeightedForm id(MVPoly::constant(1, Rational(1)), cone_radical(1), 0,
                    mu - Rational(1, 2));
    WeightedForm same = weighted_derivative(id, MultiIndex{0});
    CHECK(same.base == id.base);
    CHECK(same.shift == 0);
}

TEST_CASE("weighted derivative commutes across coordinates") {
    Rational mu(2, 5);
    MVPoly base = MVPoly::var_x(2, 0) * MVPoly::var_t(2) +
                  MVPoly::constant(2, Rational(1, 3));
    WeightedForm f(base, cone_radical(2), 3, mu - Rational(1, 2));
    WeightedForm a = f.deriv_x(0).deriv_x(1);
    WeightedForm b = f.deriv_x(1).deriv_x(0);
    CHECK(a.base == b.base);
    CHECK(a.shift == b.shift);
}

TEST_CASE("weighted derivative matches plain differentiation at integer exponents") {
    // with mu = 1/2 the form is base * radical^e with integer e; expanding
    // and differentiating directly must agree, all |k| <= 3, e <= 3, d <= 2
    for (int d = 1; d <= 2; ++d) {
        MVPoly radical = cone_radical(d);
        for (int e = 0; e <= 3; ++e) {
            for (const auto& k : indices_up_to_degree(d, 3)) {
                if (k.total() > e) continue;
                WeightedForm f(MVPoly::constant(d, Rational(1)), radical, e, Rational(0));
                WeightedForm g = weighted_derivative(f, k);
                // expanded radical^e differentiated term by term
                MVPoly expanded = MVPoly::constant(d, Rational(1));
                for (int i = 0; i < e; ++i) expanded = expanded * radical;
                for (int i = 0; i < d; ++i)
                    for (int c = 0; c < k[i]; ++c) expanded = expanded.deriv_x(i);
                // g.base * radical^{e-|k|} must equal the expansion
                MVPoly lhs = g.base;
                for (int i = 0; i < e - k.total(); ++i) lhs = lhs * radical;
                CHECK(lhs == expanded);
            }
        }
    }
}

TEST_CASE("weighted derivative precondition") {
    WeightedForm f(MVPoly::constant(1, Rational(1)), cone_radical(1), 1, Rational(0));
    CHECK_THROWS_AS(weighted_derivative(f, MultiIndex{2}), std::invalid_argument);
}

TEST_CASE("univariate weighted t-derivatives") {
    // one product-rule step
    Rational a(7, 2);
    MVPoly q1 = laguerre_t_quotient(a + Rational(1), 1, 1);
    MVPoly expect = MVPoly::constant(1, a + Rational(1)) - MVPoly::var_t(1);
    CHECK(q1 == expect);
    CHECK(laguerre_t_quotient(a, 0, 1) == MVPoly::constant(1, Rational(1)));

    Rational c(5, 3);
    MVPoly j1 = jacobi_t_quotient(a + Rational(1), c + Rational(1), 1, 1);
    MVPoly ej = (MVPoly::constant(1, Rational(1)) - MVPoly::var_t(1)).scaled(a + Rational(1)) -
                MVPoly::var_t(1).scaled(c + Rational(1));
    CHECK(j1 == ej);
    CHECK(jacobi_t_quotient(a, c, 0, 1) == MVPoly::constant(1, Rational(1)));
}

TEST_CASE("t-derivative quotients against direct expansion at integer exponents") {
    // for integer s the product t^s e^{-t} can be differentiated directly:
    // d^m/dt^m (t^s e^{-t}) = sum_i binom(m,i) (s)_(falling,i) t^{s-i} (-1)^{m-i} e^-t.
    // Check the recurrence against explicit polynomial division instead:
    // q(t) t^{s-m} = d^m(t^s e^{-t}) e^{t}, expanded via Leibniz.
    for (int s = 4; s <= 6; ++s)
        for (int m = 0; m <= 3; ++m) {
            MVPoly q = laguerre_t_quotient(Rational(s), m, 1);
            MVPoly direct(1);
            MVPoly t = MVPoly::var_t(1);
            // Leibniz: sum_i C(m,i) * d^i(t^s) * (-1)^{m-i}
            for (int i = 0; i <= m; ++i) {
                Rational falling(1);
                for (int j = 0; j < i; ++j) falling *= Rational(s - j);
                Rational coef = falling * Rational((m - i) % 2 == 0 ? 1 : -1);
                // binomial C(m,i)
                Rational binom(1);
                for (int j = 0; j < i; ++j)
                    binom = binom * Rational(m - j) / Rational(j + 1);
                // term t^{s-i}, divided by t^{s-m} leaves t^{m-i}
                direct += MVPoly::monomial(1, MultiIndex{0}, m - i, coef * binom);
            }
            CHECK(q == direct);
        }
}
