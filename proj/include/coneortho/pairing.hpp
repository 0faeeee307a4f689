#pragma once

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "coneortho/multiindex.hpp"
#include "coneortho/mvpoly.hpp"
#include "coneortho/rational.hpp"
#include "coneortho/weight.hpp"

namespace coneortho {

/// Normalized cone moment <x^a t^s, 1> for the given weight:
/// radial Pochhammer ratio times the ball moment.
Rational cone_moment(const MultiIndex& a, int s, const WeightSpec& w);

/// Exact normalized inner product on the cone with a read-mostly moment
/// cache. One instance per WeightSpec; safe to share across threads.
class Pairing {
public:
    explicit Pairing(WeightSpec w) : w_(std::move(w)) {}

    const WeightSpec& weight() const { return w_; }

    Rational moment(const MultiIndex& a, int s) const;

    Rational operator()(const MVPoly& p, const MVPoly& q) const;

private:
    WeightSpec w_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::pair<MultiIndex, int>, Rational> cache_;
};

/// Gram matrix of all monomials x^a t^s with |a| + s <= degree, in the
/// canonical (graded-lex) order returned alongside it.
struct GramMatrix {
    std::vector<std::pair<MultiIndex, int>> monomials;
    std::vector<std::vector<Rational>> entries;
};

GramMatrix gram_matrix(int degree, const WeightSpec& w);

/// Exact determinant by fraction-free (Bareiss) elimination; rows are
/// scaled to integers first and the scale divided back out.
Rational bareiss_determinant(std::vector<std::vector<Rational>> m);

/// Exact minimum of ||target - P||^2 over polynomials P of total degree
/// <= degree, via the bordered-Gram determinant ratio. Throws if the Gram
/// matrix is singular.
Rational solve_normal_equations(const MVPoly& target, int degree, const WeightSpec& w);

}  // namespace coneortho
