#pragma once

#include <stdexcept>
#include <string>

#include "coneortho/rational.hpp"

namespace coneortho {

enum class Family { laguerre, jacobi };

inline std::string family_name(Family f) {
    return f == Family::laguerre ? "laguerre" : "jacobi";
}

/// Weight parameters on the cone: w(t)(t^2-|x|^2)^{mu-1/2} with
/// w(t) = t^beta e^{-t} (Laguerre) or t^beta (1-t)^gamma (Jacobi).
struct WeightSpec {
    Family family;
    int d;
    Rational mu;
    Rational beta;
    Rational gamma;  // Jacobi only

    WeightSpec(Family f, int d_, Rational mu_, Rational beta_, Rational gamma_ = Rational(0))
        : family(f), d(d_), mu(std::move(mu_)), beta(std::move(beta_)), gamma(std::move(gamma_)) {
        if (d < 1) throw std::invalid_argument("WeightSpec: d must be >= 1");
        if (!(mu > Rational(-1, 2)))
            throw std::invalid_argument("WeightSpec: mu must exceed -1/2");
        if (!(beta > Rational(-d)))
            throw std::invalid_argument("WeightSpec: beta must exceed -d");
        if (family == Family::jacobi && !(gamma > Rational(-1)))
            throw std::invalid_argument("WeightSpec: gamma must exceed -1");
    }

    static WeightSpec laguerre(int d, Rational mu, Rational beta) {
        return WeightSpec(Family::laguerre, d, std::move(mu), std::move(beta));
    }
    static WeightSpec jacobi(int d, Rational mu, Rational beta, Rational gamma) {
        return WeightSpec(Family::jacobi, d, std::move(mu), std::move(beta), std::move(gamma));
    }

    /// lambda = mu + (d-1)/2
    Rational lambda() const { return mu + Rational(d - 1, 2); }

    /// radial parameter 2mu + beta + d - 1
    Rational alpha() const { return mu * Rational(2) + beta + Rational(d - 1); }

    friend bool operator==(const WeightSpec& a, const WeightSpec& b) {
        return a.family == b.family && a.d == b.d && a.mu == b.mu && a.beta == b.beta &&
               (a.family == Family::laguerre || a.gamma == b.gamma);
    }
};

}  // namespace coneortho
