#pragma once

#include <stdexcept>
#include <vector>

#include "coneortho/multiindex.hpp"
#include "coneortho/rational.hpp"

namespace coneortho {

/// Rising factorial a(a+1)...(a+n-1); empty product for n = 0.
inline Rational pochhammer(const Rational& a, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    Rational r(1);
    Rational f = a;
    for (int i = 0; i < n; ++i) {
        r *= f;
        f += Rational(1);
    }
    return r;
}

/// Componentwise product of rising factorials, (a)_j = prod_i (a_i)_{j_i}.
inline Rational pochhammer_multi(const std::vector<Rational>& a, const MultiIndex& j) {
    if (static_cast<int>(a.size()) != j.dim())
        throw std::invalid_argument("pochhammer_multi: length mismatch");
    Rational r(1);
    for (int i = 0; i < j.dim(); ++i) r *= pochhammer(a[static_cast<size_t>(i)], j[i]);
    return r;
}

inline Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

/// k! = k_1! ... k_d!
inline Rational multi_factorial(const MultiIndex& k) {
    Rational r(1);
    for (int i = 0; i < k.dim(); ++i) r *= factorial(k[i]);
    return r;
}

inline Rational binomial(int n, int m) {
    if (m < 0 || m > n) return Rational(0);
    return factorial(n) / (factorial(m) * factorial(n - m));
}

/// 2^n as a Rational, n may be negative.
inline Rational pow2(int n) {
    Rational two(2);
    Rational r(1);
    for (int i = 0; i < (n >= 0 ? n : -n); ++i) r *= two;
    return n >= 0 ? r : Rational(1) / r;
}

}  // namespace coneortho
