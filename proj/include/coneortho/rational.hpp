#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmp.h>

namespace coneortho {

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. Canonical zero is 0/1. Equality is structural, which is
/// exact because values are canonical.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long num, long den);

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk.
    static Rational parse(const std::string& s);

    Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r(*this);
        mpq_neg(r.q_, r.q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    Rational abs() const {
        Rational r(*this);
        mpq_abs(r.q_, r.q_);
        return r;
    }

    /// Numerator / denominator as decimal strings.
    std::string num_string() const;
    std::string den_string() const;

    /// "p" when integral, else "p/q".
    std::string to_string() const;

    /// Decimal expansion with `digits` places after the point, rounded
    /// half away from zero. Pure integer arithmetic, no floating point.
    std::string decimal_string(int digits) const;

    /// Numerator / denominator when they fit in a long.
    long num_as_long() const;
    long den_as_long() const;

    /// v-th root when it is exactly rational (v >= 1); negative values
    /// admit odd roots only.
    friend std::optional<Rational> exact_root(const Rational& c, int v);

private:
    mpq_t q_;
};

std::optional<Rational> exact_root(const Rational& c, int v);

inline Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

}  // namespace coneortho
