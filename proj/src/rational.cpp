#include "coneortho/rational.hpp"

#include <memory>

namespace coneortho {

namespace {

std::string mpz_to_string(const mpz_t z) {
    std::unique_ptr<char, void (*)(void*)> buf(mpz_get_str(nullptr, 10, z), std::free);
    return std::string(buf.get());
}

}  // namespace

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits_only = [](const std::string& t, bool sign_ok) {
        if (t.empty()) return false;
        size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!digits_only(num, true) || !digits_only(den, false))
        throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    Rational r;
    mpz_set_str(mpq_numref(r.q_), num.c_str(), 10);
    mpz_set_str(mpq_denref(r.q_), den.c_str(), 10);
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
        throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    mpq_canonicalize(r.q_);
    return r;
}

std::string Rational::num_string() const { return mpz_to_string(mpq_numref(q_)); }

std::string Rational::den_string() const { return mpz_to_string(mpq_denref(q_)); }

std::string Rational::to_string() const {
    if (is_integer()) return num_string();
    return num_string() + "/" + den_string();
}

long Rational::num_as_long() const {
    if (!mpz_fits_slong_p(mpq_numref(q_)))
        throw std::overflow_error("Rational: numerator does not fit in long");
    return mpz_get_si(mpq_numref(q_));
}

long Rational::den_as_long() const {
    if (!mpz_fits_slong_p(mpq_denref(q_)))
        throw std::overflow_error("Rational: denominator does not fit in long");
    return mpz_get_si(mpq_denref(q_));
}

std::optional<Rational> exact_root(const Rational& c, int v) {
    if (v < 1) throw std::invalid_argument("exact_root: v must be >= 1");
    if (v == 1) return c;
    if (c.sign() < 0 && v % 2 == 0) return std::nullopt;
    Rational r;
    bool num_exact = mpz_root(mpq_numref(r.q_), mpq_numref(c.q_), static_cast<unsigned long>(v)) != 0;
    bool den_exact = mpz_root(mpq_denref(r.q_), mpq_denref(c.q_), static_cast<unsigned long>(v)) != 0;
    if (!num_exact || !den_exact) return std::nullopt;
    mpq_canonicalize(r.q_);
    return r;
}

std::string Rational::decimal_string(int digits) const {
    mpz_t scaled, shift, quot, rem;
    mpz_inits(scaled, shift, quot, rem, nullptr);
    mpz_ui_pow_ui(shift, 10, static_cast<unsigned long>(digits));
    mpz_abs(scaled, mpq_numref(q_));
    mpz_mul(scaled, scaled, shift);
    mpz_fdiv_qr(quot, rem, scaled, mpq_denref(q_));
    // round half away from zero
    mpz_mul_2exp(rem, rem, 1);
    if (mpz_cmp(rem, mpq_denref(q_)) >= 0) mpz_add_ui(quot, quot, 1);
    mpz_t ipart, fpart;
    mpz_inits(ipart, fpart, nullptr);
    mpz_fdiv_qr(ipart, fpart, quot, shift);
    std::string frac = digits == 0 ? "" : mpz_to_string(fpart);
    if (frac.size() < static_cast<size_t>(digits))
        frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = (sign() < 0 ? "-" : "") + mpz_to_string(ipart) + "." + frac;
    mpz_clears(scaled, shift, quot, rem, ipart, fpart, nullptr);
    return out;
}

}  // namespace coneortho
