#include "lvmb/rational.hpp"

#include <stdexcept>

namespace lvmb {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, text.c_str(), 10) != 0) {
        mpq_clear(q);
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    }
    mpq_canonicalize(q);
    Rational r(q);
    mpq_clear(q);
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero GaussianRational");
    Rational d = norm_sq(b);
    GaussianRational num = a * conj(b);
    return {num.re / d, num.im / d};
}

GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

Rational norm_sq(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

GaussianRational times_i(const GaussianRational& z) { return {-z.im, z.re}; }

std::string to_string(const GaussianRational& z) {
    return to_string(z.re) + (z.im >= 0 ? "+" : "") + to_string(z.im) + "i";
}

}  // namespace lvmb
