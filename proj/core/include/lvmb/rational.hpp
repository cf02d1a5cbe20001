#pragma once

#include <gmpxx.h>

#include <string>

namespace lvmb {

// Exact scalars. mpq_class values produced by the helpers below are always
// canonical: lowest terms, denominator > 0.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
// input or zero denominator.
Rational parse_rational(const std::string& text);

// Formats as "p/q", omitting "/q" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

// Complex scalar with rational real and imaginary parts. Entries of the
// subspace data live here.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
};

GaussianRational conj(const GaussianRational& z);

// |z|^2 as an exact rational.
Rational norm_sq(const GaussianRational& z);

// Multiplication by sqrt(-1).
GaussianRational times_i(const GaussianRational& z);

std::string to_string(const GaussianRational& z);

}  // namespace lvmb
