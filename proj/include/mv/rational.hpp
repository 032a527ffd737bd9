#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace mv {

using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);
Rat parse_rat(const std::string& s);  // "n" or "n/d"
std::string rat_string(const Rat& q);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);
Rat rat_pow(const Rat& base, unsigned long e);

// a + b*i with exact rational a, b and i*i = -1.  Both parts are kept in
// canonical reduced form by GMP; equality is exact.
struct GaussianRational {
    Rat re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rat r) : re(std::move(r)), im(0) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rat(0), Rat(1)}; }
    static GaussianRational i_pow(long k);  // i^k for any integer k

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, Rat(-im)}; }
    Rat norm() const { return re * re + im * im; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);
    GaussianRational operator-() const { return {Rat(-re), Rat(-im)}; }

    std::string str() const;
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
bool operator==(const GaussianRational& a, const GaussianRational& b);
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

}  // namespace mv
