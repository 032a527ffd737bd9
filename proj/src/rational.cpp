#include "mv/rational.hpp"

#include <stdexcept>

namespace mv {

Rat make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto slash = s.find('/');
    Int num(slash == std::string::npos ? s : s.substr(0, slash));
    Int den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_string(const Rat& q) { return q.get_str(); }

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;  // base canonical => base^e canonical
}

GaussianRational GaussianRational::i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussianRational(1);
        case 1: return i();
        case 2: return GaussianRational(-1);
        default: return {Rat(0), Rat(-1)};
    }
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::invalid_argument("GaussianRational: division by zero");
    Rat n = norm();
    return {Rat(re / n), Rat(-im / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::string GaussianRational::str() const {
    if (im == 0) return rat_string(re);
    std::string s;
    if (re != 0) s = rat_string(re) + (im > 0 ? "+" : "");
    if (im == 1)
        s += "i";
    else if (im == -1)
        s += "-i";
    else
        s += rat_string(im) + "*i";
    return s;
}

GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    GaussianRational r = a;
    return r *= b;
}
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    GaussianRational r = a;
    return r /= b;
}
bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }

}  // namespace mv
