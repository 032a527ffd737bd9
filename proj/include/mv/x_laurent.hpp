#pragma once

#include <string>
#include <vector>

#include "mv/lambda_series.hpp"
#include "mv/rational.hpp"

namespace mv {

// Laurent polynomial in x over GaussianRational.  In the trigonometric layer
// x stands for e^{i*lambda/2}, so 2 sin(k*lambda/2) = -i (x^k - x^{-k}); in the
// symmetric-function layer the same type carries polynomials in q.
struct XLaurent {
    int val = 0;
    std::vector<GaussianRational> c;  // coefficient of x^(val + index); ends nonzero

    static XLaurent zero() { return {}; }
    static XLaurent one() { return monomial(GaussianRational(1), 0); }
    static XLaurent monomial(GaussianRational a, int exponent);
    static XLaurent sine_block(int k);  // -i (x^k - x^{-k}), i.e. 2 sin(k*lambda/2)

    bool is_zero() const { return c.empty(); }
    int degree() const { return val + static_cast<int>(c.size()) - 1; }
    const GaussianRational& coeff(int exponent) const;
    void normalize();
    std::string str() const;

    XLaurent& operator+=(const XLaurent& o);
    XLaurent& operator-=(const XLaurent& o);
    XLaurent operator-() const;
};

XLaurent operator+(XLaurent a, const XLaurent& b);
XLaurent operator-(XLaurent a, const XLaurent& b);
XLaurent operator*(const XLaurent& a, const XLaurent& b);
XLaurent operator*(const XLaurent& a, const GaussianRational& s);
bool operator==(const XLaurent& a, const XLaurent& b);

// Exact ratio of Laurent polynomials in x.  Normalized so the denominator is
// an ordinary polynomial with constant term 1; equality is decided by
// cross-multiplication, with no polynomial gcd needed.
class XLaurentRational {
public:
    XLaurentRational();  // 1
    XLaurentRational(XLaurent num, XLaurent den);

    const XLaurent& num() const { return num_; }
    const XLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    XLaurentRational reciprocal() const;
    XLaurentRational operator*(const XLaurentRational& o) const;
    bool operator==(const XLaurentRational& o) const;
    bool operator!=(const XLaurentRational& o) const { return !(*this == o); }

    // Substitute x = e^{i*lambda/2} and expand to the requested order.
    LambdaSeries to_lambda_series(int order) const;

    // Expand as a power series in x itself (the q reading); requires the
    // numerator to have no pole at x = 0.
    std::vector<GaussianRational> power_series(int order) const;

private:
    XLaurent num_, den_;
    void normalize();
};

LambdaSeries xlaurent_to_series(const XLaurent& p, int order);
inline LambdaSeries x_to_series(const XLaurentRational& r, int order) { return r.to_lambda_series(order); }

}  // namespace mv
