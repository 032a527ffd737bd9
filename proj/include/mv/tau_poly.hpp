#pragma once

#include <string>
#include <vector>

#include "mv/rational.hpp"

namespace mv {

// Polynomial in the formal variable tau over GaussianRational.  No trailing
// zero coefficient is ever stored; the zero polynomial is the empty list and
// its degree is the sentinel kZeroDegree.
class TauPoly {
public:
    static constexpr int kZeroDegree = -1;

    TauPoly() = default;
    TauPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
    TauPoly(long c);              // NOLINT(google-explicit-constructor)
    explicit TauPoly(std::vector<GaussianRational> coeffs);

    static TauPoly variable();  // tau

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_real() const;
    const GaussianRational& coeff(int k) const;
    GaussianRational at_zero() const { return coeff(0); }
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    TauPoly derivative() const;
    TauPoly truncated(int max_degree) const;
    TauPoly pow(unsigned k) const;
    std::string str() const;

    TauPoly& operator+=(const TauPoly& o);
    TauPoly& operator-=(const TauPoly& o);
    TauPoly& operator*=(const TauPoly& o);
    TauPoly operator-() const;

private:
    std::vector<GaussianRational> c_;  // c_[k] = coefficient of tau^k
    void normalize();
};

TauPoly operator+(TauPoly a, const TauPoly& b);
TauPoly operator-(TauPoly a, const TauPoly& b);
TauPoly operator*(const TauPoly& a, const TauPoly& b);
TauPoly operator*(const TauPoly& a, const GaussianRational& s);
bool operator==(const TauPoly& a, const TauPoly& b);
inline bool operator!=(const TauPoly& a, const TauPoly& b) { return !(a == b); }

// Exact quotient a/b; throws IdentityViolation if the remainder is nonzero
// (that means a divisibility identity failed, not a recoverable condition).
TauPoly tau_divide_exact(const TauPoly& a, const TauPoly& b);

}  // namespace mv
