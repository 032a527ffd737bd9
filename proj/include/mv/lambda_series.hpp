#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mv/tau_poly.hpp"

namespace mv {

// Truncated Laurent series in lambda with TauPoly coefficients.
//
// A series is known exactly at every exponent n < order(); exponents >= order()
// were never computed.  Below valuation() all coefficients are exactly zero, so
// the known window is the whole half-line (-inf, order).  order() == kUnbounded
// marks exact series (finite support, known everywhere): constants, monomials
// and other Laurent polynomials in lambda.
//
// A series whose known window contains no nonzero coefficient has empty
// support; it reports valuation() == order() (the one case where the
// "order > valuation" invariant is relaxed).
class LambdaSeries {
public:
    static constexpr int kUnbounded = std::numeric_limits<int>::max();

    LambdaSeries() = default;  // exact zero
    static LambdaSeries zero_to(int order);
    static LambdaSeries constant(TauPoly c);
    static LambdaSeries monomial(TauPoly c, int exponent);

    bool support_empty() const { return c_.empty(); }
    bool is_exact() const { return order_ == kUnbounded; }
    bool is_zero() const { return c_.empty() && is_exact(); }
    int valuation() const { return c_.empty() ? order_ : valuation_; }
    int order() const { return order_; }
    bool known(int n) const { return n < order_; }
    const TauPoly& coeff(int n) const;
    int support_end() const { return valuation_ + static_cast<int>(c_.size()); }
    int tau_degree() const;

    LambdaSeries truncated(int order) const;  // forget exponents >= order
    LambdaSeries shifted(int exponents) const;
    LambdaSeries scaled(const GaussianRational& s) const;
    LambdaSeries scaled(const TauPoly& s) const;
    LambdaSeries tau_derivative() const;
    LambdaSeries at_tau_zero() const;
    LambdaSeries tau_truncated(int max_tau_degree) const;

    LambdaSeries& operator+=(const LambdaSeries& o);
    LambdaSeries& operator-=(const LambdaSeries& o);
    LambdaSeries operator-() const;

    bool identical(const LambdaSeries& o) const;  // same window, same coefficients
    std::string str() const;

    static int sat_add(int a, int b);
    static int sat_min(int a, int b) { return a < b ? a : b; }

private:
    int valuation_ = 0;
    int order_ = kUnbounded;
    std::vector<TauPoly> c_;  // coefficient of lambda^(valuation_ + index)
    void normalize();
    friend LambdaSeries operator*(const LambdaSeries&, const LambdaSeries&);
    friend LambdaSeries series_inverse(const LambdaSeries&, std::optional<int>);
    friend LambdaSeries series_exp(const LambdaSeries&, std::optional<int>);
    friend LambdaSeries series_log(const LambdaSeries&, std::optional<int>);
    friend LambdaSeries exact_divide(const LambdaSeries&, const TauPoly&);
};

LambdaSeries operator+(LambdaSeries a, const LambdaSeries& b);
LambdaSeries operator-(LambdaSeries a, const LambdaSeries& b);
LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b);

// 1/a.  The leading coefficient of a must be a nonzero constant (tau-degree 0).
// `order` is required when a is exact with more than one term (the inverse is
// then an honest infinite series); otherwise the result window is derived.
LambdaSeries series_inverse(const LambdaSeries& a, std::optional<int> order = std::nullopt);

// exp(s) for valuation(s) >= 1; log(t) for constant term exactly 1.
// Mutually inverse on their shared domains and windows.
LambdaSeries series_exp(const LambdaSeries& s, std::optional<int> order = std::nullopt);
LambdaSeries series_log(const LambdaSeries& t, std::optional<int> order = std::nullopt);

// Coefficient-wise exact division by a TauPoly; window unchanged.
LambdaSeries exact_divide(const LambdaSeries& a, const TauPoly& b);

// Taylor series of 2*sin(k*lambda/2) on [1, order); requires k >= 1.
LambdaSeries sin_block(int k, int order);

// exp(c*lambda): coefficient of lambda^n is c^n/n!, window [0, order).
LambdaSeries exp_tau_lambda(const TauPoly& c, int order);

struct SeriesMismatch {
    int lambda_exp = 0;
    int tau_exp = 0;
    GaussianRational lhs, rhs;
};

// First differing coefficient of a and b on the shared known window.
std::optional<SeriesMismatch> first_mismatch(const LambdaSeries& a, const LambdaSeries& b,
                                             int max_tau_degree = -1);
bool agree_on_shared_window(const LambdaSeries& a, const LambdaSeries& b);

}  // namespace mv
