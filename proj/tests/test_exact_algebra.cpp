#include <random>

#include "doctest.h"
#include "mv/errors.hpp"
#include "mv/lambda_series.hpp"
#include "mv/x_laurent.hpp"

using namespace mv;

namespace {

// Independent Taylor oracle: coefficient of lambda^(2m+1) in 2 sin(k*lambda/2)
// computed directly from factorials and powers.
Rat sin_taylor_oracle(int k, int exponent) {
    if (exponent % 2 == 0) return Rat(0);
    int m = (exponent - 1) / 2;
    Rat num = rat_pow(make_rat(k, 2), static_cast<unsigned long>(exponent)) * 2;
    Rat c = num / Rat(factorial(static_cast<unsigned long>(exponent)));
    return (m % 2) ? Rat(-c) : c;
}

// Independent oracle for (2 sin(lambda/2))^2 = 2 - 2 cos(lambda).
Rat two_minus_two_cos_oracle(int exponent) {
    if (exponent == 0 || exponent % 2) return Rat(0);
    Rat c = Rat(2) / Rat(factorial(static_cast<unsigned long>(exponent)));
    return (exponent / 2 % 2) ? c : Rat(-c);
}

TauPoly random_tau_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<GaussianRational> c;
    for (int k = 0; k <= max_deg; ++k)
        c.emplace_back(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));
    return TauPoly(std::move(c));
}

LambdaSeries random_series(std::mt19937& rng, int valuation, int order) {
    LambdaSeries s = LambdaSeries::zero_to(order);
    for (int n = valuation; n < order; ++n) s += LambdaSeries::monomial(random_tau_poly(rng, 2), n);
    return s;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(GaussianRational::i_pow(3) == -i);
    CHECK(GaussianRational::i_pow(-1) == -i);
    CHECK(GaussianRational::i_pow(10) == GaussianRational(-1));
    GaussianRational z(make_rat(2, 3), make_rat(-1, 2));
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK((z / z) == GaussianRational(1));
    CHECK(z.conj().im == -z.im);
}

TEST_CASE("tau poly arithmetic and exact division") {
    TauPoly t = TauPoly::variable();
    TauPoly a = t * t + t;  // tau^2 + tau
    CHECK(tau_divide_exact(a, t) == t + TauPoly(1));
    CHECK_THROWS_AS(tau_divide_exact(t * t + TauPoly(1), t), IdentityViolation);
    TauPoly three_t_minus_2 = t * GaussianRational(3) - TauPoly(2);
    TauPoly prod = t * (t + TauPoly(1)) * three_t_minus_2;
    CHECK(tau_divide_exact(prod, t * (t + TauPoly(1))) == three_t_minus_2);
    CHECK(a.derivative() == t * GaussianRational(2) + TauPoly(1));
    CHECK(TauPoly().degree() == TauPoly::kZeroDegree);
}

TEST_CASE("ring axioms on random instances") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        TauPoly a = random_tau_poly(rng, 3), b = random_tau_poly(rng, 3), c = random_tau_poly(rng, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
    for (int trial = 0; trial < 10; ++trial) {
        LambdaSeries a = random_series(rng, -2, 6), b = random_series(rng, 0, 6), c = random_series(rng, -1, 6);
        LambdaSeries lhs = (a * b) * c, rhs = a * (b * c);
        CHECK(!first_mismatch(lhs, rhs));
        CHECK(!first_mismatch(a * (b + c), a * b + a * c));
    }
}

TEST_CASE("sin_block matches the Taylor oracle") {
    for (int k : {1, 2, 3, 5}) {
        LambdaSeries s = sin_block(k, 12);
        for (int n = s.valuation(); n < 12; ++n) {
            CHECK(s.coeff(n).is_constant());
            CHECK(s.coeff(n).at_zero() == GaussianRational(sin_taylor_oracle(k, n)));
        }
    }
    // frozen low-order values: lambda - lambda^3/24 + lambda^5/1920, and k=2
    LambdaSeries s1 = sin_block(1, 8);
    CHECK(s1.coeff(1).at_zero() == GaussianRational(1));
    CHECK(s1.coeff(3).at_zero() == GaussianRational(make_rat(-1, 24)));
    CHECK(s1.coeff(5).at_zero() == GaussianRational(make_rat(1, 1920)));
    LambdaSeries s2 = sin_block(2, 8);
    CHECK(s2.coeff(1).at_zero() == GaussianRational(2));
    CHECK(s2.coeff(3).at_zero() == GaussianRational(make_rat(-1, 3)));
    CHECK(s2.coeff(5).at_zero() == GaussianRational(make_rat(1, 60)));
    CHECK_THROWS_AS(sin_block(0, 8), std::invalid_argument);
    // oddness
    for (int n = 0; n < 12; n += 2) CHECK(sin_block(3, 12).coeff(n).is_zero());
}

TEST_CASE("series product matches the 2-2cos oracle") {
    LambdaSeries s = sin_block(1, 10);
    LambdaSeries sq = s * s;
    CHECK(sq.valuation() == 2);
    for (int n = sq.valuation(); n < sq.order(); ++n)
        CHECK(sq.coeff(n).at_zero() == GaussianRational(two_minus_two_cos_oracle(n)));
    CHECK(sq.coeff(2).at_zero() == GaussianRational(1));
    CHECK(sq.coeff(4).at_zero() == GaussianRational(make_rat(-1, 12)));
}

TEST_CASE("series inverse") {
    LambdaSeries s = sin_block(1, 12);
    LambdaSeries inv = series_inverse(s);
    CHECK(inv.valuation() == -1);
    CHECK(inv.coeff(-1).at_zero() == GaussianRational(1));
    LambdaSeries prod = s * inv;
    CHECK(prod.valuation() == 0);
    CHECK(prod.coeff(0) == TauPoly(1));
    for (int n = 1; n < prod.order(); ++n) CHECK(prod.coeff(n).is_zero());
    CHECK_THROWS_AS(series_inverse(LambdaSeries::zero_to(4)), std::invalid_argument);
    // non-constant leading coefficient rejected
    LambdaSeries bad = LambdaSeries::monomial(TauPoly::variable(), 0).truncated(4);
    CHECK_THROWS_AS(series_inverse(bad), std::invalid_argument);
}

TEST_CASE("exp_tau_lambda") {
    CHECK(exp_tau_lambda(TauPoly(), 6).coeff(0) == TauPoly(1));
    for (int n = 1; n < 6; ++n) CHECK(exp_tau_lambda(TauPoly(), 6).coeff(n).is_zero());
    // c = i(tau + 1/2), the kappa = 2 case
    TauPoly c(std::vector<GaussianRational>{GaussianRational(Rat(0), make_rat(1, 2)), GaussianRational::i()});
    LambdaSeries e = exp_tau_lambda(c, 6);
    CHECK(e.coeff(0) == TauPoly(1));
    CHECK(e.coeff(1) == c);
    // lambda^2 coefficient is c^2/2 = -(tau+1/2)^2/2
    TauPoly t = TauPoly::variable();
    TauPoly expected2 = (t + TauPoly(GaussianRational(make_rat(1, 2)))) *
                        (t + TauPoly(GaussianRational(make_rat(1, 2)))) * GaussianRational(make_rat(-1, 2));
    CHECK(e.coeff(2) == expected2);
    // exp(c lambda) * exp(-c lambda) = 1
    LambdaSeries em = exp_tau_lambda(-c, 6);
    LambdaSeries prod = e * em;
    CHECK(prod.coeff(0) == TauPoly(1));
    for (int n = 1; n < prod.order(); ++n) CHECK(prod.coeff(n).is_zero());
}

TEST_CASE("series exp and log are mutually inverse") {
    CHECK(series_exp(LambdaSeries()).coeff(0) == TauPoly(1));
    CHECK(series_log(LambdaSeries::constant(TauPoly(1))).is_zero());
    // log(exp(lambda (tau+1))) = lambda (tau+1) on a finite window
    TauPoly t1 = TauPoly::variable() + TauPoly(1);
    LambdaSeries s = LambdaSeries::monomial(t1, 1).truncated(9);
    LambdaSeries e = series_exp(s);
    CHECK(e.coeff(0) == TauPoly(1));
    CHECK(!first_mismatch(series_log(e), s));
    // exp(lambda) = 1 + lambda + lambda^2/2 + ...
    LambdaSeries el = series_exp(LambdaSeries::monomial(TauPoly(1), 1).truncated(7));
    for (int n = 0; n < 7; ++n)
        CHECK(el.coeff(n).at_zero() == GaussianRational(Rat(Int(1), factorial(static_cast<unsigned long>(n)))));
    // round trip in the other direction
    std::mt19937 rng(99);
    LambdaSeries u = random_series(rng, 1, 7);
    CHECK(!first_mismatch(series_log(series_exp(u)), u));
    LambdaSeries one_plus = LambdaSeries::constant(TauPoly(1)).truncated(7) + u;
    CHECK(!first_mismatch(series_exp(series_log(one_plus)), one_plus));
    CHECK_THROWS_AS(series_exp(LambdaSeries::constant(TauPoly(1))), std::invalid_argument);
    CHECK_THROWS_AS(series_log(LambdaSeries::monomial(TauPoly(1), 1)), std::invalid_argument);
}

TEST_CASE("exact divide on series") {
    TauPoly t = TauPoly::variable();
    LambdaSeries s = LambdaSeries::monomial(t * t + t, -1) + LambdaSeries::monomial(t * (t + TauPoly(1)) * t, 2);
    LambdaSeries q = exact_divide(s, t * (t + TauPoly(1)));
    CHECK(q.coeff(-1) == TauPoly(1));
    CHECK(q.coeff(2) == t);
    CHECK_THROWS_AS(exact_divide(LambdaSeries::monomial(t * t + TauPoly(1), 0), t), IdentityViolation);
}

TEST_CASE("x laurent expansion") {
    // -i(x - x^{-1}) expands to 2 sin(lambda/2)
    XLaurent block = XLaurent::sine_block(1);
    LambdaSeries direct = xlaurent_to_series(block, 12);
    CHECK(!first_mismatch(direct, sin_block(1, 12)));
    // reciprocal path equals series-inverse path
    XLaurentRational r(XLaurent::one(), block);
    LambdaSeries via_x = x_to_series(r, 10);
    LambdaSeries via_inv = series_inverse(sin_block(1, 12)).truncated(10);
    CHECK(!first_mismatch(via_x, via_inv));
    CHECK(via_x.valuation() == -1);
    // constant
    XLaurentRational one;
    LambdaSeries c = x_to_series(one, 5);
    CHECK(c.coeff(0) == TauPoly(1));
    for (int n = 1; n < 5; ++n) CHECK(c.coeff(n).is_zero());
    // products of blocks match products of sin series
    XLaurent p = XLaurent::sine_block(2) * XLaurent::sine_block(3);
    CHECK(!first_mismatch(xlaurent_to_series(p, 10), sin_block(2, 12) * sin_block(3, 12)));
}

TEST_CASE("x laurent rational equality via cross multiplication") {
    XLaurent a = XLaurent::sine_block(1), b = XLaurent::sine_block(2);
    XLaurentRational lhs(a, b);
    XLaurentRational rhs(a * a, b * a);
    CHECK(lhs == rhs);
    CHECK(lhs != XLaurentRational(b, a));
    CHECK((lhs * lhs.reciprocal()) == XLaurentRational());
}
