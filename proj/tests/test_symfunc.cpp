#include <random>

#include "doctest.h"
#include "mv/characters.hpp"
#include "mv/power_sum.hpp"
#include "mv/schur.hpp"

using namespace mv;

TEST_CASE("power sum ring basics") {
    auto p = [](std::initializer_list<int> parts) {
        return PowerSumElement<Rat>::monomial(Partition(parts), Rat(1));
    };
    // p_1 * p_2 = p_(2,1)
    CHECK((p({1}) * p({2})).coefficient(Partition({2, 1})) == 1);
    // d/dp_1 (p_1^2 p_2) = 2 p_1 p_2
    PowerSumElement<Rat> e = p({2, 1, 1});
    PowerSumElement<Rat> d1 = e.diff(1);
    CHECK(d1.coefficient(Partition({2, 1})) == 2);
    CHECK(d1.terms().size() == 1);
    // d/dp_3 (p_1 p_2) = 0
    CHECK(p({2, 1}).diff(3).empty());
}

TEST_CASE("graded exp and log") {
    Rat c = make_rat(3, 7);
    PowerSumElement<Rat> a = PowerSumElement<Rat>::monomial(Partition({1}), c);
    PowerSumElement<Rat> e = graded_exp(a, 2);
    CHECK(e.coefficient(Partition()) == 1);
    CHECK(e.coefficient(Partition({1})) == c);
    CHECK(e.coefficient(Partition({1, 1})) == c * c / 2);

    // log(exp(a)) = a for support on degrees 1..3
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-3, 3);
    PowerSumElement<Rat> rand_a;
    for (int d = 1; d <= 3; ++d)
        for (const Partition& mu : enumerate_partitions(d)) rand_a.add_term(mu, make_rat(num(rng), 2));
    PowerSumElement<Rat> back = graded_log(graded_exp(rand_a, 3), 3);
    CHECK((back - rand_a).empty());

    // degree-2 part of exp(a) = a_2 + a_1^2/2
    PowerSumElement<Rat> deg2 = graded_exp(rand_a, 2).homogeneous(2);
    PowerSumElement<Rat> expect =
        rand_a.homogeneous(2) + mul_truncated(rand_a.homogeneous(1), rand_a.homogeneous(1), 2).scaled_rat(make_rat(1, 2));
    CHECK((deg2 - expect).empty());

    CHECK_THROWS_AS(graded_exp(PowerSumElement<Rat>::one(), 3), std::invalid_argument);
    CHECK_THROWS_AS(graded_log(rand_a, 3), std::invalid_argument);
}

TEST_CASE("schur expansions by hand") {
    PowerSumElement<Rat> s1 = schur_in_power_sums(Partition({1}));
    CHECK(s1.coefficient(Partition({1})) == 1);
    CHECK(s1.terms().size() == 1);
    PowerSumElement<Rat> s2 = schur_in_power_sums(Partition({2}));
    CHECK(s2.coefficient(Partition({1, 1})) == make_rat(1, 2));
    CHECK(s2.coefficient(Partition({2})) == make_rat(1, 2));
    PowerSumElement<Rat> s11 = schur_in_power_sums(Partition({1, 1}));
    CHECK(s11.coefficient(Partition({1, 1})) == make_rat(1, 2));
    CHECK(s11.coefficient(Partition({2})) == make_rat(-1, 2));
}

TEST_CASE("tableau oracle by hand") {
    MultiPoly s2 = schur_tableaux_polynomial(Partition({2}), 2);
    MultiPoly expect2 = MultiPoly::zero(2);
    expect2.add_term({2, 0}, Rat(1));
    expect2.add_term({1, 1}, Rat(1));
    expect2.add_term({0, 2}, Rat(1));
    CHECK(s2 == expect2);
    MultiPoly s11 = schur_tableaux_polynomial(Partition({1, 1}), 2);
    MultiPoly expect11 = MultiPoly::zero(2);
    expect11.add_term({1, 1}, Rat(1));
    CHECK(s11 == expect11);
    MultiPoly s1 = schur_tableaux_polynomial(Partition({1}), 1);
    MultiPoly expect1 = MultiPoly::zero(1);
    expect1.add_term({1}, Rat(1));
    CHECK(s1 == expect1);
}

TEST_CASE("schur coefficients are chi/z exactly") {
    for (int d = 1; d <= 5; ++d) {
        const CharacterTable& t = cached_character_table(d);
        for (const Partition& nu : enumerate_partitions(d)) {
            PowerSumElement<Rat> s = schur_in_power_sums(nu);
            for (const Partition& eta : enumerate_partitions(d)) {
                Rat expect(t.value(nu, eta), partition_stats(eta).z);
                expect.canonicalize();
                CHECK(s.coefficient(eta) == expect);
            }
        }
    }
}

TEST_CASE("character expansion matches tableau oracle") {
    for (int d = 1; d <= 6; ++d) {
        for (const Partition& nu : enumerate_partitions(d)) {
            int nvars = d;  // >= l(nu), strong enough to separate
            MultiPoly via_powersums = substitute_power_sums(schur_in_power_sums(nu), nvars);
            MultiPoly via_tableaux = schur_tableaux_polynomial(nu, nvars);
            CHECK(via_powersums == via_tableaux);
        }
    }
}

TEST_CASE("principal specialization closed forms") {
    // nu = (1): 1/(1-q)
    XLaurent one_minus_q = XLaurent::one() - XLaurent::monomial(GaussianRational(1), 1);
    CHECK(principal_specialization(Partition({1})) == XLaurentRational(XLaurent::one(), one_minus_q));
    // nu = (2): 1/((1-q)(1-q^2)); nu = (1,1): q/((1-q)(1-q^2))
    XLaurent one_minus_q2 = XLaurent::one() - XLaurent::monomial(GaussianRational(1), 2);
    CHECK(principal_specialization(Partition({2})) ==
          XLaurentRational(XLaurent::one(), one_minus_q * one_minus_q2));
    CHECK(principal_specialization(Partition({1, 1})) ==
          XLaurentRational(XLaurent::monomial(GaussianRational(1), 1), one_minus_q * one_minus_q2));
    // q-expansion of 1/(1-q) is all ones
    std::vector<Rat> geo = q_expand(principal_specialization(Partition({1})), 6);
    for (const Rat& c : geo) CHECK(c == 1);
}

TEST_CASE("cauchy identity") {
    CHECK(cauchy_check(0, 2));
    CHECK(cauchy_check(1, 2));
    CHECK(cauchy_check(2, 2));
    CHECK(cauchy_check(3, 2));
}
