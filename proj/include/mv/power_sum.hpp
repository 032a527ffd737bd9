#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <stdexcept>

#include "mv/lambda_series.hpp"
#include "mv/partition.hpp"
#include "mv/rational.hpp"
#include "mv/tau_poly.hpp"

namespace mv {

// Coefficient-ring glue so the same power-sum code serves plain rationals,
// Gaussian rationals, tau-polynomials and lambda-series.
template <typename C>
struct RingTraits;

template <>
struct RingTraits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return a == 0; }
    static Rat scale_rat(const Rat& a, const Rat& s) { return a * s; }
};

template <>
struct RingTraits<GaussianRational> {
    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return GaussianRational(1); }
    static bool is_zero(const GaussianRational& a) { return a.is_zero(); }
    static GaussianRational scale_rat(const GaussianRational& a, const Rat& s) { return a * GaussianRational(s); }
};

template <>
struct RingTraits<TauPoly> {
    static TauPoly zero() { return {}; }
    static TauPoly one() { return TauPoly(1); }
    static bool is_zero(const TauPoly& a) { return a.is_zero(); }
    static TauPoly scale_rat(const TauPoly& a, const Rat& s) { return a * GaussianRational(s); }
};

template <>
struct RingTraits<LambdaSeries> {
    static LambdaSeries zero() { return {}; }
    static LambdaSeries one() { return LambdaSeries::constant(TauPoly(1)); }
    // only the exact zero is prunable; a zero-on-window series still carries
    // window information
    static bool is_zero(const LambdaSeries& a) { return a.is_zero(); }
    static LambdaSeries scale_rat(const LambdaSeries& a, const Rat& s) { return a.scaled(GaussianRational(s)); }
};

// Finitely supported element of the power-sum polynomial ring: a map from
// monomials p_mu = p_{mu_1}...p_{mu_l} to coefficients.  The weighted degree
// of p_mu is |mu|.
template <typename C>
class PowerSumElement {
public:
    using Map = std::map<Partition, C, PartitionLess>;

    PowerSumElement() = default;

    static PowerSumElement zero() { return {}; }
    static PowerSumElement one() { return monomial(Partition(), RingTraits<C>::one()); }
    static PowerSumElement monomial(Partition mu, C coeff) {
        PowerSumElement e;
        if (!RingTraits<C>::is_zero(coeff)) e.terms_.emplace(std::move(mu), std::move(coeff));
        return e;
    }

    bool empty() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }

    C coefficient(const Partition& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? RingTraits<C>::zero() : it->second;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [mu, c] : terms_) d = std::max(d, mu.size());
        return d;
    }

    PowerSumElement& operator+=(const PowerSumElement& o) {
        for (const auto& [mu, c] : o.terms_) add_term(mu, c);
        return *this;
    }

    PowerSumElement& operator-=(const PowerSumElement& o) {
        for (const auto& [mu, c] : o.terms_) add_term(mu, negate(c));
        return *this;
    }

    PowerSumElement operator-() const {
        PowerSumElement r;
        for (const auto& [mu, c] : terms_) r.terms_.emplace(mu, negate(c));
        return r;
    }

    PowerSumElement scaled_rat(const Rat& s) const {
        PowerSumElement r;
        if (s == 0) return r;
        for (const auto& [mu, c] : terms_) {
            C x = RingTraits<C>::scale_rat(c, s);
            if (!RingTraits<C>::is_zero(x)) r.terms_.emplace(mu, std::move(x));
        }
        return r;
    }

    template <typename F>
    PowerSumElement mapped(F&& f) const {
        PowerSumElement r;
        for (const auto& [mu, c] : terms_) {
            C x = f(c);
            if (!RingTraits<C>::is_zero(x)) r.terms_.emplace(mu, std::move(x));
        }
        return r;
    }

    // d/dp_i: lowers the multiplicity of part i with the integer factor m_i.
    PowerSumElement diff(int i) const {
        if (i < 1) throw std::invalid_argument("PowerSumElement::diff: index must be >= 1");
        PowerSumElement r;
        for (const auto& [mu, c] : terms_) {
            int m = mu.multiplicity(i);
            if (m == 0) continue;
            r.add_term(mu.removing(i), RingTraits<C>::scale_rat(c, Rat(m)));
        }
        return r;
    }

    PowerSumElement multiplied_by_monomial(const Partition& nu, const Rat& s = Rat(1)) const {
        PowerSumElement r;
        for (const auto& [mu, c] : terms_) {
            Partition merged = merge(mu, nu);
            C x = RingTraits<C>::scale_rat(c, s);
            if (!RingTraits<C>::is_zero(x)) r.terms_.emplace(std::move(merged), std::move(x));
        }
        return r;
    }

    PowerSumElement truncated_degree(int max_deg) const {
        PowerSumElement r;
        for (const auto& [mu, c] : terms_)
            if (mu.size() <= max_deg) r.terms_.emplace(mu, c);
        return r;
    }

    PowerSumElement homogeneous(int deg) const {
        PowerSumElement r;
        for (const auto& [mu, c] : terms_)
            if (mu.size() == deg) r.terms_.emplace(mu, c);
        return r;
    }

    static Partition merge(const Partition& a, const Partition& b) {
        std::vector<int> parts;
        parts.reserve(a.parts().size() + b.parts().size());
        std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
                   std::back_inserter(parts), std::greater<int>());
        return Partition(std::move(parts));
    }

    friend PowerSumElement operator+(PowerSumElement a, const PowerSumElement& b) { return a += b; }
    friend PowerSumElement operator-(PowerSumElement a, const PowerSumElement& b) { return a -= b; }

    friend PowerSumElement operator*(const PowerSumElement& a, const PowerSumElement& b) {
        return mul_truncated(a, b, -1);
    }

    // Product keeping only monomials of weighted degree <= max_deg (no cap
    // when max_deg < 0).
    friend PowerSumElement mul_truncated(const PowerSumElement& a, const PowerSumElement& b, int max_deg) {
        PowerSumElement r;
        for (const auto& [mua, ca] : a.terms_) {
            for (const auto& [mub, cb] : b.terms_) {
                if (max_deg >= 0 && mua.size() + mub.size() > max_deg) continue;
                r.add_term(merge(mua, mub), ca * cb);
            }
        }
        return r;
    }

    void add_term(const Partition& mu, const C& c) {
        if (RingTraits<C>::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(mu, c);
        if (!inserted) {
            it->second = it->second + c;
            if (RingTraits<C>::is_zero(it->second)) terms_.erase(it);
        }
    }

private:
    static C negate(const C& c) { return RingTraits<C>::scale_rat(c, Rat(-1)); }

    Map terms_;
};

// exp in the weighted p-grading: the input must have no constant term; at
// degree d at most d factors contribute, so the finite exponential formula is
// exact up to max_deg.
template <typename C>
PowerSumElement<C> graded_exp(const PowerSumElement<C>& a, int max_deg) {
    if (!RingTraits<C>::is_zero(a.coefficient(Partition())))
        throw std::invalid_argument("graded_exp: nonzero constant term");
    PowerSumElement<C> result = PowerSumElement<C>::one();
    PowerSumElement<C> power = PowerSumElement<C>::one();
    for (int k = 1; k <= max_deg; ++k) {
        power = mul_truncated(power, a, max_deg).scaled_rat(make_rat(1, k));
        if (power.empty()) break;
        result += power;
    }
    return result;
}

// log in the weighted p-grading: constant term must be exactly one.
template <typename C>
PowerSumElement<C> graded_log(const PowerSumElement<C>& b, int max_deg) {
    C c0 = b.coefficient(Partition());
    C delta = c0 + RingTraits<C>::scale_rat(RingTraits<C>::one(), Rat(-1));
    if (!RingTraits<C>::is_zero(delta))
        throw std::invalid_argument("graded_log: constant term must be exactly 1");
    PowerSumElement<C> u = b;
    u -= PowerSumElement<C>::monomial(Partition(), c0);
    PowerSumElement<C> result = u;
    PowerSumElement<C> acc = u;
    for (int k = 2; k <= max_deg; ++k) {
        acc = mul_truncated(acc, u, max_deg);
        if (acc.empty()) break;
        result += acc.scaled_rat(make_rat((k % 2) ? 1 : -1, k));
    }
    return result;
}

}  // namespace mv
