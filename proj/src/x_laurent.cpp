#include "mv/x_laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mv {

namespace {
const GaussianRational kZero{};
}

XLaurent XLaurent::monomial(GaussianRational a, int exponent) {
    XLaurent p;
    if (!a.is_zero()) {
        p.val = exponent;
        p.c.push_back(std::move(a));
    }
    return p;
}

XLaurent XLaurent::sine_block(int k) {
    if (k < 1) throw std::invalid_argument("XLaurent::sine_block: k must be >= 1");
    XLaurent p;
    p.val = -k;
    p.c.assign(static_cast<size_t>(2 * k + 1), GaussianRational());
    p.c.front() = GaussianRational::i();   // -i * (-x^{-k})
    p.c.back() = -GaussianRational::i();   // -i * x^k
    return p;
}

const GaussianRational& XLaurent::coeff(int exponent) const {
    if (exponent < val || exponent > degree()) return kZero;
    return c[static_cast<size_t>(exponent - val)];
}

void XLaurent::normalize() {
    size_t lead = 0;
    while (lead < c.size() && c[lead].is_zero()) ++lead;
    if (lead > 0) {
        c.erase(c.begin(), c.begin() + static_cast<long>(lead));
        val += static_cast<int>(lead);
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) val = 0;
}

std::string XLaurent::str() const {
    std::string s;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c[k].str() + ")*x^" + std::to_string(val + static_cast<int>(k));
    }
    return s.empty() ? "0" : s;
}

XLaurent& XLaurent::operator+=(const XLaurent& o) {
    if (o.c.empty()) return *this;
    if (c.empty()) {
        *this = o;
        return *this;
    }
    int lo = std::min(val, o.val);
    int hi = std::max(degree(), o.degree());
    std::vector<GaussianRational> sum(static_cast<size_t>(hi - lo + 1));
    for (size_t k = 0; k < c.size(); ++k) sum[static_cast<size_t>(val + static_cast<int>(k) - lo)] += c[k];
    for (size_t k = 0; k < o.c.size(); ++k) sum[static_cast<size_t>(o.val + static_cast<int>(k) - lo)] += o.c[k];
    val = lo;
    c = std::move(sum);
    normalize();
    return *this;
}

XLaurent& XLaurent::operator-=(const XLaurent& o) { return *this += -o; }

XLaurent XLaurent::operator-() const {
    XLaurent r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

XLaurent operator+(XLaurent a, const XLaurent& b) { return a += b; }
XLaurent operator-(XLaurent a, const XLaurent& b) { return a -= b; }

XLaurent operator*(const XLaurent& a, const XLaurent& b) {
    if (a.c.empty() || b.c.empty()) return XLaurent();
    XLaurent p;
    p.val = a.val + b.val;
    p.c.assign(a.c.size() + b.c.size() - 1, GaussianRational());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
    }
    p.normalize();
    return p;
}

XLaurent operator*(const XLaurent& a, const GaussianRational& s) {
    if (s.is_zero()) return XLaurent();
    XLaurent r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

bool operator==(const XLaurent& a, const XLaurent& b) {
    if (a.val != b.val || a.c.size() != b.c.size()) return false;
    for (size_t k = 0; k < a.c.size(); ++k)
        if (a.c[k] != b.c[k]) return false;
    return true;
}

XLaurentRational::XLaurentRational() : num_(XLaurent::one()), den_(XLaurent::one()) {}

XLaurentRational::XLaurentRational(XLaurent num, XLaurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("XLaurentRational: zero denominator");
    normalize();
}

void XLaurentRational::normalize() {
    if (num_.is_zero()) {
        den_ = XLaurent::one();
        return;
    }
    // shift the common power of x so the denominator starts at x^0
    num_.val -= den_.val;
    den_.val = 0;
    GaussianRational lead = den_.c.front().inverse();
    num_ = num_ * lead;
    den_ = den_ * lead;
}

XLaurentRational XLaurentRational::reciprocal() const {
    if (num_.is_zero()) throw std::invalid_argument("XLaurentRational::reciprocal of zero");
    return {den_, num_};
}

XLaurentRational XLaurentRational::operator*(const XLaurentRational& o) const {
    return {num_ * o.num_, den_ * o.den_};
}

bool XLaurentRational::operator==(const XLaurentRational& o) const { return num_ * o.den_ == o.num_ * den_; }

LambdaSeries xlaurent_to_series(const XLaurent& p, int order) {
    // x^k = e^{i k lambda / 2}: coefficient of lambda^n is sum_k c_k (i k/2)^n / n!
    LambdaSeries r = LambdaSeries::zero_to(order);
    if (p.is_zero() || order <= 0) return r;
    std::vector<TauPoly> coeffs(static_cast<size_t>(order));
    std::vector<GaussianRational> node(p.c.size());   // running (i k / 2)^n
    for (size_t k = 0; k < p.c.size(); ++k) node[k] = GaussianRational(1);
    Rat nfact(1);
    for (int n = 0; n < order; ++n) {
        if (n > 0) nfact *= Rat(n);
        GaussianRational acc;
        for (size_t k = 0; k < p.c.size(); ++k) {
            if (p.c[k].is_zero()) continue;
            acc += p.c[k] * node[k];
        }
        acc *= GaussianRational(Rat(1) / nfact);
        if (!acc.is_zero()) coeffs[static_cast<size_t>(n)] = TauPoly(acc);
        for (size_t k = 0; k < p.c.size(); ++k) {
            long e = p.val + static_cast<long>(k);
            node[k] *= GaussianRational(Rat(0), make_rat(e, 2));  // * (i e / 2)
        }
    }
    for (int n = 0; n < order; ++n)
        if (!coeffs[static_cast<size_t>(n)].is_zero()) r += LambdaSeries::monomial(coeffs[static_cast<size_t>(n)], n);
    return r.truncated(order);
}

LambdaSeries XLaurentRational::to_lambda_series(int order) const {
    if (num_.is_zero()) return LambdaSeries();
    // locate the lambda-valuation of the denominator expansion; it is below
    // the number of nonzero terms (Vandermonde moments cannot all vanish)
    int probe = static_cast<int>(den_.c.size()) + 1;
    LambdaSeries dp = xlaurent_to_series(den_, probe);
    if (dp.support_empty())
        throw std::invalid_argument("XLaurentRational: denominator expands to zero on probe window");
    int w = dp.valuation();
    LambdaSeries ds = xlaurent_to_series(den_, order + 2 * w);
    LambdaSeries ns = xlaurent_to_series(num_, order + w);
    LambdaSeries res = ns * series_inverse(ds);
    return res.truncated(order);
}

std::vector<GaussianRational> XLaurentRational::power_series(int order) const {
    if (num_.val < 0)
        throw std::invalid_argument("XLaurentRational::power_series: pole at x = 0");
    std::vector<GaussianRational> out(static_cast<size_t>(std::max(order, 0)));
    if (num_.is_zero() || order <= 0) return out;
    // den_ has constant term 1 after normalization
    for (int n = 0; n < order; ++n) {
        GaussianRational acc = num_.coeff(n);
        for (int k = 1; k <= n; ++k) {
            const GaussianRational& dk = den_.coeff(k);
            if (dk.is_zero()) continue;
            acc -= dk * out[static_cast<size_t>(n - k)];
        }
        out[static_cast<size_t>(n)] = acc;
    }
    return out;
}

}  // namespace mv
