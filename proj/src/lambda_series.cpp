#include "mv/lambda_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "mv/errors.hpp"

namespace mv {

namespace {
const TauPoly kZeroPoly{};
}

int LambdaSeries::sat_add(int a, int b) {
    if (a == kUnbounded || b == kUnbounded) return kUnbounded;
    long s = static_cast<long>(a) + b;
    if (s >= kUnbounded) return kUnbounded;
    return static_cast<int>(s);
}

LambdaSeries LambdaSeries::zero_to(int order) {
    LambdaSeries s;
    s.order_ = order;
    s.valuation_ = order;
    return s;
}

LambdaSeries LambdaSeries::constant(TauPoly c) { return monomial(std::move(c), 0); }

LambdaSeries LambdaSeries::monomial(TauPoly c, int exponent) {
    LambdaSeries s;
    if (!c.is_zero()) {
        s.valuation_ = exponent;
        s.c_.push_back(std::move(c));
    }
    return s;
}

void LambdaSeries::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        valuation_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) valuation_ = (order_ == kUnbounded) ? 0 : order_;
}

const TauPoly& LambdaSeries::coeff(int n) const {
    if (!known(n)) throw std::invalid_argument("LambdaSeries::coeff: exponent beyond known window");
    if (c_.empty() || n < valuation_ || n >= support_end()) return kZeroPoly;
    return c_[static_cast<size_t>(n - valuation_)];
}

int LambdaSeries::tau_degree() const {
    int d = TauPoly::kZeroDegree;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

LambdaSeries LambdaSeries::truncated(int order) const {
    if (order >= order_) return *this;
    LambdaSeries r;
    r.order_ = order;
    r.valuation_ = valuation_;
    for (int n = valuation_; n < std::min(order, support_end()); ++n)
        r.c_.push_back(c_[static_cast<size_t>(n - valuation_)]);
    r.normalize();
    return r;
}

LambdaSeries LambdaSeries::shifted(int exponents) const {
    LambdaSeries r = *this;
    r.valuation_ += exponents;  // harmless for empty support when order_ is finite below
    r.order_ = sat_add(order_, exponents);
    if (r.c_.empty()) r.valuation_ = (r.order_ == kUnbounded) ? 0 : r.order_;
    return r;
}

LambdaSeries LambdaSeries::scaled(const GaussianRational& s) const {
    if (s.is_zero()) return LambdaSeries();  // exactly zero everywhere
    LambdaSeries r = *this;
    for (auto& p : r.c_) p = p * s;
    return r;
}

LambdaSeries LambdaSeries::scaled(const TauPoly& s) const {
    if (s.is_zero()) return LambdaSeries();
    LambdaSeries r = *this;
    for (auto& p : r.c_) p = p * s;
    r.normalize();
    return r;
}

LambdaSeries LambdaSeries::tau_derivative() const {
    LambdaSeries r = *this;
    for (auto& p : r.c_) p = p.derivative();
    r.normalize();
    return r;
}

LambdaSeries LambdaSeries::at_tau_zero() const {
    LambdaSeries r = *this;
    for (auto& p : r.c_) p = TauPoly(p.at_zero());
    r.normalize();
    return r;
}

LambdaSeries LambdaSeries::tau_truncated(int max_tau_degree) const {
    LambdaSeries r = *this;
    for (auto& p : r.c_) p = p.truncated(max_tau_degree);
    r.normalize();
    return r;
}

LambdaSeries& LambdaSeries::operator+=(const LambdaSeries& o) {
    int order = sat_min(order_, o.order_);
    int lo, hi;
    if (c_.empty() && o.c_.empty()) {
        lo = hi = 0;
    } else if (c_.empty()) {
        lo = o.valuation_;
        hi = o.support_end();
    } else if (o.c_.empty()) {
        lo = valuation_;
        hi = support_end();
    } else {
        lo = std::min(valuation_, o.valuation_);
        hi = std::max(support_end(), o.support_end());
    }
    if (order != kUnbounded) hi = std::min(hi, order);
    std::vector<TauPoly> sum(static_cast<size_t>(std::max(0, hi - lo)));
    auto put = [&](const LambdaSeries& s) {
        for (int n = s.valuation_; n < std::min(s.support_end(), hi); ++n) {
            if (n < lo) continue;
            sum[static_cast<size_t>(n - lo)] += s.c_[static_cast<size_t>(n - s.valuation_)];
        }
    };
    put(*this);
    put(o);
    valuation_ = lo;
    order_ = order;
    c_ = std::move(sum);
    normalize();
    return *this;
}

LambdaSeries& LambdaSeries::operator-=(const LambdaSeries& o) { return *this += -o; }

LambdaSeries LambdaSeries::operator-() const {
    LambdaSeries r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

LambdaSeries operator+(LambdaSeries a, const LambdaSeries& b) { return a += b; }
LambdaSeries operator-(LambdaSeries a, const LambdaSeries& b) { return a -= b; }

LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b) {
    if (a.is_zero() || b.is_zero()) return LambdaSeries();
    // Effective valuation of an empty-support window is its order: the first
    // possibly nonzero exponent.
    int va = a.c_.empty() ? a.order_ : a.valuation_;
    int vb = b.c_.empty() ? b.order_ : b.valuation_;
    int order = LambdaSeries::sat_min(LambdaSeries::sat_add(a.order_, vb), LambdaSeries::sat_add(b.order_, va));
    LambdaSeries r;
    r.order_ = order;
    if (a.c_.empty() || b.c_.empty()) {
        r.valuation_ = (order == LambdaSeries::kUnbounded) ? 0 : order;
        return r;
    }
    int lo = a.valuation_ + b.valuation_;
    int hi = a.support_end() + b.support_end() - 1;
    if (order != LambdaSeries::kUnbounded) hi = std::min(hi, order);
    if (hi <= lo) return LambdaSeries::zero_to(order);
    r.valuation_ = lo;
    r.c_.assign(static_cast<size_t>(hi - lo), TauPoly());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            int n = a.valuation_ + static_cast<int>(i) + b.valuation_ + static_cast<int>(j);
            if (n >= hi) break;
            r.c_[static_cast<size_t>(n - lo)] += a.c_[i] * b.c_[j];
        }
    }
    r.normalize();
    return r;
}

LambdaSeries series_inverse(const LambdaSeries& a, std::optional<int> order) {
    if (a.support_empty())
        throw std::invalid_argument("series_inverse: zero leading coefficient");
    const TauPoly& lead = a.c_.front();
    if (!lead.is_constant())
        throw std::invalid_argument("series_inverse: leading coefficient must be a constant scalar");
    int v = a.valuation_;
    int res_order;
    if (a.order_ != LambdaSeries::kUnbounded) {
        res_order = a.order_ - 2 * v;
    } else if (a.c_.size() == 1) {
        // exact monomial: exact inverse
        LambdaSeries r;
        r.valuation_ = -v;
        r.c_.push_back(TauPoly(lead.at_zero().inverse()));
        return r;
    } else if (order) {
        res_order = *order;
    } else {
        throw std::invalid_argument("series_inverse: order required for exact multi-term series");
    }
    int count = res_order + v;  // exponents -v .. res_order-1
    if (count <= 0) return LambdaSeries::zero_to(res_order);
    GaussianRational lead_inv = lead.at_zero().inverse();
    std::vector<TauPoly> b(static_cast<size_t>(count));
    b[0] = TauPoly(lead_inv);
    for (int m = 1; m < count; ++m) {
        TauPoly acc;
        for (int k = 1; k <= m; ++k) {
            int exp = v + k;  // a-coefficient exponent
            if (exp >= a.support_end()) break;
            const TauPoly& ak = a.c_[static_cast<size_t>(exp - a.valuation_)];
            if (ak.is_zero()) continue;
            acc += ak * b[static_cast<size_t>(m - k)];
        }
        b[static_cast<size_t>(m)] = -(acc * lead_inv);
    }
    LambdaSeries r;
    r.valuation_ = -v;
    r.order_ = res_order;
    r.c_ = std::move(b);
    r.normalize();
    return r;
}

LambdaSeries series_exp(const LambdaSeries& s, std::optional<int> order) {
    if (s.is_zero()) return LambdaSeries::constant(TauPoly(1));
    if (s.valuation() < 1) throw std::invalid_argument("series_exp: valuation must be >= 1");
    int res_order;
    if (s.order_ != LambdaSeries::kUnbounded)
        res_order = s.order_;
    else if (order)
        res_order = *order;
    else
        throw std::invalid_argument("series_exp: order required for exact series");
    if (res_order <= 0) return LambdaSeries::zero_to(res_order);
    std::vector<TauPoly> e(static_cast<size_t>(res_order));
    e[0] = TauPoly(1);
    for (int n = 1; n < res_order; ++n) {
        TauPoly acc;
        for (int k = 1; k <= n; ++k) {
            if (!s.known(k)) break;  // cannot happen: n < res_order <= s.order_
            const TauPoly& sk = s.coeff(k);
            if (sk.is_zero()) continue;
            acc += sk * e[static_cast<size_t>(n - k)] * GaussianRational(k);
        }
        e[static_cast<size_t>(n)] = acc * GaussianRational(make_rat(1, n));
    }
    LambdaSeries r;
    r.valuation_ = 0;
    r.order_ = res_order;
    r.c_ = std::move(e);
    r.normalize();
    return r;
}

LambdaSeries series_log(const LambdaSeries& t, std::optional<int> order) {
    if (t.support_empty() || t.valuation() != 0 || t.c_.front() != TauPoly(1))
        throw std::invalid_argument("series_log: constant term must be exactly 1");
    int res_order;
    if (t.order_ != LambdaSeries::kUnbounded)
        res_order = t.order_;
    else if (t.c_.size() == 1)
        return LambdaSeries();  // log(1) = 0 exactly
    else if (order)
        res_order = *order;
    else
        throw std::invalid_argument("series_log: order required for exact series");
    if (res_order <= 0) return LambdaSeries::zero_to(res_order);
    std::vector<TauPoly> l(static_cast<size_t>(res_order));
    for (int n = 1; n < res_order; ++n) {
        TauPoly acc;
        for (int k = 1; k < n; ++k) {
            if (l[static_cast<size_t>(k)].is_zero()) continue;
            int exp = n - k;
            if (exp >= t.support_end() || exp < t.valuation_) continue;
            acc += l[static_cast<size_t>(k)] * t.c_[static_cast<size_t>(exp - t.valuation_)] * GaussianRational(k);
        }
        TauPoly tn = (n < t.support_end()) ? t.coeff(n) : TauPoly();
        l[static_cast<size_t>(n)] = tn - acc * GaussianRational(make_rat(1, n));
    }
    LambdaSeries r;
    r.valuation_ = 0;
    r.order_ = res_order;
    r.c_ = std::move(l);
    r.normalize();
    return r;
}

LambdaSeries exact_divide(const LambdaSeries& a, const TauPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
    LambdaSeries r = a;
    for (auto& p : r.c_)
        if (!p.is_zero()) p = tau_divide_exact(p, b);
    r.normalize();
    return r;
}

LambdaSeries sin_block(int k, int order) {
    if (k < 1) throw std::invalid_argument("sin_block: k must be >= 1");
    LambdaSeries r = LambdaSeries::zero_to(order);
    Rat four(4);
    Rat kk(k);
    Rat k2 = kk * kk;
    // 2 sin(k x / 2) = sum_m (-1)^m k^(2m+1) x^(2m+1) / (4^m (2m+1)!)
    Rat term = kk;  // m = 0 numerator k / (4^0 * 1!)
    long m = 0;
    std::vector<std::pair<int, Rat>> coeffs;
    while (2 * m + 1 < order) {
        coeffs.emplace_back(static_cast<int>(2 * m + 1), (m % 2) ? Rat(-term) : term);
        term = term * k2 / (four * Rat((2 * m + 2)) * Rat((2 * m + 3)));
        ++m;
    }
    for (auto& [e, c] : coeffs) r += LambdaSeries::monomial(TauPoly(GaussianRational(c)), e);
    return r.truncated(order);
}

LambdaSeries exp_tau_lambda(const TauPoly& c, int order) {
    LambdaSeries r = LambdaSeries::zero_to(order);
    TauPoly cur(1);
    for (int n = 0; n < order; ++n) {
        if (n > 0) {
            cur = cur * c;
            cur = cur * GaussianRational(make_rat(1, n));
        }
        if (cur.is_zero()) break;
        r += LambdaSeries::monomial(cur, n);
    }
    return r.truncated(order);
}

bool LambdaSeries::identical(const LambdaSeries& o) const {
    if (order_ != o.order_ || valuation_ != o.valuation_ || c_.size() != o.c_.size()) return false;
    for (size_t k = 0; k < c_.size(); ++k)
        if (!(c_[k] == o.c_[k])) return false;
    return true;
}

std::string LambdaSeries::str() const {
    std::string s;
    for (int n = valuation_; n < support_end(); ++n) {
        const TauPoly& p = coeff(n);
        if (p.is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "[" + p.str() + "]*L^" + std::to_string(n);
    }
    if (s.empty()) s = "0";
    if (order_ != kUnbounded) s += " + O(L^" + std::to_string(order_) + ")";
    return s;
}

std::optional<SeriesMismatch> first_mismatch(const LambdaSeries& a, const LambdaSeries& b, int max_tau_degree) {
    int lo = std::min(a.valuation(), b.valuation());
    int hi;
    if (a.order() == LambdaSeries::kUnbounded && b.order() == LambdaSeries::kUnbounded)
        hi = std::max(a.support_end(), b.support_end());
    else
        hi = LambdaSeries::sat_min(a.order(), b.order());
    for (int n = lo; n < hi; ++n) {
        TauPoly pa = a.known(n) ? a.coeff(n) : TauPoly();
        TauPoly pb = b.known(n) ? b.coeff(n) : TauPoly();
        if (max_tau_degree >= 0) {
            pa = pa.truncated(max_tau_degree);
            pb = pb.truncated(max_tau_degree);
        }
        if (pa == pb) continue;
        int td = std::max(pa.degree(), pb.degree());
        for (int t = 0; t <= td; ++t) {
            if (pa.coeff(t) != pb.coeff(t)) return SeriesMismatch{n, t, pa.coeff(t), pb.coeff(t)};
        }
    }
    return std::nullopt;
}

bool agree_on_shared_window(const LambdaSeries& a, const LambdaSeries& b) { return !first_mismatch(a, b); }

}  // namespace mv
