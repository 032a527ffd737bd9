#include "mv/tau_poly.hpp"

#include <stdexcept>
#include <utility>

#include "mv/errors.hpp"

namespace mv {

namespace {
const GaussianRational kZero{};
}

TauPoly::TauPoly(GaussianRational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

TauPoly::TauPoly(long c) : TauPoly(GaussianRational(c)) {}

TauPoly::TauPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { normalize(); }

TauPoly TauPoly::variable() { return TauPoly(std::vector<GaussianRational>{GaussianRational(0), GaussianRational(1)}); }

void TauPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool TauPoly::is_real() const {
    for (const auto& c : c_)
        if (!c.is_real()) return false;
    return true;
}

const GaussianRational& TauPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

TauPoly TauPoly::derivative() const {
    if (c_.size() <= 1) return TauPoly();
    std::vector<GaussianRational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
    return TauPoly(std::move(d));
}

TauPoly TauPoly::truncated(int max_degree) const {
    if (max_degree < 0) return TauPoly();
    if (degree() <= max_degree) return *this;
    std::vector<GaussianRational> d(c_.begin(), c_.begin() + max_degree + 1);
    return TauPoly(std::move(d));
}

TauPoly TauPoly::pow(unsigned k) const {
    TauPoly r(1);
    for (unsigned j = 0; j < k; ++j) r *= *this;
    return r;
}

std::string TauPoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[k].str() + ")";
        if (k == 1) s += "*t";
        if (k > 1) s += "*t^" + std::to_string(k);
    }
    return s;
}

TauPoly& TauPoly::operator+=(const TauPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

TauPoly& TauPoly::operator-=(const TauPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
}

TauPoly& TauPoly::operator*=(const TauPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<GaussianRational> p(c_.size() + o.c_.size() - 1);
    for (size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero()) continue;
        for (size_t b = 0; b < o.c_.size(); ++b) p[a + b] += c_[a] * o.c_[b];
    }
    c_ = std::move(p);
    normalize();
    return *this;
}

TauPoly TauPoly::operator-() const {
    TauPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TauPoly operator+(TauPoly a, const TauPoly& b) { return a += b; }
TauPoly operator-(TauPoly a, const TauPoly& b) { return a -= b; }
TauPoly operator*(const TauPoly& a, const TauPoly& b) {
    TauPoly r = a;
    return r *= b;
}
TauPoly operator*(const TauPoly& a, const GaussianRational& s) {
    if (s.is_zero()) return TauPoly();
    std::vector<GaussianRational> c = a.coeffs();
    for (auto& x : c) x *= s;
    return TauPoly(std::move(c));
}

bool operator==(const TauPoly& a, const TauPoly& b) {
    if (a.degree() != b.degree()) return false;
    for (int k = 0; k <= a.degree(); ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

TauPoly tau_divide_exact(const TauPoly& a, const TauPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("tau_divide_exact: division by zero polynomial");
    if (a.is_zero()) return TauPoly();
    std::vector<GaussianRational> rem = a.coeffs();
    int db = b.degree();
    const GaussianRational lead_inv = b.coeff(db).inverse();
    int dq = a.degree() - db;
    if (dq < 0) throw IdentityViolation("tau_divide_exact: nonzero remainder (degree of dividend below divisor)");
    std::vector<GaussianRational> q(static_cast<size_t>(dq) + 1);
    for (int k = dq; k >= 0; --k) {
        GaussianRational f = rem[static_cast<size_t>(k + db)] * lead_inv;
        q[static_cast<size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= f * b.coeff(j);
    }
    for (const auto& r : rem)
        if (!r.is_zero())
            throw IdentityViolation("tau_divide_exact: nonzero remainder");
    return TauPoly(std::move(q));
}

}  // namespace mv
