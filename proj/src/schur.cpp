#include "mv/schur.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "mv/characters.hpp"
#include "mv/errors.hpp"

namespace mv {

// ---- MultiPoly -------------------------------------------------------------

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p{nvars, {}};
    p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int j, int power) {
    MultiPoly p{nvars, {}};
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(j)] = power;
    p.add_term(std::move(e), Rat(1));
    return p;
}

MultiPoly MultiPoly::power_sum(int nvars, int k) {
    MultiPoly p{nvars, {}};
    for (int j = 0; j < nvars; ++j) {
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(j)] = k;
        p.add_term(std::move(e), Rat(1));
    }
    return p;
}

void MultiPoly::add_term(std::vector<int> exps, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::string MultiPoly::str() const {
    std::string s;
    for (const auto& [e, c] : terms) {
        if (!s.empty()) s += " + ";
        s += rat_string(c);
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j]) s += "*x" + std::to_string(j + 1) + "^" + std::to_string(e[j]);
    }
    return s.empty() ? "0" : s;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, Rat(-c));
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly p{nvars, {}};
    for (const auto& [ea, ca] : terms) {
        for (const auto& [eb, cb] : o.terms) {
            std::vector<int> e = ea;
            for (size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
            p.add_term(std::move(e), ca * cb);
        }
    }
    return p;
}

MultiPoly MultiPoly::scaled(const Rat& s) const {
    MultiPoly p{nvars, {}};
    if (s == 0) return p;
    for (const auto& [e, c] : terms) p.terms.emplace(e, c * s);
    return p;
}

// ---- Schur layer -----------------------------------------------------------

PowerSumElement<Rat> schur_in_power_sums(const Partition& nu) {
    int d = nu.size();
    PowerSumElement<Rat> s;
    if (d == 0) return PowerSumElement<Rat>::one();
    const CharacterTable& t = cached_character_table(d);
    int row = t.index_of(nu);
    for (size_t m = 0; m < t.labels.size(); ++m) {
        const Partition& eta = t.labels[m];
        Rat c(t.value(row, static_cast<int>(m)), partition_stats(eta).z);
        c.canonicalize();
        if (c != 0) s.add_term(eta, c);
    }
    return s;
}

namespace {

void fill_tableau(const Partition& nu, int nvars, std::vector<std::vector<int>>& rows, int r, int c,
                  std::vector<int>& content, MultiPoly& out) {
    if (r == nu.length()) {
        out.add_term(content, Rat(1));
        return;
    }
    int next_r = r, next_c = c + 1;
    if (next_c == nu.part(r)) {
        next_r = r + 1;
        next_c = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);       // rows weakly increase
    if (r > 0) lo = std::max(lo, rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);   // columns strictly increase
    for (int v = lo; v <= nvars; ++v) {
        rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
        ++content[static_cast<size_t>(v - 1)];
        fill_tableau(nu, nvars, rows, next_r, next_c, content, out);
        --content[static_cast<size_t>(v - 1)];
    }
}

}  // namespace

MultiPoly schur_tableaux_polynomial(const Partition& nu, int nvars) {
    if (nvars < nu.length())
        throw std::invalid_argument("schur_tableaux_polynomial: need nvars >= l(nu)");
    MultiPoly out = MultiPoly::zero(nvars);
    if (nu.empty()) return MultiPoly::constant(nvars, Rat(1));
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < nu.length(); ++r) rows.emplace_back(static_cast<size_t>(nu.part(r)), 0);
    std::vector<int> content(static_cast<size_t>(nvars), 0);
    fill_tableau(nu, nvars, rows, 0, 0, content, out);
    return out;
}

MultiPoly substitute_power_sums(const PowerSumElement<Rat>& e, int nvars) {
    MultiPoly out = MultiPoly::zero(nvars);
    for (const auto& [mu, c] : e.terms()) {
        MultiPoly prod = MultiPoly::constant(nvars, Rat(1));
        for (int p : mu.parts()) prod = prod * MultiPoly::power_sum(nvars, p);
        out += prod.scaled(c);
    }
    return out;
}

XLaurentRational principal_specialization(const Partition& nu) {
    PartitionStats st = partition_stats(nu);
    XLaurent num = XLaurent::monomial(GaussianRational(1), static_cast<int>(st.n));
    XLaurent den = XLaurent::one();
    for (int h : st.hooks) {
        // 1 - q^h
        XLaurent f = XLaurent::one();
        f -= XLaurent::monomial(GaussianRational(1), h);
        den = den * f;
    }
    return {num, den};
}

std::vector<Rat> q_expand(const XLaurentRational& r, int order) {
    std::vector<GaussianRational> c = r.power_series(order);
    std::vector<Rat> out(c.size());
    for (size_t k = 0; k < c.size(); ++k) {
        if (!c[k].is_real()) throw IdentityViolation("q_expand: non-real coefficient");
        out[k] = c[k].re;
    }
    return out;
}

namespace {

// Truncated q-power-series helpers over MultiPoly coefficients.
using QSeries = std::vector<MultiPoly>;  // index = q exponent

QSeries qs_zero(int nvars, int order) { return QSeries(static_cast<size_t>(order), MultiPoly::zero(nvars)); }

void qs_accumulate(QSeries& a, const std::vector<Rat>& qcoeffs, const MultiPoly& xcoeff) {
    // a += xcoeff * sum_k qcoeffs[k] q^k
    for (size_t k = 0; k < a.size() && k < qcoeffs.size(); ++k) a[k] += xcoeff.scaled(qcoeffs[k]);
}

// coefficients of 1 / prod_{k=1..m} (1 - q^k) to the requested order
std::vector<Rat> inv_qfactorial(int m, int order) {
    XLaurent den = XLaurent::one();
    for (int k = 1; k <= m; ++k) {
        XLaurent f = XLaurent::one();
        f -= XLaurent::monomial(GaussianRational(1), k);
        den = den * f;
    }
    return q_expand(XLaurentRational(XLaurent::one(), den), order);
}

void compositions(int total, int slots, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
    if (slots == 1) {
        cur.push_back(total);
        f(cur);
        cur.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, slots - 1, cur, f);
        cur.pop_back();
    }
}

}  // namespace

bool cauchy_check(int d, int nvars) {
    if (d < 0 || nvars < 1) throw std::invalid_argument("cauchy_check: need d >= 0, nvars >= 1");
    const int two_n = 2 * nvars;

    // Polynomial part: sum_{|rho|=d} s_rho(x) s_rho(y) vs the t^d coefficient
    // of prod_{i,j} 1/(1 - t x_i y_j).
    MultiPoly lhs = MultiPoly::zero(two_n);
    for (const Partition& rho : enumerate_partitions(d)) {
        if (d > 0 && rho.length() > nvars) continue;  // s_rho vanishes in nvars variables
        MultiPoly sx_small = schur_tableaux_polynomial(rho, nvars);
        MultiPoly sx = MultiPoly::zero(two_n), sy = MultiPoly::zero(two_n);
        for (const auto& [e, c] : sx_small.terms) {
            std::vector<int> ex(static_cast<size_t>(two_n), 0), ey(static_cast<size_t>(two_n), 0);
            for (int j = 0; j < nvars; ++j) {
                ex[static_cast<size_t>(j)] = e[static_cast<size_t>(j)];
                ey[static_cast<size_t>(nvars + j)] = e[static_cast<size_t>(j)];
            }
            sx.add_term(std::move(ex), c);
            sy.add_term(std::move(ey), c);
        }
        lhs += sx * sy;
    }
    std::vector<MultiPoly> acc(static_cast<size_t>(d) + 1, MultiPoly::zero(two_n));
    acc[0] = MultiPoly::constant(two_n, Rat(1));
    for (int i = 0; i < nvars; ++i) {
        for (int j = 0; j < nvars; ++j) {
            std::vector<MultiPoly> next(static_cast<size_t>(d) + 1, MultiPoly::zero(two_n));
            for (int m = 0; m <= d; ++m) {
                for (int k = 0; m + k <= d; ++k) {
                    if (acc[static_cast<size_t>(m)].is_zero()) break;
                    // (x_i y_j)^k
                    std::vector<int> e(static_cast<size_t>(two_n), 0);
                    e[static_cast<size_t>(i)] = k;
                    e[static_cast<size_t>(nvars + j)] += k;
                    MultiPoly mono = MultiPoly::zero(two_n);
                    mono.add_term(std::move(e), Rat(1));
                    next[static_cast<size_t>(m + k)] += acc[static_cast<size_t>(m)] * mono;
                }
            }
            acc = std::move(next);
        }
    }
    if (!(lhs == acc[static_cast<size_t>(d)])) return false;

    // q-specialization y_j = q^{j-1}: sum_{|rho|=d} s_rho(x) q^{n(rho)}/prod(1-q^h)
    // vs the t^d coefficient of prod_i prod_{j>=1} 1/(1 - t x_i q^{j-1}),
    // whose x-composition expansion uses Euler's q-binomial series.
    const int qorder = 2 * d * std::max(1, nvars) + 6;
    QSeries left = qs_zero(nvars, qorder);
    for (const Partition& rho : enumerate_partitions(d)) {
        if (d > 0 && rho.length() > nvars) continue;
        MultiPoly s_small = schur_tableaux_polynomial(rho, nvars);
        std::vector<Rat> spec = q_expand(principal_specialization(rho), qorder);
        qs_accumulate(left, spec, s_small);
    }
    QSeries right = qs_zero(nvars, qorder);
    std::vector<int> cur;
    compositions(d, nvars, cur, [&](const std::vector<int>& m) {
        std::vector<Rat> qpart(static_cast<size_t>(qorder), Rat(0));
        qpart[0] = 1;
        for (int i = 0; i < nvars; ++i) {
            std::vector<Rat> f = inv_qfactorial(m[static_cast<size_t>(i)], qorder);
            std::vector<Rat> conv(static_cast<size_t>(qorder), Rat(0));
            for (int a = 0; a < qorder; ++a) {
                if (qpart[static_cast<size_t>(a)] == 0) continue;
                for (int b = 0; a + b < qorder; ++b)
                    conv[static_cast<size_t>(a + b)] += qpart[static_cast<size_t>(a)] * f[static_cast<size_t>(b)];
            }
            qpart = std::move(conv);
        }
        std::vector<int> exps(m.begin(), m.end());
        MultiPoly mono = MultiPoly::zero(nvars);
        mono.add_term(std::move(exps), Rat(1));
        for (int k = 0; k < qorder; ++k)
            if (qpart[static_cast<size_t>(k)] != 0) right[static_cast<size_t>(k)] += mono.scaled(qpart[static_cast<size_t>(k)]);
    });
    for (int k = 0; k < qorder; ++k)
        if (!(left[static_cast<size_t>(k)] == right[static_cast<size_t>(k)])) return false;
    return true;
}

// q-expansion of s_nu(1, q, q^2, ...) straight from the tableaux: entries
// bounded by m cover every q-exponent below m.
static std::vector<Rat> specialization_by_tableaux(const Partition& nu, int qorder) {
    MultiPoly t = schur_tableaux_polynomial(nu, qorder + nu.length());
    std::vector<Rat> out(static_cast<size_t>(qorder), Rat(0));
    for (const auto& [e, c] : t.terms) {
        long w = 0;
        for (size_t j = 0; j < e.size(); ++j) w += static_cast<long>(e[j]) * static_cast<long>(j);
        if (w < qorder) out[static_cast<size_t>(w)] += c;
    }
    return out;
}

VerifyReport verify_schur(int max_size) {
    VerifyReport report;
    const int qorder = 10;
    for (int d = 1; d <= max_size; ++d) {
        for (const Partition& nu : enumerate_partitions(d)) {
            if (!(substitute_power_sums(schur_in_power_sums(nu), d) == schur_tableaux_polynomial(nu, d))) {
                report.fail({"schur expansion vs tableau oracle", nu, 0, 0, "equal", "differ"});
                return report;
            }
            if (q_expand(principal_specialization(nu), qorder) != specialization_by_tableaux(nu, qorder)) {
                report.fail({"hook-content specialization vs tableaux", nu, 0, 0, "equal", "differ"});
                return report;
            }
        }
    }
    return report;
}

VerifyReport verify_cauchy(int max_d, int max_nvars) {
    VerifyReport report;
    for (int d = 0; d <= max_d; ++d)
        for (int nv = 1; nv <= max_nvars; ++nv)
            if (!cauchy_check(d, nv)) {
                report.fail({"cauchy identity at d=" + std::to_string(d) + ", nvars=" + std::to_string(nv),
                             Partition(), 0, 0, "equal", "differ"});
                return report;
            }
    return report;
}

}  // namespace mv
