#include "mv/mv_series.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "mv/characters.hpp"
#include "mv/errors.hpp"

namespace mv {

namespace {
const LambdaSeries kZeroSeries{};
}

const LambdaSeries& MVSeries::coefficient(const Partition& mu) const {
    auto it = element.terms().find(mu);
    return it == element.terms().end() ? kZeroSeries : it->second;
}

XLaurentRational v_exact(const Partition& nu, VForm form) {
    if (nu.size() < 1) throw std::invalid_argument("v_exact: |nu| must be >= 1");
    if (form == VForm::hook) {
        XLaurent den = XLaurent::one();
        for (int h : partition_stats(nu).hooks) den = den * XLaurent::sine_block(h);
        return {XLaurent::one(), den};
    }
    int l = nu.length();
    XLaurent num = XLaurent::one();
    XLaurent den = XLaurent::one();
    for (int a = 1; a <= l; ++a) {
        for (int b = a + 1; b <= l; ++b) {
            num = num * XLaurent::sine_block(nu.part(a - 1) - nu.part(b - 1) + b - a);
            den = den * XLaurent::sine_block(b - a);
        }
    }
    for (int i = 1; i <= l; ++i)
        for (int v = 1; v <= nu.part(i - 1); ++v) den = den * XLaurent::sine_block(v - i + l);
    return {num, den};
}

namespace {

// exp(i (tau + 1/2) kappa lambda / 2) as the exp_tau_lambda argument
TauPoly kappa_exponent(long long kappa) {
    Rat half_k = make_rat(kappa, 2);
    Rat quarter_k = make_rat(kappa, 4);
    return TauPoly(std::vector<GaussianRational>{GaussianRational(Rat(0), quarter_k),
                                                 GaussianRational(Rat(0), half_k)});
}

// Per-irreducible term exp(i (tau+1/2) kappa_nu lambda/2) * V_nu, common to
// every class row of the same degree.
LambdaSeries nu_term(const Partition& nu, int order) {
    if (nu.empty()) return LambdaSeries::constant(TauPoly(1)).truncated(order);
    long long kappa = partition_stats(nu).kappa;
    LambdaSeries e = exp_tau_lambda(kappa_exponent(kappa), order);
    LambdaSeries v = x_to_series(v_exact(nu, VForm::hook), order);
    return e * v;
}

MVSeries assemble_disconnected(int d, int lambda_order, int tau_cap,
                               const std::function<LambdaSeries(int, const Partition&)>& row_builder) {
    MVSeries s;
    s.d = d;
    s.connected = false;
    s.full = true;
    s.window = {-d, lambda_order, tau_cap};
    s.element.add_term(Partition(), RingTraits<LambdaSeries>::one());
    for (int k = 1; k <= d; ++k) {
        std::vector<Partition> mus = enumerate_partitions(k);
        std::vector<LambdaSeries> rows(mus.size());
        for (size_t r = 0; r < mus.size(); ++r) rows[r] = row_builder(k, mus[r]);
        for (size_t r = 0; r < mus.size(); ++r) s.element.add_term(mus[r], rows[r]);
    }
    return s;
}

}  // namespace

MVSeries disconnected_series_serial(int d, int lambda_order, int tau_cap) {
    if (d < 1) throw std::invalid_argument("disconnected_series: d must be >= 1");
    if (lambda_order <= -d)
        throw std::invalid_argument("disconnected_series: window too small for the valuation floor -d");
    // Reference path: everything recomputed per (mu, nu), plain loops.
    auto row = [&](int k, const Partition& mu) {
        const CharacterTable& table = cached_character_table(k);
        Int z = partition_stats(mu).z;
        int col = table.index_of(mu);
        LambdaSeries acc = LambdaSeries::zero_to(lambda_order);
        for (size_t v = 0; v < table.labels.size(); ++v) {
            const Int& chi = table.value(static_cast<int>(v), col);
            if (chi == 0) continue;
            Rat w(chi, z);
            w.canonicalize();
            acc += nu_term(table.labels[v], lambda_order + k).scaled(GaussianRational(w));
        }
        return acc.truncated(lambda_order);
    };
    return assemble_disconnected(d, lambda_order, tau_cap, row);
}

MVSeries disconnected_series(int d, int lambda_order, int tau_cap, Exec how) {
    if (how == Exec::serial) return disconnected_series_serial(d, lambda_order, tau_cap);
    if (d < 1) throw std::invalid_argument("disconnected_series: d must be >= 1");
    if (lambda_order <= -d)
        throw std::invalid_argument("disconnected_series: window too small for the valuation floor -d");
    MVSeries s;
    s.d = d;
    s.connected = false;
    s.full = true;
    s.window = {-d, lambda_order, tau_cap};
    s.element.add_term(Partition(), RingTraits<LambdaSeries>::one());
    for (int k = 1; k <= d; ++k) {
        const CharacterTable& table = cached_character_table(k);
        int n = static_cast<int>(table.labels.size());
        // phase A: per-irreducible terms, independent of the class row
        std::vector<LambdaSeries> terms(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
        for (int v = 0; v < n; ++v)
            terms[static_cast<size_t>(v)] = nu_term(table.labels[static_cast<size_t>(v)], lambda_order + k);
        // phase B: class rows combine the shared terms with chi/z weights
        std::vector<LambdaSeries> rows(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
        for (int r = 0; r < n; ++r) {
            Int z = partition_stats(table.labels[static_cast<size_t>(r)]).z;
            LambdaSeries acc = LambdaSeries::zero_to(lambda_order);
            for (int v = 0; v < n; ++v) {
                const Int& chi = table.value(v, r);
                if (chi == 0) continue;
                Rat w(chi, z);
                w.canonicalize();
                acc += terms[static_cast<size_t>(v)].scaled(GaussianRational(w));
            }
            rows[static_cast<size_t>(r)] = acc.truncated(lambda_order);
        }
        for (int r = 0; r < n; ++r) s.element.add_term(table.labels[static_cast<size_t>(r)], rows[static_cast<size_t>(r)]);
    }
    return s;
}

MVSeries connected_series(int d, int lambda_order, int tau_cap, Exec how) {
    if (d < 1) throw std::invalid_argument("connected_series: d must be >= 1");
    if (lambda_order <= -1)
        throw std::invalid_argument("connected_series: window too small for the valuation floor -1");
    MVSeries dis = disconnected_series(d, lambda_order + 2 * d, tau_cap, how);
    MVSeries s;
    s.d = d;
    s.connected = true;
    s.full = true;
    s.window = {-1, lambda_order, tau_cap};
    PowerSumElement<LambdaSeries> logel = graded_log(dis.element, d);
    for (const auto& [mu, c] : logel.terms()) s.element.add_term(mu, c.truncated(lambda_order));
    return s;
}

VerifyReport initial_condition_check(int d, int lambda_order) {
    if (d < 1) throw std::invalid_argument("initial_condition_check: d must be >= 1");
    VerifyReport report;
    MVSeries conn = connected_series(d, lambda_order, lambda_order);
    for (int k = 1; k <= d; ++k) {
        for (const Partition& mu : enumerate_partitions(k)) {
            LambdaSeries actual = conn.coefficient(mu).at_tau_zero();
            LambdaSeries expected;
            if (mu.length() == 1) {
                int n = mu.part(0);
                GaussianRational scale = -GaussianRational::i_pow(n + 1) * GaussianRational(make_rat(1, n));
                expected = series_inverse(sin_block(n, lambda_order + 2)).scaled(scale);
            }
            auto mism = first_mismatch(actual, expected);
            if (mism) {
                report.fail({"initial condition", mu, mism->lambda_exp, mism->tau_exp, mism->rhs.str(),
                             mism->lhs.str()});
                return report;
            }
            int covered = LambdaSeries::sat_min(actual.order(), expected.order());
            if (covered < lambda_order) {
                report.fail({"initial condition: window too small", mu, covered, 0,
                             "order >= " + std::to_string(lambda_order), "order " + std::to_string(covered)});
                return report;
            }
        }
    }
    return report;
}

PowerSumElement<LambdaSeries> cutjoin_apply(const PowerSumElement<LambdaSeries>& f, bool connected, int max_deg) {
    PowerSumElement<LambdaSeries> acc = cutjoin_bare(f);
    if (connected) {
        // sum over ordered (i, j): i j p_{i+j} (dF/dp_i)(dF/dp_j)
        std::vector<PowerSumElement<LambdaSeries>> diffs;
        diffs.reserve(static_cast<size_t>(max_deg) + 1);
        diffs.emplace_back();  // index 0 unused
        for (int i = 1; i <= max_deg; ++i) diffs.push_back(f.diff(i));
        for (int i = 1; i <= max_deg; ++i) {
            if (diffs[static_cast<size_t>(i)].empty()) continue;
            for (int j = 1; i + j <= max_deg; ++j) {
                if (diffs[static_cast<size_t>(j)].empty()) continue;
                PowerSumElement<LambdaSeries> prod =
                    mul_truncated(diffs[static_cast<size_t>(i)], diffs[static_cast<size_t>(j)], max_deg - i - j);
                if (prod.empty()) continue;
                acc += prod.multiplied_by_monomial(Partition({i + j}), Rat(static_cast<long>(i) * j));
            }
        }
    }
    // overall factor i lambda / 2
    GaussianRational half_i(Rat(0), make_rat(1, 2));
    return acc.mapped([&](const LambdaSeries& c) { return c.scaled(half_i).shifted(1); });
}

CutJoinMatrix cutjoin_matrix(int d) {
    if (d < 1) throw std::invalid_argument("cutjoin_matrix: d must be >= 1");
    CutJoinMatrix m;
    m.d = d;
    m.basis = enumerate_partitions(d);
    size_t n = m.basis.size();
    m.entries.assign(n, std::vector<long long>(n, 0));
    for (size_t col = 0; col < n; ++col) {
        PowerSumElement<Rat> image = cutjoin_bare(PowerSumElement<Rat>::monomial(m.basis[col], Rat(1)));
        for (const auto& [eta, c] : image.terms()) {
            auto it = std::lower_bound(m.basis.begin(), m.basis.end(), eta, PartitionLess{});
            if (it == m.basis.end() || !(*it == eta))
                throw IdentityViolation("cutjoin_matrix: image leaves the degree-d slice at " + eta.str());
            size_t row = static_cast<size_t>(it - m.basis.begin());
            if (c.get_den() != 1) throw IdentityViolation("cutjoin_matrix: non-integer entry");
            m.entries[row][col] = static_cast<long long>(c.get_num().get_si());
        }
    }
    return m;
}

VerifyReport verify_cutjoin(int d, int lambda_order, int tau_cap, bool connected, Exec how) {
    VerifyReport report;
    int work_order = lambda_order + 2;
    MVSeries s = connected ? connected_series(d, work_order, tau_cap, how)
                           : disconnected_series(d, work_order, tau_cap, how);
    PowerSumElement<LambdaSeries> rhs = cutjoin_apply(s.element, connected, d);
    std::vector<Partition> mus;
    mus.emplace_back();
    for (int k = 1; k <= d; ++k)
        for (const Partition& mu : enumerate_partitions(k)) mus.push_back(mu);
    int n = static_cast<int>(mus.size());
    std::vector<std::optional<FailureLocator>> found(static_cast<size_t>(n));
    const bool par = (how == Exec::parallel);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count()) if (par)
    for (int r = 0; r < n; ++r) {
        const Partition& mu = mus[static_cast<size_t>(r)];
        LambdaSeries lhs = s.coefficient(mu).tau_derivative();
        LambdaSeries right = rhs.coefficient(mu);
        int covered = LambdaSeries::sat_min(lhs.order(), right.order());
        if (covered < lambda_order) {
            found[static_cast<size_t>(r)] = FailureLocator{"cut-and-join: window too small", mu, covered, 0,
                                                           "order >= " + std::to_string(lambda_order),
                                                           "order " + std::to_string(covered)};
            continue;
        }
        auto mism = first_mismatch(lhs.truncated(lambda_order), right.truncated(lambda_order));
        if (mism)
            found[static_cast<size_t>(r)] = FailureLocator{connected ? "cut-and-join (connected)"
                                                                     : "cut-and-join (disconnected)",
                                                           mu, mism->lambda_exp, mism->tau_exp, mism->lhs.str(),
                                                           mism->rhs.str()};
    }
    for (auto& loc : found)
        if (loc) {
            report.fail(std::move(*loc));
            break;
        }
    return report;
}

VerifyReport verify_eigenvectors(int max_d) {
    VerifyReport report;
    for (int d = 1; d <= max_d; ++d) {
        CutJoinMatrix m = cutjoin_matrix(d);
        const CharacterTable& table = cached_character_table(d);
        size_t n = m.basis.size();
        std::vector<Int> z(n);
        for (size_t c = 0; c < n; ++c) z[c] = partition_stats(m.basis[c]).z;
        for (size_t v = 0; v < n; ++v) {
            long long kappa = partition_stats(table.labels[v]).kappa;
            std::vector<Rat> vec(n);
            for (size_t c = 0; c < n; ++c) {
                vec[c] = Rat(table.value(static_cast<int>(v), static_cast<int>(c)), z[c]);
                vec[c].canonicalize();
            }
            for (size_t row = 0; row < n; ++row) {
                Rat acc(0);
                for (size_t c = 0; c < n; ++c)
                    if (m.entries[row][c] != 0) acc += Rat(static_cast<long>(m.entries[row][c])) * vec[c];
                if (acc != Rat(static_cast<long>(kappa)) * vec[row]) {
                    report.fail({"eigenvector: M v != kappa v for nu=" + table.labels[v].str(), m.basis[row], 0,
                                 0, rat_string(Rat(static_cast<long>(kappa)) * vec[row]), rat_string(acc)});
                    return report;
                }
            }
        }
    }
    return report;
}

VerifyReport verify_vforms(int max_size) {
    VerifyReport report;
    for (int d = 1; d <= max_size; ++d) {
        for (const Partition& nu : enumerate_partitions(d)) {
            XLaurentRational prod = v_exact(nu, VForm::product);
            XLaurentRational hook = v_exact(nu, VForm::hook);
            if (prod != hook) {
                report.fail({"v-form: product != hook", nu, 0, 0, "equal rational functions", "differ"});
                return report;
            }
            LambdaSeries expansion = x_to_series(hook, -d + 4);
            if (expansion.support_empty() || expansion.valuation() != -d) {
                report.fail({"v-form: expansion valuation", nu, expansion.support_empty() ? 0 : expansion.valuation(),
                             0, std::to_string(-d), "other"});
                return report;
            }
        }
    }
    return report;
}

VerifyReport verify_parity_valuation(int max_d, int lambda_order) {
    VerifyReport report;
    MVSeries dis = disconnected_series(max_d, lambda_order, lambda_order);
    MVSeries conn = connected_series(max_d, lambda_order, lambda_order);
    for (int k = 1; k <= max_d; ++k) {
        for (const Partition& mu : enumerate_partitions(k)) {
            int l = mu.length();
            const LambdaSeries& rd = dis.coefficient(mu);
            const LambdaSeries& rc = conn.coefficient(mu);
            if (!rd.support_empty() && rd.valuation() < -l) {
                report.fail({"valuation floor (disconnected)", mu, rd.valuation(), 0, ">= " + std::to_string(-l),
                             std::to_string(rd.valuation())});
                return report;
            }
            if (!rc.support_empty() && rc.valuation() < l - 2) {
                report.fail({"valuation floor (connected)", mu, rc.valuation(), 0, ">= " + std::to_string(l - 2),
                             std::to_string(rc.valuation())});
                return report;
            }
            for (const LambdaSeries* s : {&rd, &rc}) {
                for (int n = s->valuation(); n < s->support_end(); ++n) {
                    if (s->coeff(n).is_zero()) continue;
                    if (((n - l) % 2 + 2) % 2 != 0) {
                        report.fail({s == &rd ? "parity (disconnected)" : "parity (connected)", mu, n, 0,
                                     "zero at parity-violating exponent", s->coeff(n).str()});
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

MVSeries ode_reconstruct(int d, int tau_deg, int lambda_order) {
    if (d < 1) throw std::invalid_argument("ode_reconstruct: d must be >= 1");
    MVSeries base = disconnected_series(d, lambda_order, tau_deg);
    CutJoinMatrix m = cutjoin_matrix(d);
    size_t n = m.basis.size();
    std::vector<LambdaSeries> w(n);
    for (size_t c = 0; c < n; ++c) w[c] = base.coefficient(m.basis[c]).at_tau_zero();
    std::vector<std::vector<LambdaSeries>> layers;
    layers.push_back(w);
    GaussianRational half_i(Rat(0), make_rat(1, 2));
    for (int k = 1; k <= tau_deg; ++k) {
        std::vector<LambdaSeries> next(n);
        for (size_t row = 0; row < n; ++row) {
            LambdaSeries acc;  // exact zero
            for (size_t c = 0; c < n; ++c) {
                if (m.entries[row][c] == 0) continue;
                acc += layers.back()[c].scaled(GaussianRational(Rat(static_cast<long>(m.entries[row][c]))));
            }
            next[row] = acc.scaled(half_i * GaussianRational(make_rat(1, k))).shifted(1);
        }
        layers.push_back(std::move(next));
    }
    MVSeries out;
    out.d = d;
    out.connected = false;
    out.full = false;
    out.window = {-d, lambda_order, tau_deg};
    for (size_t c = 0; c < n; ++c) {
        LambdaSeries assembled;
        for (int k = 0; k <= tau_deg; ++k) {
            // tau^k layer: promote each scalar lambda-coefficient to tau-degree k
            assembled += layers[static_cast<size_t>(k)][c].scaled(TauPoly::variable().pow(static_cast<unsigned>(k)));
        }
        out.element.add_term(m.basis[c], assembled.truncated(lambda_order));
    }
    return out;
}

VerifyReport verify_ode_reconstruct(int d, int tau_deg, int lambda_order) {
    VerifyReport report;
    MVSeries rec = ode_reconstruct(d, tau_deg, lambda_order);
    MVSeries direct = disconnected_series(d, lambda_order, tau_deg);
    for (const Partition& mu : enumerate_partitions(d)) {
        LambdaSeries a = rec.coefficient(mu);
        LambdaSeries b = direct.coefficient(mu);
        auto mism = first_mismatch(a, b, tau_deg);
        if (mism) {
            report.fail({"ode reconstruction", mu, mism->lambda_exp, mism->tau_exp, mism->rhs.str(),
                         mism->lhs.str()});
            return report;
        }
    }
    return report;
}

TauPoly hodge_prefactor(const Partition& mu) {
    int l = mu.length();
    int size = mu.size();
    PartitionStats st = partition_stats(mu);
    GaussianRational scalar = -GaussianRational::i_pow(size + l);
    Rat aut(st.aut_order);
    scalar = scalar * GaussianRational(Rat(1) / aut);
    TauPoly tau = TauPoly::variable();
    TauPoly tau_tau1 = tau * (tau + TauPoly(1));
    TauPoly poly = tau_tau1.pow(static_cast<unsigned>(l - 1));
    for (int i = 0; i < l; ++i) {
        int mi = mu.part(i);
        for (int a = 1; a <= mi - 1; ++a) poly = poly * (tau * GaussianRational(mi) + TauPoly(a));
        Rat invfact(Int(1), factorial(static_cast<unsigned long>(mi - 1)));
        invfact.canonicalize();
        scalar = scalar * GaussianRational(invfact);
    }
    return poly * scalar;
}

HodgePolynomial hodge_extract_from(const MVSeries& connected, int g, const Partition& mu) {
    if (g < 0) throw std::invalid_argument("hodge_extract: g must be >= 0");
    if (mu.size() < 1) throw std::invalid_argument("hodge_extract: |mu| must be >= 1");
    if (!connected.connected) throw std::invalid_argument("hodge_extract: needs the connected series");
    int e = 2 * g - 2 + mu.length();
    const LambdaSeries& r = connected.coefficient(mu);
    if (!r.known(e))
        throw std::invalid_argument("hodge_extract: lambda-order too small for the requested genus");
    TauPoly c = r.coeff(e);
    TauPoly pref = hodge_prefactor(mu);
    TauPoly h = tau_divide_exact(c, pref);
    if (!h.is_real()) throw IdentityViolation("hodge_extract: imaginary residue for " + mu.str());
    if (h.degree() > 2 * g)
        throw IdentityViolation("hodge_extract: tau-degree exceeds 2g for " + mu.str());
    HodgePolynomial out;
    out.g = g;
    out.mu = mu;
    out.coeffs.assign(static_cast<size_t>(std::max(h.degree(), 0)) + 1, Rat(0));
    for (int k = 0; k <= h.degree(); ++k) out.coeffs[static_cast<size_t>(k)] = h.coeff(k).re;
    if (h.is_zero()) out.coeffs.assign(1, Rat(0));
    return out;
}

HodgePolynomial hodge_extract(int g, const Partition& mu, int lambda_order) {
    int e = 2 * g - 2 + mu.length();
    if (e >= lambda_order)
        throw std::invalid_argument("hodge_extract: lambda_order must exceed 2g-2+l(mu)");
    MVSeries conn = connected_series(mu.size(), lambda_order, 2 * g);
    return hodge_extract_from(conn, g, mu);
}

}  // namespace mv
