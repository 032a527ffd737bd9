#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mv/parallel.hpp"
#include "mv/partition.hpp"
#include "mv/power_sum.hpp"
#include "mv/verify.hpp"
#include "mv/x_laurent.hpp"

namespace mv {

enum class VForm { product, hook };

// The sine product V_nu as an exact rational function in x = e^{i*lambda/2}.
// The two forms are distinct constructions of the same function:
//   product:  prod_{a<b} sin[(nu_a-nu_b+b-a)L/2]/sin[(b-a)L/2]
//             / prod_i prod_{v=1..nu_i} 2 sin[(v-i+l)L/2]
//   hook:     1 / prod_{cells} 2 sin[h(e) L/2]
XLaurentRational v_exact(const Partition& nu, VForm form);

struct SeriesWindow {
    int valuation_floor = 0;
    int lambda_order = 0;
    int tau_cap = 0;  // serialization/comparison cap; coefficients are exact in tau
};

// A generating function in the p_mu basis with LambdaSeries coefficients.
// full == true: every |mu| <= d is carried; otherwise only the |mu| == d slice.
struct MVSeries {
    int d = 0;
    bool connected = false;
    bool full = true;
    SeriesWindow window;
    PowerSumElement<LambdaSeries> element;

    const LambdaSeries& coefficient(const Partition& mu) const;
};

// Character-sum side: coefficient of p_mu is
//   sum_{|nu|=|mu|} chi_nu(mu)/z_mu * exp(i(tau+1/2) kappa_nu lambda/2) * V_nu.
MVSeries disconnected_series(int d, int lambda_order, int tau_cap, Exec how = Exec::parallel);
MVSeries disconnected_series_serial(int d, int lambda_order, int tau_cap);

// Connected form, the graded logarithm of the disconnected series; component
// series are computed to order lambda_order + 2d so every coefficient reaches
// the requested window.
MVSeries connected_series(int d, int lambda_order, int tau_cap, Exec how = Exec::parallel);

// Connected series at tau = 0 against the closed form: the p_n coefficient is
// -i^{n+1} / (2 n sin(n lambda / 2)) and every multi-part coefficient is zero.
VerifyReport initial_condition_check(int d, int lambda_order);

// The bare cut-and-join operator A over ordered pairs (i, j):
//   A = sum_{i,j>=1} [ i j p_{i+j} d^2/dp_i dp_j + (i+j) p_i p_j d/dp_{i+j} ].
template <typename C>
PowerSumElement<C> cutjoin_bare(const PowerSumElement<C>& f) {
    PowerSumElement<C> out;
    for (const auto& [mu, c] : f.terms()) {
        PartitionStats st = partition_stats(mu);
        int maxpart = mu.empty() ? 0 : mu.part(0);
        auto m = [&](int v) -> long {
            return (v >= 1 && v < static_cast<int>(st.multiplicities.size()))
                       ? st.multiplicities[static_cast<size_t>(v)]
                       : 0;
        };
        // joins: i j p_{i+j} d^2/dp_i dp_j over ordered (i, j)
        for (int i = 1; i <= maxpart; ++i) {
            if (m(i) == 0) continue;
            for (int j = 1; j <= maxpart; ++j) {
                long ways = (i == j) ? m(i) * (m(i) - 1) : m(i) * m(j);
                if (ways == 0) continue;
                Partition target = mu.removing(i).removing(j).adding(i + j);
                out.add_term(target, RingTraits<C>::scale_rat(c, Rat(static_cast<long>(i) * j * ways)));
            }
        }
        // cuts: (i+j) p_i p_j d/dp_{i+j} over ordered (i, j), i + j = k
        for (int k = 2; k <= maxpart; ++k) {
            if (m(k) == 0) continue;
            for (int i = 1; i < k; ++i) {
                Partition target = mu.removing(k).adding(i).adding(k - i);
                out.add_term(target, RingTraits<C>::scale_rat(c, Rat(static_cast<long>(k) * m(k))));
            }
        }
    }
    return out;
}

// (i lambda / 2) * [A(f) + quadratic term when connected], the right-hand side
// of the cut-and-join flow.  max_deg caps the weighted degree of the quadratic
// products.
PowerSumElement<LambdaSeries> cutjoin_apply(const PowerSumElement<LambdaSeries>& f, bool connected, int max_deg);

struct CutJoinMatrix {
    int d = 0;
    std::vector<Partition> basis;  // canonical order
    std::vector<std::vector<long long>> entries;  // entries[row eta][col mu]
};

// Matrix of the bare operator A on the degree-d slice: A p_mu = sum_eta M[eta][mu] p_eta.
CutJoinMatrix cutjoin_matrix(int d);

// d/dtau F == cutjoin_apply(F) on the stated window, for the disconnected or
// connected series at degree d.
VerifyReport verify_cutjoin(int d, int lambda_order, int tau_cap, bool connected, Exec how = Exec::parallel);

// M v_nu = kappa_nu v_nu for v_nu = (chi_nu(mu)/z_mu)_mu, all |nu| <= max_d.
VerifyReport verify_eigenvectors(int max_d);

// Product form == hook form as exact rational functions, expansion valuation
// exactly -|nu|, for all |nu| <= max_size.
VerifyReport verify_vforms(int max_size);

// Parity (lambda^k = l(mu) mod 2) and the valuation floors
// (>= -l(mu) disconnected, >= l(mu)-2 connected) for all |mu| <= max_d.
VerifyReport verify_parity_valuation(int max_d, int lambda_order);

// Degree-d slice rebuilt as exp(tau (i lambda/2) M) applied to the tau = 0
// vector, expanded as a tau-Taylor series to tau_deg.
MVSeries ode_reconstruct(int d, int tau_deg, int lambda_order);
VerifyReport verify_ode_reconstruct(int d, int tau_deg, int lambda_order);

struct HodgePolynomial {
    int g = 0;
    Partition mu;
    std::vector<Rat> coeffs;  // H as a real polynomial in tau, index = exponent

    Rat at_zero() const { return coeffs.empty() ? Rat(0) : coeffs.front(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Reads C_{g,mu} off the lambda^(2g-2+l(mu)) coefficient of the connected
// series and strips the combinatorial prefactor by exact division.
HodgePolynomial hodge_extract(int g, const Partition& mu, int lambda_order);
HodgePolynomial hodge_extract_from(const MVSeries& connected, int g, const Partition& mu);

// The prefactor -i^{|mu|+l} / |Aut(mu)| [tau(tau+1)]^{l-1} prod_i prod_a (mu_i tau + a)/(mu_i-1)!.
TauPoly hodge_prefactor(const Partition& mu);

}  // namespace mv
