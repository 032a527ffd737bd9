#pragma once

#include <vector>

#include "mv/multipoly.hpp"
#include "mv/partition.hpp"
#include "mv/power_sum.hpp"
#include "mv/verify.hpp"
#include "mv/x_laurent.hpp"

namespace mv {

// Schur function s_nu in the power-sum basis: sum_eta chi_nu(eta)/z_eta p_eta.
PowerSumElement<Rat> schur_in_power_sums(const Partition& nu);

// Independent route: monomial expansion of s_nu by semistandard tableau
// enumeration in nvars variables (requires nvars >= l(nu)).
MultiPoly schur_tableaux_polynomial(const Partition& nu, int nvars);

// Substitute p_k -> x_1^k + ... + x_n^k into a power-sum element.
MultiPoly substitute_power_sums(const PowerSumElement<Rat>& e, int nvars);

// s_nu(1, q, q^2, ...) = q^{n(nu)} / prod_{cells} (1 - q^{h}); the Laurent
// variable is read as q.
XLaurentRational principal_specialization(const Partition& nu);

// Power-series coefficients in q of a rational function with no pole at q=0;
// throws if any coefficient is not real.
std::vector<Rat> q_expand(const XLaurentRational& r, int order);

// The t^d coefficient of the Cauchy identity, in two readings: as polynomials
// in x_1..x_n, y_1..y_n, and with y_j specialized to q^{j-1} against the
// principal specialization, truncated in q.
bool cauchy_check(int d, int nvars);

// Sweeps used by the CLI verify targets.
VerifyReport verify_schur(int max_size);                 // expansion vs tableaux, hook-content vs specialization
VerifyReport verify_cauchy(int max_d, int max_nvars);

}  // namespace mv
