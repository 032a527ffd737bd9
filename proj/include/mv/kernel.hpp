#pragma once

#include <vector>

#include "mv/mv_series.hpp"
#include "mv/rational.hpp"
#include "mv/tau_poly.hpp"

namespace mv {

// Exact kernel of the l x (l+1) system sum_{k=0..l} (r-k)^i a_{l-k}^k = 0 for
// 0 <= i < l.  kernel_vector is normalized so the k = 0 component is 1; it is
// expected to be ((-1)^k binomial(l, k))_k and the kernel one dimensional.
struct KernelReport {
    int l = 0;
    int r = 0;
    int kernel_dim = 0;
    std::vector<Rat> kernel_vector;

    bool matches_signed_binomials() const;
};

KernelReport kernel_solver(int l, int r);

// Treats seed as J^0 and checks, for every l <= r, that the coefficients
// defined by a_{l-k}^k = (-1)^k binom(l,k) a_l^0 coincide with those of
// J^k = ((-1)^k / k!) d^k/dtau^k J^0, that they solve the linear system, and
// that J^1 = -dJ^0/dtau.
bool jk_relation_check(int r, const TauPoly& seed);

// Sweep: kernels for all 1 <= l <= max_l, l <= r <= max_r.
VerifyReport verify_kernel(int max_l, int max_r);

}  // namespace mv
