#include "mv/kernel.hpp"

#include <stdexcept>

namespace mv {

bool KernelReport::matches_signed_binomials() const {
    if (kernel_dim != 1 || static_cast<int>(kernel_vector.size()) != l + 1) return false;
    for (int k = 0; k <= l; ++k) {
        Rat expect(((k % 2) ? -1 : 1) * binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(k)));
        if (kernel_vector[static_cast<size_t>(k)] != expect) return false;
    }
    return true;
}

KernelReport kernel_solver(int l, int r) {
    if (l < 1 || l > r) throw std::invalid_argument("kernel_solver: need 1 <= l <= r");
    size_t rows = static_cast<size_t>(l);
    size_t cols = static_cast<size_t>(l) + 1;
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t k = 0; k < cols; ++k) {
            Rat base(r - static_cast<int>(k));
            m[i][k] = rat_pow(base, static_cast<unsigned long>(i));
        }
    }
    // reduced row echelon form
    std::vector<int> pivot_col(rows, -1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rat inv = 1 / m[row][col];
        for (size_t k = col; k < cols; ++k) m[row][k] *= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == row || m[rr][col] == 0) continue;
            Rat f = m[rr][col];
            for (size_t k = col; k < cols; ++k) m[rr][k] -= f * m[row][k];
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    size_t rank = row;
    KernelReport report;
    report.l = l;
    report.r = r;
    report.kernel_dim = static_cast<int>(cols - rank);
    if (report.kernel_dim != 1) return report;
    // single free column: back-substitute with the free variable set to 1
    std::vector<bool> is_pivot(cols, false);
    for (size_t rr = 0; rr < rank; ++rr) is_pivot[static_cast<size_t>(pivot_col[rr])] = true;
    size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
    std::vector<Rat> v(cols, Rat(0));
    v[free_col] = 1;
    for (size_t rr = 0; rr < rank; ++rr)
        v[static_cast<size_t>(pivot_col[rr])] = -m[rr][free_col];
    // normalize a_l^0 (the k = 0 component) to 1
    if (v[0] == 0) {
        report.kernel_dim = 0;  // degenerate normalization, reported as failure
        return report;
    }
    Rat scale = 1 / v[0];
    for (auto& x : v) x *= scale;
    report.kernel_vector = std::move(v);
    return report;
}

bool jk_relation_check(int r, const TauPoly& seed) {
    if (seed.degree() > r) throw std::invalid_argument("jk_relation_check: deg(seed) must be <= r");
    // J^k by symbolic differentiation
    std::vector<TauPoly> jk(static_cast<size_t>(r) + 1);
    TauPoly cur = seed;
    for (int k = 0; k <= r; ++k) {
        Rat f(((k % 2) ? -1 : 1), factorial(static_cast<unsigned long>(k)));
        f.canonicalize();
        jk[static_cast<size_t>(k)] = cur * GaussianRational(f);
        cur = cur.derivative();
    }
    if (r >= 1 && jk[1] != -seed.derivative()) return false;
    for (int l = 1; l <= r; ++l) {
        // coefficients defined by the closed-form kernel
        std::vector<GaussianRational> a(static_cast<size_t>(l) + 1);
        for (int k = 0; k <= l; ++k) {
            Rat b(((k % 2) ? -1 : 1) * binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(k)));
            a[static_cast<size_t>(k)] = seed.coeff(l) * GaussianRational(b);
            if (a[static_cast<size_t>(k)] != jk[static_cast<size_t>(k)].coeff(l - k)) return false;
        }
        // the defined coefficients solve the linear system
        for (int i = 0; i < l; ++i) {
            GaussianRational acc;
            for (int k = 0; k <= l; ++k)
                acc += a[static_cast<size_t>(k)] * GaussianRational(rat_pow(Rat(r - k), static_cast<unsigned long>(i)));
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

VerifyReport verify_kernel(int max_l, int max_r) {
    VerifyReport report;
    for (int l = 1; l <= max_l; ++l) {
        for (int r = l; r <= max_r; ++r) {
            KernelReport k = kernel_solver(l, r);
            if (k.kernel_dim != 1) {
                report.fail({"kernel dimension != 1 at l=" + std::to_string(l) + ", r=" + std::to_string(r),
                             Partition(), 0, 0, "1", std::to_string(k.kernel_dim)});
                return report;
            }
            if (!k.matches_signed_binomials()) {
                report.fail({"kernel vector is not signed binomials at l=" + std::to_string(l) +
                                 ", r=" + std::to_string(r),
                             Partition(), 0, 0, "signed binomials", "other"});
                return report;
            }
        }
    }
    return report;
}

}  // namespace mv
