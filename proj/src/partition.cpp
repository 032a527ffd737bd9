#include "mv/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "mv/verify.hpp"

namespace mv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("Partition::parse: empty component");
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("Partition::parse: bad integer '" + tok + "'");
        parts.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::multiplicity(int value) const {
    int m = 0;
    for (int p : parts_) m += (p == value);
    return m;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    return Partition(std::move(conj));
}

Partition Partition::removing(int value) const {
    std::vector<int> out;
    bool removed = false;
    for (int p : parts_) {
        if (!removed && p == value) {
            removed = true;
            continue;
        }
        out.push_back(p);
    }
    if (!removed) throw std::invalid_argument("Partition::removing: part not present");
    return Partition(std::move(out));
}

Partition Partition::adding(int value) const {
    if (value <= 0) throw std::invalid_argument("Partition::adding: part must be positive");
    std::vector<int> out = parts_;
    auto it = std::lower_bound(out.begin(), out.end(), value, std::greater<int>());
    out.insert(it, value);
    return Partition(std::move(out));
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(parts_[k]);
    }
    return s + ")";
}

bool canonical_less(const Partition& a, const Partition& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.parts() < b.parts();
}

namespace {

void gen_partitions(int d, int max_part, std::vector<int>& stack, std::vector<Partition>& out) {
    if (d == 0) {
        out.emplace_back(std::vector<int>(stack));
        return;
    }
    for (int first = 1; first <= std::min(d, max_part); ++first) {
        stack.push_back(first);
        gen_partitions(d - first, first, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, int soft_cap) {
    if (d < 0) throw std::invalid_argument("enumerate_partitions: d must be >= 0");
    if (d > soft_cap) throw std::invalid_argument("enumerate_partitions: d exceeds the size cap");
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(d, d, stack, out);
    if (out.empty()) out.emplace_back();
    return out;
}

PartitionStats partition_stats(const Partition& mu) {
    PartitionStats st;
    const auto& p = mu.parts();
    int maxpart = p.empty() ? 0 : p[0];
    st.multiplicities.assign(static_cast<size_t>(maxpart) + 1, 0);
    for (int v : p) ++st.multiplicities[static_cast<size_t>(v)];
    st.z = 1;
    st.aut_order = 1;
    for (int j = 1; j <= maxpart; ++j) {
        int m = st.multiplicities[static_cast<size_t>(j)];
        if (m == 0) continue;
        Int f = factorial(static_cast<unsigned long>(m));
        st.aut_order *= f;
        Int jp;
        mpz_ui_pow_ui(jp.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(m));
        st.z *= f * jp;
    }
    long long size = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        long long pi = p[i];
        long long row = static_cast<long long>(i) + 1;
        size += pi;
        st.kappa += pi * pi - 2 * row * pi;
        st.n += (row - 1) * pi;
    }
    st.kappa += size;
    st.conjugate = mu.conjugate();
    const auto& q = st.conjugate.parts();
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            int arm = p[i] - j - 1;
            int leg = q[static_cast<size_t>(j)] - static_cast<int>(i) - 1;
            st.hooks.push_back(arm + leg + 1);
        }
    return st;
}

bool hook_sum_identity_holds(const Partition& rho) {
    PartitionStats st = partition_stats(rho);
    PartitionStats stc = partition_stats(st.conjugate);
    long long hook_sum = 0;
    for (int h : st.hooks) hook_sum += h;
    if (hook_sum != st.n + stc.n + rho.size()) return false;
    // (1/2) sum h - n = kappa/4 + |rho|/2, cleared of denominators
    return 2 * hook_sum - 4 * st.n == st.kappa + 2 * static_cast<long long>(rho.size());
}

VerifyReport verify_hook_identities(int max_size) {
    VerifyReport report;
    for (int d = 0; d <= max_size; ++d)
        for (const Partition& rho : enumerate_partitions(d))
            if (!hook_sum_identity_holds(rho)) {
                report.fail({"hook sum identity", rho, 0, 0, "identity holds", "violated"});
                return report;
            }
    return report;
}

NeighborSet cut_join_neighbors(const Partition& mu) {
    if (mu.size() < 1) throw std::invalid_argument("cut_join_neighbors: |mu| must be >= 1");
    NeighborSet out;
    PartitionStats st = partition_stats(mu);
    auto mult = [&](int v) -> long long {
        if (v <= 0 || v >= static_cast<int>(st.multiplicities.size())) return 0;
        return st.multiplicities[static_cast<size_t>(v)];
    };
    int maxpart = mu.empty() ? 0 : mu.part(0);
    for (int u = 1; u <= maxpart; ++u) {
        long long mu_u = mult(u);
        if (mu_u == 0) continue;
        for (int w = u; w <= maxpart; ++w) {
            long long mu_w = mult(w);
            if (mu_w == 0) continue;
            long long ways = (u == w) ? mu_u * (mu_u - 1) : mu_u * mu_w;
            if (ways == 0) continue;
            Partition target = mu.removing(u).removing(w).adding(u + w);
            out.joins.push_back({std::move(target), static_cast<long long>(u) * w * ways});
        }
    }
    for (int k = 2; k <= maxpart; ++k) {
        long long mk = mult(k);
        if (mk == 0) continue;
        for (int i = 1; 2 * i <= k; ++i) {
            Partition target = mu.removing(k).adding(i).adding(k - i);
            out.cuts.push_back({std::move(target), static_cast<long long>(k) * mk});
        }
    }
    return out;
}

}  // namespace mv
