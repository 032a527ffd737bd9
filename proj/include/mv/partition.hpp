#pragma once

#include <string>
#include <vector>

#include "mv/rational.hpp"

namespace mv {

// Weakly decreasing sequence of positive integers.  The empty partition is
// valid with |mu| = 0, l(mu) = 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Comma-separated decreasing positive integers, e.g. "3,1,1"; "" is empty.
    static Partition parse(const std::string& s);

    int size() const;    // |mu|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    int multiplicity(int value) const;
    Partition conjugate() const;
    Partition removing(int value) const;  // one copy of the part removed
    Partition adding(int value) const;    // one part inserted, order kept

    std::string str() const;  // "(3,1,1)"

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

private:
    std::vector<int> parts_;
};

// Canonical order used everywhere: by |mu| first, then lexicographically on
// the decreasing part vectors, so within a fixed size (1,...,1) comes first
// and (d) last.  enumerate_partitions emits exactly this order.
bool canonical_less(const Partition& a, const Partition& b);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

constexpr int kPartitionSoftCap = 30;

// All partitions of d in canonical order.
std::vector<Partition> enumerate_partitions(int d, int soft_cap = kPartitionSoftCap);

struct PartitionStats {
    Int z;                            // prod m_j! j^m_j
    Int aut_order;                    // prod m_j!
    long long kappa = 0;              // |mu| + sum(mu_i^2 - 2 i mu_i)
    long long n = 0;                  // sum (i-1) mu_i
    std::vector<int> hooks;           // hook lengths of all cells, row-major
    Partition conjugate;
    std::vector<int> multiplicities;  // index i holds m_i; index 0 unused
};

PartitionStats partition_stats(const Partition& mu);

// Both hook-sum identities: sum h = n(rho) + n(rho') + |rho| and
// (1/2) sum h - n(rho) = kappa/4 + |rho|/2.
bool hook_sum_identity_holds(const Partition& rho);

// Cut and join neighbours with one entry per unordered neighbour type.  The
// coefficient is the cut-and-join operator contribution divided by the number
// of ordered (i, j) pairs realizing the type, so joins of parts i < j carry
// i*j*m_i*m_j, joins of two equal parts i carry i^2*m_i*(m_i - 1), and every
// cut of a part k carries k*m_k.
struct NeighborSet {
    struct Entry {
        Partition target;
        long long coeff;
    };
    std::vector<Entry> joins, cuts;
};

NeighborSet cut_join_neighbors(const Partition& mu);

}  // namespace mv
