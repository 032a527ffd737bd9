#include <set>

#include "doctest.h"
#include "mv/partition.hpp"

using namespace mv;

namespace {

// Independent counting oracle: p(n) by the classic two-variable recurrence
// counting partitions of n with parts <= k.
long long partition_count_oracle(int n) {
    std::vector<std::vector<long long>> p(static_cast<size_t>(n) + 1,
                                          std::vector<long long>(static_cast<size_t>(n) + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][static_cast<size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            long long without = p[static_cast<size_t>(m)][static_cast<size_t>(k - 1)];
            long long with = (m >= k) ? p[static_cast<size_t>(m - k)][static_cast<size_t>(k)] : 0;
            p[static_cast<size_t>(m)][static_cast<size_t>(k)] = without + with;
        }
    return p[static_cast<size_t>(n)][static_cast<size_t>(n)];
}

}  // namespace

TEST_CASE("partition validation and parsing") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("") == Partition());
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
    CHECK(Partition().size() == 0);
    CHECK(Partition().length() == 0);
}

TEST_CASE("enumeration in canonical order") {
    auto p1 = enumerate_partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == Partition({1}));
    auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({1, 1, 1}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({3}));
    CHECK(enumerate_partitions(5).size() == 7);
    CHECK(enumerate_partitions(8).size() == 22);
    for (int d = 0; d <= 12; ++d) {
        auto ps = enumerate_partitions(d);
        CHECK(static_cast<long long>(ps.size()) == partition_count_oracle(d));
        std::set<std::vector<int>> seen;
        for (size_t k = 0; k < ps.size(); ++k) {
            CHECK(ps[k].size() == d);
            CHECK(seen.insert(ps[k].parts()).second);  // each exactly once
            if (k > 0) CHECK(canonical_less(ps[k - 1], ps[k]));
        }
    }
    CHECK_THROWS_AS(enumerate_partitions(31), std::invalid_argument);
}

TEST_CASE("partition statistics") {
    PartitionStats s21 = partition_stats(Partition({2, 1}));
    CHECK(s21.z == 2);
    CHECK(s21.aut_order == 1);
    CHECK(s21.kappa == 0);
    CHECK(s21.n == 1);
    CHECK(std::multiset<int>(s21.hooks.begin(), s21.hooks.end()) == std::multiset<int>({3, 1, 1}));
    CHECK(s21.conjugate == Partition({2, 1}));

    PartitionStats s11 = partition_stats(Partition({1, 1}));
    CHECK(s11.z == 2);
    CHECK(s11.kappa == -2);
    PartitionStats s2 = partition_stats(Partition({2}));
    CHECK(s2.z == 2);
    CHECK(s2.kappa == 2);

    // hooks count = |mu|; conjugation is an involution; kappa flips sign
    for (int d = 1; d <= 10; ++d) {
        for (const Partition& mu : enumerate_partitions(d)) {
            PartitionStats st = partition_stats(mu);
            CHECK(static_cast<int>(st.hooks.size()) == d);
            CHECK(st.conjugate.conjugate() == mu);
            CHECK(partition_stats(st.conjugate).kappa == -st.kappa);
        }
    }
}

TEST_CASE("class sizes partition the group") {
    for (int d = 1; d <= 10; ++d) {
        Int total = 0;
        Int dfact = factorial(static_cast<unsigned long>(d));
        for (const Partition& mu : enumerate_partitions(d)) {
            Int z = partition_stats(mu).z;
            CHECK(dfact % z == 0);
            total += dfact / z;
        }
        CHECK(total == dfact);
    }
}

TEST_CASE("hook sum identities") {
    CHECK(hook_sum_identity_holds(Partition({2, 1})));
    CHECK(hook_sum_identity_holds(Partition({3, 1})));  // hooks {4,2,1,1}, sum 8 = 1 + 3 + 4
    CHECK(hook_sum_identity_holds(Partition({1})));
    for (int d = 0; d <= 12; ++d)
        for (const Partition& rho : enumerate_partitions(d)) CHECK(hook_sum_identity_holds(rho));
}

TEST_CASE("cut and join neighbors") {
    NeighborSet n21 = cut_join_neighbors(Partition({2, 1}));
    REQUIRE(n21.joins.size() == 1);
    CHECK(n21.joins[0].target == Partition({3}));
    CHECK(n21.joins[0].coeff == 2);
    REQUIRE(n21.cuts.size() == 1);
    CHECK(n21.cuts[0].target == Partition({1, 1, 1}));
    CHECK(n21.cuts[0].coeff == 2);

    NeighborSet n1 = cut_join_neighbors(Partition({1}));
    CHECK(n1.joins.empty());
    CHECK(n1.cuts.empty());

    NeighborSet n3 = cut_join_neighbors(Partition({3}));
    CHECK(n3.joins.empty());
    REQUIRE(n3.cuts.size() == 1);
    CHECK(n3.cuts[0].target == Partition({2, 1}));
    CHECK(n3.cuts[0].coeff == 3);

    // neighbors preserve the size; coefficients strictly positive
    for (int d = 1; d <= 8; ++d) {
        for (const Partition& mu : enumerate_partitions(d)) {
            NeighborSet ns = cut_join_neighbors(mu);
            for (const auto& e : ns.joins) {
                CHECK(e.target.size() == d);
                CHECK(e.coeff > 0);
                CHECK(e.target.length() == mu.length() - 1);
            }
            for (const auto& e : ns.cuts) {
                CHECK(e.target.size() == d);
                CHECK(e.coeff > 0);
                CHECK(e.target.length() == mu.length() + 1);
            }
        }
    }
}
