#include "doctest.h"
#include "mv/characters.hpp"
#include "mv/errors.hpp"

using namespace mv;

namespace {

// Hook length formula as an independent dimension oracle.
Int dimension_oracle(const Partition& nu) {
    PartitionStats st = partition_stats(nu);
    Int prod = 1;
    for (int h : st.hooks) prod *= h;
    Int dfact = factorial(static_cast<unsigned long>(nu.size()));
    REQUIRE(dfact % prod == 0);
    return dfact / prod;
}

}  // namespace

TEST_CASE("murnaghan nakayama hand values") {
    // trivial representation
    for (int d = 1; d <= 6; ++d)
        for (const Partition& mu : enumerate_partitions(d)) CHECK(mn_character(Partition({d}), mu) == 1);
    // sign representation: (-1)^(d - l(mu))
    for (int d = 1; d <= 6; ++d) {
        std::vector<int> ones(static_cast<size_t>(d), 1);
        Partition sign_label{std::vector<int>(ones)};
        for (const Partition& mu : enumerate_partitions(d)) {
            int s = ((d - mu.length()) % 2) ? -1 : 1;
            CHECK(mn_character(sign_label, mu) == s);
        }
    }
    // chi_(2,1): 2 on (1,1,1), 0 on (2,1), -1 on (3)
    CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(mn_character(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
    CHECK_THROWS_AS(mn_character(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("small tables by hand") {
    CharacterTable t1 = character_table(1);
    CHECK(t1.values[0][0] == 1);
    CharacterTable t2 = character_table(2);
    // canonical label order: (1,1) then (2)
    CHECK(t2.labels[0] == Partition({1, 1}));
    CHECK(t2.labels[1] == Partition({2}));
    CHECK(t2.value(Partition({2}), Partition({1, 1})) == 1);
    CHECK(t2.value(Partition({2}), Partition({2})) == 1);
    CHECK(t2.value(Partition({1, 1}), Partition({1, 1})) == 1);
    CHECK(t2.value(Partition({1, 1}), Partition({2})) == -1);
    CharacterTable t3 = character_table(3);
    CHECK(t3.value(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(t3.value(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(t3.value(Partition({2, 1}), Partition({3})) == -1);
}

TEST_CASE("serial and parallel tables agree") {
    for (int d : {4, 6, 7}) {
        CharacterTable a = character_table_serial(d);
        CharacterTable b = character_table(d, Exec::parallel);
        REQUIRE(a.labels.size() == b.labels.size());
        for (size_t v = 0; v < a.values.size(); ++v)
            for (size_t m = 0; m < a.values.size(); ++m) CHECK(a.values[v][m] == b.values[v][m]);
    }
}

TEST_CASE("orthogonality and dimensions") {
    for (int d = 1; d <= 6; ++d) {
        const CharacterTable& t = cached_character_table(d);  // ctor checks column orthogonality
        size_t n = t.labels.size();
        // row orthogonality: sum_mu chi chi' / z = delta
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = a; b < n; ++b) {
                Rat acc(0);
                for (size_t m = 0; m < n; ++m) {
                    Rat term(t.values[a][m] * t.values[b][m], partition_stats(t.labels[m]).z);
                    term.canonicalize();
                    acc += term;
                }
                CHECK(acc == Rat(a == b ? 1 : 0));
            }
        }
        // sum of squared dimensions = d!; dimensions match the hook formula
        Int sq = 0;
        for (size_t v = 0; v < n; ++v) {
            CHECK(t.dimension(static_cast<int>(v)) == dimension_oracle(t.labels[v]));
            sq += t.dimension(static_cast<int>(v)) * t.dimension(static_cast<int>(v));
        }
        CHECK(sq == factorial(static_cast<unsigned long>(d)));
    }
}

TEST_CASE("central characters") {
    // S_2 by hand
    CHECK(central_character(Partition({2}), Partition({2})) == 1);
    CHECK(central_character(Partition({1, 1}), Partition({2})) == -1);
    // identity class acts as 1
    for (int d = 1; d <= 6; ++d) {
        std::vector<int> ones(static_cast<size_t>(d), 1);
        Partition id{std::vector<int>(ones)};
        for (const Partition& nu : enumerate_partitions(d)) CHECK(central_character(nu, id) == 1);
    }
    // kappa = 2 f(transpositions), and integrality
    for (int d = 2; d <= 8; ++d) {
        std::vector<int> tr{2};
        for (int k = 0; k < d - 2; ++k) tr.push_back(1);
        Partition transpositions{std::vector<int>(tr)};
        for (const Partition& nu : enumerate_partitions(d)) {
            Rat f = central_character(nu, transpositions);
            CHECK(Rat(2) * f == Rat(static_cast<long>(partition_stats(nu).kappa)));
            for (const Partition& mu : enumerate_partitions(d))
                CHECK(central_character(nu, mu).get_den() == 1);
        }
    }
}
