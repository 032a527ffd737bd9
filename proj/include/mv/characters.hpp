#pragma once

#include <vector>

#include "mv/parallel.hpp"
#include "mv/partition.hpp"
#include "mv/rational.hpp"

namespace mv {

// Full character table of S_d.  Rows are irreducible labels, columns are
// conjugacy class labels, both in canonical partition order, so column 0 is
// the identity class (1^d) and dimension lookups are trivial.  Column
// orthogonality sum_nu chi_nu(mu) chi_nu(eta) = delta z_mu is checked on
// construction.
struct CharacterTable {
    int d = 0;
    std::vector<Partition> labels;
    std::vector<std::vector<Int>> values;  // values[nu][mu]

    int index_of(const Partition& p) const;
    const Int& value(int nu, int mu) const { return values[static_cast<size_t>(nu)][static_cast<size_t>(mu)]; }
    const Int& value(const Partition& nu, const Partition& mu) const;
    const Int& dimension(int nu) const { return values[static_cast<size_t>(nu)][0]; }
};

// Irreducible character chi_nu on the class of cycle type mu, by border-strip
// recursion with memoization on (remaining shape, remaining class parts);
// parts of mu are consumed largest-first.
Int mn_character(const Partition& nu, const Partition& mu);

CharacterTable character_table(int d, Exec how = Exec::parallel);
CharacterTable character_table_serial(int d);

// Process-wide cache keyed by d; returned reference stays valid forever.
const CharacterTable& cached_character_table(int d);

// Throws IdentityViolation if column orthogonality fails.
void check_column_orthogonality(const CharacterTable& t);

// Central character f_nu(mu) = (d!/z_mu) chi_nu(mu) / chi_nu(1^d).
Rat central_character(const Partition& nu, const Partition& mu);

}  // namespace mv
