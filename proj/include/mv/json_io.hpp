#pragma once

#include <json.hpp>

#include "mv/characters.hpp"
#include "mv/kernel.hpp"
#include "mv/mv_series.hpp"
#include "mv/partition.hpp"

namespace mv {

using Json = nlohmann::ordered_json;

// Integers are JSON numbers when they fit 53 bits, decimal strings otherwise;
// rationals are always exact "num/den" strings.
Json json_int(const Int& v);

Json json_of(const Partition& mu);
Json json_of(const GaussianRational& c);
Json json_of(const TauPoly& p, int tau_cap = -1);
Json json_of(const LambdaSeries& s, int tau_cap = -1);
Json json_of(const CharacterTable& t);
Json json_of(const MVSeries& s);
Json json_of(const HodgePolynomial& h);
Json json_of(const KernelReport& k);
Json json_of(const VerifyReport& r);

}  // namespace mv
