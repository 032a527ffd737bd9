#pragma once

#include <optional>
#include <string>
#include <utility>

#include "mv/partition.hpp"

namespace mv {

// First failing coordinate of a verification: which coefficient differed and
// what the two sides were.  Enough to reproduce the failure by hand.
struct FailureLocator {
    std::string context;
    Partition mu;
    int lambda_exp = 0;
    int tau_exp = 0;
    std::string expected, actual;
};

struct VerifyReport {
    bool pass = true;
    std::optional<FailureLocator> first_failure;

    void fail(FailureLocator loc) {
        if (pass) {
            pass = false;
            first_failure = std::move(loc);
        }
    }
};

// Both hook-sum identities over every partition of size <= max_size.
VerifyReport verify_hook_identities(int max_size);

}  // namespace mv
