#pragma once

#include <map>
#include <string>
#include <vector>

#include "mv/rational.hpp"

namespace mv {

// Dense-exponent sparse multivariate polynomial over Rat in a fixed number of
// variables.  Small and exact; used by the tableau and Cauchy oracles.
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, Rat> terms;

    static MultiPoly zero(int nvars) { return {nvars, {}}; }
    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly variable(int nvars, int j, int power = 1);
    static MultiPoly power_sum(int nvars, int k);  // x_1^k + ... + x_n^k

    bool is_zero() const { return terms.empty(); }
    void add_term(std::vector<int> exps, const Rat& c);
    std::string str() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rat& s) const;
    bool operator==(const MultiPoly& o) const { return nvars == o.nvars && terms == o.terms; }
};

}  // namespace mv
