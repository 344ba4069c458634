#pragma once

#include <array>
#include <string>
#include <vector>

#include "chi3/matgroup.hpp"
#include "chi3/partition.hpp"
#include "chi3/rational.hpp"

namespace chi3 {

// One automorphism-group stratum of the non-hyperelliptic genus-3 locus.
struct StratumSpec {
  int index;
  std::string group_name;
  long expected_order;
  int expected_dim;  // dimension of the stratum in moduli
  std::vector<Mat3c> generators;
};

// The thirteen strata, indices 0..12.
const std::vector<StratumSpec>& strata();

// Closure of the i-th stratum's generators; validated against expected_order
// on first use and cached.
const FiniteGroup& stratum_group(int i);

// (k_0, ..., k_12): dimensions of the invariant subspaces of V_lambda.
std::array<Integer, 13> invariant_vector(const Partition& lambda);

// Euler characteristic of the weight-lambda local system on the
// non-hyperelliptic locus: k2 - k4 - k6 - k7 + k9 + k10 + k11 + k12.
Integer euler_m3_nonhyp(const Partition& lambda);

// The same number as the full sum over strata with the Euler numbers
// parameterized by the two undetermined values e0 and e8; independence of
// (e0, e8) is re-checked numerically by the tests.
Integer euler_m3_nonhyp_general(const Partition& lambda, const Integer& e0, const Integer& e8);

// Euler numbers (e_0, ..., e_12) of the strata for given free parameters.
std::array<Integer, 13> strata_euler_numbers(const Integer& e0, const Integer& e8);

}  // namespace chi3
