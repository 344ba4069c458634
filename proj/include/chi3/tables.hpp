#pragma once

#include <vector>

#include "chi3/partition.hpp"

namespace chi3 {

// Known Euler characteristics embedded as fixtures.  The even-weight genus-3
// rows double as built-in hyperelliptic data, and the abelian-threefold rows
// of weight at most 10 are the anchors for the genus-2 bootstrap.

struct M3Row {
  Partition lambda;
  long h3;   // hyperelliptic locus
  long m30;  // non-hyperelliptic (plane quartic) locus
  long m3;   // full moduli of smooth genus-3 curves
};

struct M3OddRow {
  Partition lambda;
  long m3;
};

struct HighWeightRow {
  Partition lambda;
  long h3;
  long m30;
  long m2_a1;  // genus-2 times elliptic stratum
  long a111;   // products of three elliptic curves
  long a3;     // total on the abelian threefold moduli
};

struct A3Row {
  Partition lambda;
  long a3;
};

// 38 even-weight rows, |lambda| <= 10.
const std::vector<M3Row>& reference_m3_even();

// 32 odd-weight rows, |lambda| <= 11.
const std::vector<M3OddRow>& reference_m3_odd();

// 5 rows of weight 40 or close to it, with the full stratum breakdown.
const std::vector<HighWeightRow>& reference_high_weight();

// 148 even-weight rows, |lambda| <= 18.
const std::vector<A3Row>& reference_a3();

}  // namespace chi3
