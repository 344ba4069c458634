#pragma once

#include "chi3/lowgenus.hpp"
#include "chi3/partition.hpp"
#include "chi3/rational.hpp"

namespace chi3 {

// Per-stratum contributions to e_c on the moduli of principally polarized
// abelian threefolds.  The Jacobian strata enter through the Torelli map:
// the non-hyperelliptic term is dropped in odd weight (degree-2 cover).
struct A3Breakdown {
  Integer m30_term;
  Integer h3_term;
  Integer kunneth_term;
  Integer a111_term;
  Integer total;
};

// Products of three elliptic curves, summed over the wreath decomposition.
Integer euler_a111(const Partition& lambda);

// Genus-2 Jacobian times elliptic curve, via the Sp(4) x Sp(2) branching.
Integer euler_kunneth(const Partition& lambda, const M2Provider& m2);

// The full assembly; coverage failures of individual terms are collected
// into a single CoverageError naming every missing table.
A3Breakdown euler_a3(const Partition& lambda, const H3Provider& h3, const M2Provider& m2);

}  // namespace chi3
