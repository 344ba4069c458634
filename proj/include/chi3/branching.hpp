#pragma once

#include <array>
#include <map>
#include <utility>

#include "chi3/partition.hpp"
#include "chi3/symplectic.hpp"

namespace chi3 {

// Multiplicity of V_mu (x) V_nu in the restriction of V_lambda from Sp(6)
// to the block subgroup Sp(4) x Sp(2); nu is the one-part highest weight.
struct Sp4Sp2Decomposition {
  std::map<std::pair<Partition2, int>, long> m;
};

Sp4Sp2Decomposition restrict_sp4_sp2(const Partition& lambda);

// Restriction of V_lambda to the block subgroup Sp(2)^3 x| S3.  Irreducible
// classes are induced from Sp(2)^3-types (a,b,c) according to the S3-orbit
// of the triple, with d_n = n + 1:
//   plain:  R_{a,b,g} for a > b > g, of dimension 6 d_a d_b d_g
//   pair:   R+_{a,b}, R-_{a,b} for a != b (a the singleton, b the repeated
//           index), of dimension 3 d_a d_b^2
//   diag:   R+_a, R-_a of dimension d_a^3, and the two-dimensional-type
//           T'_a of dimension 2 d_a^3
struct WreathDecomposition {
  std::map<std::array<int, 3>, long> plain;      // keys strictly decreasing
  std::map<std::array<int, 2>, long> pair_plus;  // key {singleton, repeated}
  std::map<std::array<int, 2>, long> pair_minus;
  std::map<int, long> diag_plus;
  std::map<int, long> diag_minus;
  std::map<int, long> diag_two;
};

WreathDecomposition restrict_wreath(const Partition& lambda);

// Identity-sector multiplicities n_{a,b,c} of the Sp(2)^3 restriction,
// keyed by the raw exponent triple; symmetric under permuting the indices.
std::map<std::array<int, 3>, long> sp2_cubed_multiplicities(const Partition& lambda);

// Integer polynomial P(w1,w2,w3) with P(e1,e2,e3) equal to the formal
// character of lambda, where e_d is the d-th elementary symmetric function
// of the six-variable alphabet.  Independent cross-check of the character.
Poly3 exterior_polynomial(const Partition& lambda);

// e_d of the alphabet {x1,x2,x3,1/x1,1/x2,1/x3}, d = 0..3.
const Poly3& elementary_sym(int d);

}  // namespace chi3
