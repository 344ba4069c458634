#pragma once

#include <vector>

#include "chi3/cyclotomic.hpp"
#include "chi3/laurent.hpp"
#include "chi3/matgroup.hpp"
#include "chi3/partition.hpp"
#include "chi3/rational.hpp"

namespace chi3 {

using Poly1 = Laurent<Rational, 1>;
using Poly2 = Laurent<Rational, 2>;
using Poly3 = Laurent<Rational, 3>;

// Power sums and complete homogeneous functions of a root-of-unity alphabet,
// extended lazily by the Newton recursion h_d = (1/d) sum_k p_k h_{d-k}.
class SpectrumSeries {
 public:
  explicit SpectrumSeries(EigenvalueSystem es);

  const EigenvalueSystem& spectrum() const { return es_; }
  Cyclotomic h(long d);  // 0 for d < 0, 1 for d = 0

 private:
  EigenvalueSystem es_;
  std::vector<Cyclotomic> h_;
  std::vector<Cyclotomic> p_;
};

// Irreducible Sp(6) character evaluated on an element with the given
// six-eigenvalue spectrum, as a determinant in complete homogeneous
// functions. The cached overload memoizes per (lambda, spectrum).
Cyclotomic symplectic_character(const Partition& lambda, SpectrumSeries& s);
Cyclotomic symplectic_character(const Partition& lambda, const EigenvalueSystem& es);

// dim of the invariant subspace of V_lambda under the group, as the average
// of character values; must come out a nonnegative integer.
Integer invariant_dimension(const Partition& lambda, const FiniteGroup& g);

// Formal Laurent characters on the alphabets {x_i^{+-1}}. Memoized.
const Poly3& formal_character(const Partition& lambda);
const Poly2& formal_character2(const Partition2& mu);
Poly1 formal_character1(long k);

// Same character through the h-determinant on the formal alphabet;
// an independent construction used for cross-checking.
Poly3 formal_character_det(const Partition& lambda);

Integer dim_sp6(const Partition& lambda);
Integer dim_sp4(const Partition2& mu);
Integer dim_sp2(long k);

}  // namespace chi3
