#pragma once

#include <Eigen/Core>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chi3/cyclotomic.hpp"

namespace Eigen {

template <>
struct NumTraits<chi3::Cyclotomic> {
  using Real = chi3::Cyclotomic;
  using NonInteger = chi3::Cyclotomic;
  using Literal = chi3::Cyclotomic;
  using Nested = chi3::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 120,
  };
  static inline Real epsilon() { return chi3::Cyclotomic(0); }
  static inline Real dummy_precision() { return chi3::Cyclotomic(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace chi3 {

using Mat3c = Eigen::Matrix<Cyclotomic, 3, 3>;

// Multiset of six roots of unity, stored as primitive (order, exponent)
// pairs: (n, k) denotes zeta_n^k with 0 <= k < n and gcd(k, n) = 1.
// Represents the eigenvalues {a, b, c, 1/a, 1/b, 1/c} of a finite-order
// symplectic matrix acting on first cohomology.
struct EigenvalueSystem {
  std::vector<std::pair<long, long>> entries;

  static std::pair<long, long> root_key(long n, long k);

  void add(long n, long k, long multiplicity = 1);
  void normalize();  // sort entries; call after the last add

  std::vector<Cyclotomic> values() const;
  Cyclotomic power_sum(long k) const;  // sum of e^k over the multiset
  bool closed_under_inversion() const;

  auto operator<=>(const EigenvalueSystem&) const = default;
};

struct FiniteGroup {
  std::vector<Mat3c> elements;
  std::vector<Mat3c> generators;
  int label = -1;  // stratum index when applicable

  long order() const { return static_cast<long>(elements.size()); }

  // Element count per distinct H^1 spectrum; computed on first use.
  const std::map<EigenvalueSystem, long>& spectrum_classes() const;

 private:
  mutable std::map<EigenvalueSystem, long> classes_;
};

Mat3c identity3();
bool is_identity3(const Mat3c& m);
Cyclotomic det3(const Mat3c& m);

// Conductor of the field generated by all entries of all matrices.
long common_conductor(const std::vector<Mat3c>& ms);

// Canonical serialization of a matrix with entries promoted to the given
// conductor; equal matrices over that field always produce equal keys.
std::string matrix_key(const Mat3c& m, long conductor);

// Breadth-first closure of the generators under multiplication.
// Throws if the closure grows past order_cap.
FiniteGroup generate_group(const std::vector<Mat3c>& generators, long order_cap = 200,
                           int label = -1);

long element_order(const Mat3c& m, long cap = 200);

// The six H^1 eigenvalues of a finite-order matrix: the three eigenvalues
// of its action on differentials, extracted from traces of powers, together
// with their inverses.
EigenvalueSystem eigenvalues_h1(const Mat3c& m);

}  // namespace chi3
