#include "chi3/branching.hpp"

#include <algorithm>
#include <array>

#include "chi3/partition.hpp"
#include "chi3/symplectic.hpp"
#include "doctest.h"

using namespace chi3;

namespace {

Poly3 poly_pow(const Poly3& base, long n) {
  Poly3 out = Poly3::one();
  for (long i = 0; i < n; ++i) out *= base;
  return out;
}

Integer sp4sp2_dimension(const Sp4Sp2Decomposition& d) {
  Integer total = 0;
  for (const auto& [key, m] : d.m) total += dim_sp4(key.first) * dim_sp2(key.second) * m;
  return total;
}

Integer wreath_dimension(const WreathDecomposition& d) {
  auto dn = [](int n) { return Integer(n + 1); };
  Integer total = 0;
  for (const auto& [k, v] : d.plain) total += 6 * dn(k[0]) * dn(k[1]) * dn(k[2]) * v;
  for (const auto& [k, v] : d.pair_plus) total += 3 * dn(k[0]) * dn(k[1]) * dn(k[1]) * v;
  for (const auto& [k, v] : d.pair_minus) total += 3 * dn(k[0]) * dn(k[1]) * dn(k[1]) * v;
  for (const auto& [k, v] : d.diag_plus) total += dn(k) * dn(k) * dn(k) * v;
  for (const auto& [k, v] : d.diag_minus) total += dn(k) * dn(k) * dn(k) * v;
  for (const auto& [k, v] : d.diag_two) total += 2 * dn(k) * dn(k) * dn(k) * v;
  return total;
}

std::size_t wreath_class_count(const WreathDecomposition& d) {
  return d.plain.size() + d.pair_plus.size() + d.pair_minus.size() + d.diag_plus.size() +
         d.diag_minus.size() + d.diag_two.size();
}

}  // namespace

TEST_CASE("sp4 x sp2 restriction of the smallest weights") {
  auto d0 = restrict_sp4_sp2(Partition(0, 0, 0));
  REQUIRE(d0.m.size() == 1);
  CHECK(d0.m.at({Partition2(0, 0), 0}) == 1);

  auto d1 = restrict_sp4_sp2(Partition(1, 0, 0));
  REQUIRE(d1.m.size() == 2);
  CHECK(d1.m.at({Partition2(1, 0), 0}) == 1);
  CHECK(d1.m.at({Partition2(0, 0), 1}) == 1);

  auto d2 = restrict_sp4_sp2(Partition(1, 1, 0));
  REQUIRE(d2.m.size() == 3);
  CHECK(d2.m.at({Partition2(1, 1), 0}) == 1);
  CHECK(d2.m.at({Partition2(1, 0), 1}) == 1);
  CHECK(d2.m.at({Partition2(0, 0), 0}) == 1);
}

TEST_CASE("sp4 x sp2 dimension bookkeeping and parity, weight at most 10") {
  for (const Partition& lam : partitions_up_to(10)) {
    CAPTURE(lam.str());
    auto d = restrict_sp4_sp2(lam);
    CHECK(sp4sp2_dimension(d) == dim_sp6(lam));
    for (const auto& [key, m] : d.m) {
      CHECK(m > 0);
      CHECK((key.first.weight() + key.second) % 2 == lam.weight() % 2);
      CHECK(key.first.weight() + key.second <= lam.weight());
    }
  }
}

TEST_CASE("sp2^3 multiplicities are S3-symmetric") {
  for (const Partition& lam : {Partition(3, 2, 1), Partition(4, 2, 0), Partition(5, 1, 1)}) {
    CAPTURE(lam.str());
    auto n = sp2_cubed_multiplicities(lam);
    for (const auto& [key, value] : n) {
      std::array<int, 3> perm = key;
      std::sort(perm.begin(), perm.end());
      do {
        auto it = n.find(perm);
        REQUIRE(it != n.end());
        CHECK(it->second == value);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("wreath restriction of the smallest weights") {
  auto d0 = restrict_wreath(Partition(0, 0, 0));
  CHECK(wreath_class_count(d0) == 1);
  CHECK(d0.diag_plus.at(0) == 1);

  // The standard representation restricts to the sign-free pair class.
  auto d1 = restrict_wreath(Partition(1, 0, 0));
  CHECK(wreath_class_count(d1) == 1);
  CHECK(d1.pair_plus.at({1, 0}) == 1);

  // Second exterior power minus the trivial summand.
  auto d2 = restrict_wreath(Partition(1, 1, 0));
  CHECK(wreath_class_count(d2) == 2);
  CHECK(d2.pair_minus.at({0, 1}) == 1);
  CHECK(d2.diag_two.at(0) == 1);

  // Third exterior power minus the standard summand.
  auto d3 = restrict_wreath(Partition(1, 1, 1));
  CHECK(wreath_class_count(d3) == 2);
  CHECK(d3.diag_minus.at(1) == 1);
  CHECK(d3.pair_minus.at({1, 0}) == 1);
}

TEST_CASE("wreath dimension bookkeeping, weight at most 10") {
  for (const Partition& lam : partitions_up_to(10)) {
    CAPTURE(lam.str());
    auto d = restrict_wreath(lam);
    CHECK(wreath_dimension(d) == dim_sp6(lam));
  }
}

TEST_CASE("exterior-power coordinates of the fundamental weights") {
  auto p1 = exterior_polynomial(Partition(1, 0, 0));
  CHECK(p1.size() == 1);
  CHECK(p1.coefficient({1, 0, 0}) == 1);

  auto p2 = exterior_polynomial(Partition(1, 1, 0));
  CHECK(p2.size() == 2);
  CHECK(p2.coefficient({0, 1, 0}) == 1);
  CHECK(p2.coefficient({0, 0, 0}) == -1);

  auto p3 = exterior_polynomial(Partition(1, 1, 1));
  CHECK(p3.size() == 2);
  CHECK(p3.coefficient({0, 0, 1}) == 1);
  CHECK(p3.coefficient({1, 0, 0}) == -1);
}

TEST_CASE("exterior polynomial round-trips through the formal character") {
  for (const Partition& lam : partitions_up_to(8)) {
    CAPTURE(lam.str());
    Poly3 p = exterior_polynomial(lam);
    Poly3 acc;
    for (const auto& [e, c] : p.terms()) {
      Poly3 term = poly_pow(elementary_sym(1), e[0]) * poly_pow(elementary_sym(2), e[1]) *
                   poly_pow(elementary_sym(3), e[2]);
      term.scale(c);
      acc += term;
    }
    CHECK(acc == formal_character(lam));
  }
}

TEST_CASE("elementary symmetric functions of the six-letter alphabet") {
  CHECK(elementary_sym(0) == Poly3::one());
  CHECK(elementary_sym(1).size() == 6);
  CHECK(elementary_sym(2).coefficient({0, 0, 0}) == 3);
  CHECK(elementary_sym(3).coefficient({1, 0, 0}) == 2);
  CHECK(elementary_sym(3).coefficient({1, 1, 1}) == 1);
}
