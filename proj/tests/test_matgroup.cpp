#include "chi3/matgroup.hpp"

#include <vector>

#include "doctest.h"

using namespace chi3;

namespace {

Mat3c diag(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c) {
  Mat3c m = identity3();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

Mat3c from_rows(std::initializer_list<std::initializer_list<Cyclotomic>> rows) {
  Mat3c m;
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Cyclotomic zeta(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

}  // namespace

TEST_CASE("element orders") {
  CHECK(element_order(identity3()) == 1);
  CHECK(element_order(diag(-1, 1, -1)) == 2);
  CHECK(element_order(diag(zeta(9, 2), zeta(9, 4), zeta(9))) == 9);
  CHECK(element_order(diag(zeta(3, 2), zeta(3), zeta(3))) == 3);
  Mat3c cyc = from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  CHECK(element_order(cyc) == 3);
  CHECK_THROWS(element_order(diag(2, 1, 1)));
}

TEST_CASE("group closure sizes") {
  CHECK(generate_group({}).order() == 1);
  CHECK(generate_group({diag(-1, 1, -1)}).order() == 2);
  CHECK(generate_group({diag(-1, 1, -1), diag(-1, -1, 1)}).order() == 4);

  // Signed permutation generators close to a group of order 24.
  Mat3c cyc = from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  Mat3c swp = from_rows({{1, 0, 0}, {0, 0, -1}, {0, 1, 0}});
  FiniteGroup s4 = generate_group({cyc, swp});
  CHECK(s4.order() == 24);

  // Every element has finite order and a root-of-unity determinant.
  for (const Mat3c& m : s4.elements) {
    long n = element_order(m);
    CHECK(n <= 24);
    CHECK(det3(m).pow(n * 2) == Cyclotomic(1));
  }

  CHECK_THROWS(generate_group({cyc, swp}, 10));
  CHECK_THROWS(generate_group({diag(0, 1, 1)}));
}

TEST_CASE("closure keys identify equal matrices across conductors") {
  // zeta_24^3 equals zeta_8; the two generators coincide as group elements.
  Mat3c a = diag(zeta(8), zeta(8, 7), 1);
  Mat3c b = diag(zeta(24, 3), zeta(24, 21), 1);
  long l = common_conductor({a, b});
  CHECK(matrix_key(a, l) == matrix_key(b, l));
  CHECK(generate_group({a, b}).order() == 8);
}

TEST_CASE("h1 eigenvalues") {
  EigenvalueSystem id = eigenvalues_h1(identity3());
  CHECK(id.entries == std::vector<std::pair<long, long>>(6, {1, 0}));

  EigenvalueSystem flip = eigenvalues_h1(diag(-1, 1, -1));
  CHECK(flip.entries.size() == 6);
  long minus = 0, plus = 0;
  for (auto [n, k] : flip.entries) (n == 2 ? minus : plus)++;
  CHECK(minus == 4);
  CHECK(plus == 2);

  // Non-diagonal order-3 rotation: eigenvalues 1, zeta_3, zeta_3^2.
  Mat3c cyc = from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  EigenvalueSystem rot = eigenvalues_h1(cyc);
  EigenvalueSystem expect;
  expect.add(1, 0, 2);
  expect.add(3, 1, 2);
  expect.add(3, 2, 2);
  expect.normalize();
  CHECK(rot == expect);

  EigenvalueSystem g3 = eigenvalues_h1(diag(zeta(3, 2), zeta(3), zeta(3)));
  EigenvalueSystem g3expect;
  g3expect.add(3, 1, 3);
  g3expect.add(3, 2, 3);
  g3expect.normalize();
  CHECK(g3 == g3expect);
}

TEST_CASE("spectrum consistency over a whole group") {
  Mat3c cyc = from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  Mat3c swp = from_rows({{1, 0, 0}, {0, 0, -1}, {0, 1, 0}});
  for (const Mat3c& m : generate_group({cyc, swp}).elements) {
    EigenvalueSystem es = eigenvalues_h1(m);
    CHECK(es.entries.size() == 6);
    CHECK(es.closed_under_inversion());
    Cyclotomic tr = m(0, 0) + m(1, 1) + m(2, 2);
    CHECK(es.power_sum(1) == tr + tr.conj());
    CHECK(es.power_sum(0) == Cyclotomic(6));
    CHECK(es.power_sum(-2) == es.power_sum(2));  // inversion symmetry
  }
}
