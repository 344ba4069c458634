#include "chi3/cyclotomic.hpp"

#include <map>
#include <vector>

#include "doctest.h"

using chi3::Cyclotomic;
using chi3::Rational;

namespace {

Cyclotomic zeta(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

}  // namespace

TEST_CASE("euler phi") {
  CHECK(chi3::euler_phi(1) == 1);
  CHECK(chi3::euler_phi(2) == 1);
  CHECK(chi3::euler_phi(7) == 6);
  CHECK(chi3::euler_phi(8) == 4);
  CHECK(chi3::euler_phi(9) == 6);
  CHECK(chi3::euler_phi(12) == 4);
  CHECK(chi3::euler_phi(24) == 8);
  CHECK(chi3::euler_phi(56) == 24);
}

TEST_CASE("rational embedding and demotion") {
  Cyclotomic two(2);
  CHECK(two.is_rational());
  CHECK(two.rational_value() == Rational(2));
  CHECK(two.conductor() == 1);

  // zeta_3 + zeta_3^2 = -1 collapses to the rationals.
  Cyclotomic s = zeta(3) + zeta(3, 2);
  CHECK(s.is_rational());
  CHECK(s.rational_value() == Rational(-1));
  CHECK(s.conductor() == 1);

  // Sum over all primitive 7th roots is -1 as well.
  Cyclotomic t(0);
  for (long k = 1; k < 7; ++k) t += zeta(7, k);
  CHECK(t == Cyclotomic(-1));

  Cyclotomic i = Cyclotomic::imaginary_unit();
  CHECK(i == zeta(4));
  CHECK_FALSE(i.is_rational());
  CHECK_THROWS_AS((void)i.rational_value(), std::domain_error);
  CHECK((i * i).is_rational());
  CHECK((i * i).rational_value() == Rational(-1));
}

TEST_CASE("square roots") {
  Cyclotomic r2 = Cyclotomic::sqrt2();
  CHECK(r2 == zeta(8) + zeta(8, 7));
  CHECK(r2 * r2 == Cyclotomic(2));

  Cyclotomic rm7 = Cyclotomic::sqrt_minus7();
  CHECK(rm7 * rm7 == Cyclotomic(-7));
  // Quadratic residues mod 7 are 1, 2, 4.
  Cyclotomic gauss = zeta(7, 1) + zeta(7, 2) - zeta(7, 3) + zeta(7, 4) - zeta(7, 5) - zeta(7, 6);
  CHECK(rm7 == gauss);
}

TEST_CASE("equality across conductors") {
  CHECK(zeta(12).pow(3) == zeta(4));
  CHECK(zeta(12).pow(4) == zeta(3));
  CHECK(zeta(24).pow(3) == zeta(8));
  CHECK(zeta(2) == Cyclotomic(-1));
  CHECK(zeta(6) == Cyclotomic(1) + zeta(3));  // 1 + z3 = -z3^2 = z6
  CHECK_FALSE(zeta(8) == zeta(12));
}

TEST_CASE("conjugation") {
  for (long n : {3, 4, 7, 8, 9, 12, 24}) {
    Cyclotomic z = zeta(n);
    CHECK(z.conj() == zeta(n, n - 1));
    CHECK(z.conj().conj() == z);
  }
  Cyclotomic a = Cyclotomic(2) + zeta(8, 3) * Cyclotomic(Rational(1, 3));
  Cyclotomic b = zeta(8) - Cyclotomic(5);
  CHECK((a * b).conj() == a.conj() * b.conj());
  CHECK((a + b).conj() == a.conj() + b.conj());
  // Real elements are fixed.
  CHECK(Cyclotomic::sqrt2().conj() == Cyclotomic::sqrt2());
  // z * conj(z) is the squared modulus, rational and positive for roots of unity.
  CHECK(zeta(7, 3) * zeta(7, 3).conj() == Cyclotomic(1));
}

TEST_CASE("inverses") {
  CHECK(Cyclotomic(2).inverse() == Cyclotomic(Rational(1, 2)));
  CHECK(zeta(8).inverse() == zeta(8, 7));
  Cyclotomic r2 = Cyclotomic::sqrt2();
  CHECK(r2.inverse() == r2 * Cyclotomic(Rational(1, 2)));
  CHECK_THROWS_AS((void)Cyclotomic(0).inverse(), std::domain_error);

  std::vector<Cyclotomic> samples = {
      Cyclotomic(3),
      zeta(3) - Cyclotomic(2),
      zeta(7) + zeta(7, 6),
      Cyclotomic(1) + zeta(9, 2) * Cyclotomic(Rational(2, 5)),
      Cyclotomic::sqrt_minus7() + Cyclotomic(1),
      zeta(24, 5) - zeta(24, 7) + Cyclotomic(Rational(1, 2)),
  };
  for (const auto& s : samples) {
    CHECK(s * s.inverse() == Cyclotomic(1));
    CHECK(s / s == Cyclotomic(1));
  }
}

TEST_CASE("powers") {
  CHECK(zeta(8).pow(0) == Cyclotomic(1));
  CHECK(zeta(8).pow(8) == Cyclotomic(1));
  CHECK(zeta(8).pow(-1) == zeta(8, 7));
  CHECK(zeta(8).pow(-3) == zeta(8, 5));
  CHECK(Cyclotomic(Rational(2, 3)).pow(-2) == Cyclotomic(Rational(9, 4)));
  Cyclotomic a = Cyclotomic(1) + zeta(12, 5);
  CHECK(a.pow(5) == a * a * a * a * a);
  CHECK(a.pow(-5) * a.pow(5) == Cyclotomic(1));
}

TEST_CASE("field axioms on mixed-conductor samples") {
  std::vector<Cyclotomic> xs = {
      Cyclotomic(0),
      Cyclotomic(Rational(-3, 7)),
      zeta(3),
      zeta(4),
      zeta(7, 3) + Cyclotomic(1),
      zeta(8, 3),
      zeta(9, 4) - zeta(9),
      zeta(12, 7),
      zeta(24, 11) + Cyclotomic(Rational(1, 2)),
      zeta(56, 13),
  };
  for (const auto& a : xs)
    for (const auto& b : xs) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - b == -(b - a));
      for (const auto& c : xs) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
}

TEST_CASE("total order for container keys") {
  std::vector<Cyclotomic> xs = {
      Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1), zeta(3), zeta(3, 2),
      zeta(8),        zeta(8, 7),   Cyclotomic::sqrt2(), zeta(7, 2),
  };
  for (const auto& a : xs)
    for (const auto& b : xs) {
      int ab = Cyclotomic::compare(a, b);
      int ba = Cyclotomic::compare(b, a);
      CHECK(ab == -ba);
      CHECK((ab == 0) == (a == b));
    }

  std::map<Cyclotomic, int, chi3::CycCompare> m;
  for (const auto& a : xs) m[a]++;
  CHECK(m.size() == xs.size());
  CHECK(m.at(zeta(24).pow(3)) == 1);  // same key as zeta(8)
}

TEST_CASE("conductor cap") {
  CHECK_THROWS_AS((void)Cyclotomic::root_of_unity(6000), std::overflow_error);
}

TEST_CASE("printing") {
  CHECK(Cyclotomic(0).str() == "0");
  CHECK(Cyclotomic(Rational(-1, 2)).str() == "-1/2");
  CHECK(zeta(8).str() == "z8");
  CHECK((zeta(8, 3) * Cyclotomic(2)).str() == "2*z8^3");
}
