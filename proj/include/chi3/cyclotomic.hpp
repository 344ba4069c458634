// Exact arithmetic in the union of the cyclotomic fields Q(zeta_n).
//
// A value is stored at some conductor n as a rational combination of the
// power basis {zeta_n^k : 0 <= k < phi(n)}, fully reduced modulo the n-th
// cyclotomic polynomial. Rational values are always demoted to conductor 1,
// so a given (value, conductor) pair has exactly one representation and
// same-conductor equality is plain coefficient comparison. Mixed-conductor
// arithmetic promotes both operands to the least common conductor on demand.
#pragma once

#include <chi3/rational.hpp>

#include <map>
#include <string>

namespace chi3 {

class Cyclotomic {
 public:
  Cyclotomic() : n_(1) {}
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(const Integer& v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(const Rational& v) : n_(1) {
    if (v != 0) c_[0] = v;
  }

  // zeta_n^k, reduced to the canonical basis.
  static Cyclotomic root_of_unity(long n, long k = 1);
  static Cyclotomic sqrt2();           // zeta_8 + zeta_8^-1
  static Cyclotomic imaginary_unit();  // zeta_4
  // The quadratic Gauss sum sum_k (k|7) zeta_7^k; the branch with positive
  // imaginary part. Its square is -7 (asserted in tests); the order-168
  // stratum group closes only with this sign.
  static Cyclotomic sqrt_minus7();

  long conductor() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return n_ == 1; }
  Rational rational_value() const;  // throws domain_error unless rational

  // Galois conjugation zeta -> zeta^-1 (complex conjugation on the unit circle).
  Cyclotomic conj() const;
  Cyclotomic inverse() const;  // exact; throws on zero
  Cyclotomic pow(long k) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Total order on values (promotes to a common conductor first); this is a
  // container ordering, not a numeric one.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  // Exponent -> coefficient over the canonical basis at conductor().
  const std::map<long, Rational>& coefficients() const { return c_; }

  // Representation at a larger conductor m (n | m required).
  Cyclotomic promoted(long m) const;

  std::string str() const;

 private:
  long n_;
  std::map<long, Rational> c_;

  static Cyclotomic from_terms(long n, const std::map<long, Rational>& raw);
};

struct CycCompare {
  bool operator()(const Cyclotomic& a, const Cyclotomic& b) const {
    return Cyclotomic::compare(a, b) < 0;
  }
};

long euler_phi(long n);

}  // namespace chi3
