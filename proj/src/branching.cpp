#include "chi3/branching.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "chi3/cyclotomic.hpp"

namespace chi3 {

namespace {

long integer_coefficient(const Rational& c, const char* where) {
  if (!is_integer(c))
    throw std::logic_error(std::string(where) + ": non-integer multiplicity " + c.get_str());
  return to_long(c);
}

// Subtracts m * chi_a(x_1) ... chi_a has support a, a-2, ..., -a with all
// coefficients 1, so products of them are subtracted by box enumeration.
void subtract_box3(Poly3& rem, long a, long b, long c, long m) {
  Rational mc(-m);
  for (long i = -a; i <= a; i += 2)
    for (long j = -b; j <= b; j += 2)
      for (long k = -c; k <= c; k += 2) rem.add_term({i, j, k}, mc);
}

void subtract_box2(Poly2& rem, long a, long b, long m) {
  Rational mc(-m);
  for (long i = -a; i <= a; i += 2)
    for (long j = -b; j <= b; j += 2) rem.add_term({i, j}, mc);
}

// Character value at the S3-transposition sector: the six eigenvalues are
// {y, 1/y, w, -w, 1/w, -1/w}, in which only even powers of w survive;
// returned in the variables (y, z) with z = w^2.
Poly2 transposition_sector(const Partition& lambda) {
  Poly2 in_w;
  for (const auto& [e, c] : formal_character(lambda).terms()) {
    Rational coeff = (e[2] % 2 == 0) ? c : Rational(-c);
    in_w.add_term({e[0], e[1] + e[2]}, coeff);
  }
  Poly2 in_z;
  for (const auto& [e, c] : in_w.terms()) {
    if (e[1] % 2 != 0)
      throw std::logic_error("transposition sector: odd power of w survived");
    in_z.add_term({e[0], e[1] / 2}, c);
  }
  return in_z;
}

// Character value at the S3-three-cycle sector: eigenvalues
// {u, ru, r^2 u, 1/u, 1/(ru), 1/(r^2 u)} with r a primitive cube root of
// unity; only exponents divisible by 3 survive; returned in v = u^3.
Poly1 three_cycle_sector(const Partition& lambda) {
  std::map<long, Cyclotomic> acc;
  const Cyclotomic r = Cyclotomic::root_of_unity(3);
  const std::array<Cyclotomic, 3> rpow = {Cyclotomic(1), r, r * r};
  for (const auto& [e, c] : formal_character(lambda).terms()) {
    long rexp = (((e[1] + 2 * e[2]) % 3) + 3) % 3;
    Cyclotomic term = rpow[rexp] * Cyclotomic(c);
    auto [it, inserted] = acc.emplace(e[0] + e[1] + e[2], term);
    if (!inserted) it->second += term;
  }
  Poly1 in_v;
  for (const auto& [n, c] : acc) {
    if (c.is_zero()) continue;
    if (((n % 3) + 3) % 3 != 0)
      throw std::logic_error("three-cycle sector: exponent not divisible by 3");
    if (!c.is_rational())
      throw std::logic_error("three-cycle sector: irrational coefficient");
    in_v.add_term({n / 3}, c.rational_value());
  }
  return in_v;
}

std::map<std::array<int, 2>, long> peel_products2(Poly2 rem, const char* where) {
  std::map<std::array<int, 2>, long> out;
  while (!rem.empty()) {
    const auto& [e, c] = rem.leading();
    if (e[0] < 0 || e[1] < 0)
      throw std::logic_error(std::string(where) + ": leading exponent not a corner");
    long m = integer_coefficient(c, where);
    out[{static_cast<int>(e[0]), static_cast<int>(e[1])}] = m;
    subtract_box2(rem, e[0], e[1], m);
  }
  return out;
}

std::map<int, long> peel_products1(Poly1 rem, const char* where) {
  std::map<int, long> out;
  while (!rem.empty()) {
    long a = rem.leading().first[0];
    if (a < 0) throw std::logic_error(std::string(where) + ": leading exponent not a corner");
    long m = integer_coefficient(rem.leading().second, where);
    out[static_cast<int>(a)] = m;
    Rational mc(-m);
    for (long i = -a; i <= a; i += 2) rem.add_term({i}, mc);
  }
  return out;
}

Integer class_dim_plain(int a, int b, int g) {
  return Integer(6) * (a + 1) * (b + 1) * (g + 1);
}
Integer class_dim_pair(int s, int r) { return Integer(3) * (s + 1) * (r + 1) * (r + 1); }
Integer class_dim_diag(int a) { return Integer(a + 1) * (a + 1) * (a + 1); }

}  // namespace

std::map<std::array<int, 3>, long> sp2_cubed_multiplicities(const Partition& lambda) {
  Poly3 rem = formal_character(lambda);
  std::map<std::array<int, 3>, long> n;
  while (!rem.empty()) {
    const auto& [e, c] = rem.leading();
    if (e[0] < 0 || e[1] < 0 || e[2] < 0)
      throw std::logic_error("sp2^3 peel: leading exponent not a corner");
    long m = integer_coefficient(c, "sp2^3 peel");
    if (m < 0) throw std::logic_error("sp2^3 peel: negative multiplicity");
    n[{static_cast<int>(e[0]), static_cast<int>(e[1]), static_cast<int>(e[2])}] = m;
    subtract_box3(rem, e[0], e[1], e[2], m);
  }
  return n;
}

WreathDecomposition restrict_wreath(const Partition& lambda) {
  std::map<std::array<int, 3>, long> n = sp2_cubed_multiplicities(lambda);

  // Fold to sorted keys, insisting on full S3-symmetry of the multiplicities.
  std::map<std::array<int, 3>, long> folded;
  for (const auto& [key, value] : n) {
    std::array<int, 3> sorted = key;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::array<int, 3> perm = sorted;
    do {
      auto it = n.find(perm);
      if (it == n.end() || it->second != value)
        throw std::logic_error("sp2^3 multiplicities not S3-symmetric at " + lambda.str());
    } while (std::prev_permutation(perm.begin(), perm.end()));
    folded[sorted] = value;
  }

  std::map<std::array<int, 2>, long> t = peel_products2(transposition_sector(lambda),
                                                        "transposition peel");
  std::map<int, long> s = peel_products1(three_cycle_sector(lambda), "three-cycle peel");

  // Every twisted-sector coefficient must sit over an identity-sector class.
  for (const auto& [key, value] : t) {
    if (value == 0) continue;
    std::array<int, 3> sorted = {key[0], key[1], key[1]};
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (!folded.count(sorted))
      throw std::logic_error("transposition sector value without identity-sector class");
  }
  for (const auto& [key, value] : s) {
    if (value == 0) continue;
    if (!folded.count({key, key, key}))
      throw std::logic_error("three-cycle sector value without identity-sector class");
  }

  auto t_at = [&t](int sing, int rep) {
    auto it = t.find({sing, rep});
    return it == t.end() ? 0L : it->second;
  };
  auto s_at = [&s](int a) {
    auto it = s.find(a);
    return it == s.end() ? 0L : it->second;
  };

  WreathDecomposition out;
  for (const auto& [key, value] : folded) {
    if (value == 0) continue;
    int a = key[0], b = key[1], g = key[2];
    if (a > b && b > g) {
      out.plain[key] = value;
    } else if (a == b && b == g) {
      // value = m+ + m- + 2 T'; three-cycle gives m+ + m- - T';
      // transposition gives m+ - m-.
      long sc = s_at(a);
      long tc = t_at(a, a);
      if ((value - sc) % 3 != 0)
        throw std::logic_error("wreath diagonal: sector mismatch mod 3 at " + lambda.str());
      long two_dim = (value - sc) / 3;
      long sum = value - 2 * two_dim;
      if ((sum + tc) % 2 != 0)
        throw std::logic_error("wreath diagonal: sector mismatch mod 2 at " + lambda.str());
      long plus = (sum + tc) / 2;
      long minus = sum - plus;
      if (two_dim < 0 || plus < 0 || minus < 0)
        throw std::logic_error("wreath diagonal: negative multiplicity at " + lambda.str());
      if (two_dim) out.diag_two[a] = two_dim;
      if (plus) out.diag_plus[a] = plus;
      if (minus) out.diag_minus[a] = minus;
    } else {
      // Exactly two indices equal; the singleton pairs with the sign.
      int rep = (a == b) ? a : b;
      int sing = (a == b) ? g : a;
      long tc = t_at(sing, rep);
      if ((value + tc) % 2 != 0)
        throw std::logic_error("wreath pair: sector mismatch mod 2 at " + lambda.str());
      long plus = (value + tc) / 2;
      long minus = value - plus;
      if (plus < 0 || minus < 0)
        throw std::logic_error("wreath pair: negative multiplicity at " + lambda.str());
      if (plus) out.pair_plus[{sing, rep}] = plus;
      if (minus) out.pair_minus[{sing, rep}] = minus;
    }
  }

  Integer total = 0;
  for (const auto& [k, v] : out.plain) total += class_dim_plain(k[0], k[1], k[2]) * v;
  for (const auto& [k, v] : out.pair_plus) total += class_dim_pair(k[0], k[1]) * v;
  for (const auto& [k, v] : out.pair_minus) total += class_dim_pair(k[0], k[1]) * v;
  for (const auto& [k, v] : out.diag_plus) total += class_dim_diag(k) * v;
  for (const auto& [k, v] : out.diag_minus) total += class_dim_diag(k) * v;
  for (const auto& [k, v] : out.diag_two) total += 2 * class_dim_diag(k) * v;
  if (total != dim_sp6(lambda))
    throw std::logic_error("wreath decomposition: dimension bookkeeping failed at " +
                           lambda.str());

  return out;
}

namespace {

// x3-degree first, then graded-lex on (x1, x2); begin() of a map under this
// order is the highest Sp(2)-weight, and within it the dominant Sp(4) corner.
struct SplitOrder {
  using Exp = std::array<long, 3>;
  bool operator()(const Exp& a, const Exp& b) const {
    if (a[2] != b[2]) return a[2] > b[2];
    long da = a[0] + a[1];
    long db = b[0] + b[1];
    if (da != db) return da > db;
    return a > b;
  }
};

}  // namespace

Sp4Sp2Decomposition restrict_sp4_sp2(const Partition& lambda) {
  Laurent<Rational, 3, SplitOrder> rem;
  for (const auto& [e, c] : formal_character(lambda).terms()) rem.add_term(e, c);

  Sp4Sp2Decomposition out;
  Integer total = 0;
  while (!rem.empty()) {
    const auto& [e, c] = rem.leading();
    if (e[2] < 0 || e[1] < 0 || e[0] < e[1])
      throw std::logic_error("sp4 x sp2 peel: leading term not dominant");
    long m = integer_coefficient(c, "sp4 x sp2 peel");
    if (m < 0) throw std::logic_error("sp4 x sp2 peel: negative multiplicity");
    Partition2 mu(static_cast<int>(e[0]), static_cast<int>(e[1]));
    int nu = static_cast<int>(e[2]);
    out.m[{mu, nu}] = m;
    total += dim_sp4(mu) * dim_sp2(nu) * m;
    for (const auto& [f, cf] : formal_character2(mu).terms()) {
      Rational mc = cf * (-m);
      for (long k = -nu; k <= nu; k += 2) rem.add_term({f[0], f[1], k}, mc);
    }
  }
  if (total != dim_sp6(lambda))
    throw std::logic_error("sp4 x sp2: dimension bookkeeping failed at " + lambda.str());
  return out;
}

const Poly3& elementary_sym(int d) {
  static const std::array<Poly3, 4> table = [] {
    std::array<Poly3, 4> e;
    e[0] = Poly3::one();
    const std::array<std::array<long, 3>, 6> alphabet = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}};
    for (const auto& a : alphabet)
      for (int k = 3; k >= 1; --k) e[k] += e[k - 1].shifted(a, Rational(1));
    return e;
  }();
  if (d < 0 || d > 3) throw std::invalid_argument("elementary_sym: index out of range");
  return table[d];
}

namespace {

Poly3 elementary_power_product(long i, long j, long k) {
  Poly3 out = Poly3::one();
  for (long c = 0; c < i; ++c) out *= elementary_sym(1);
  for (long c = 0; c < j; ++c) out *= elementary_sym(2);
  for (long c = 0; c < k; ++c) out *= elementary_sym(3);
  return out;
}

}  // namespace

Poly3 exterior_polynomial(const Partition& lambda) {
  Poly3 rem = formal_character(lambda);
  Poly3 result;
  while (!rem.empty()) {
    const auto& [e, c] = rem.leading();
    if (e[0] < e[1] || e[1] < e[2] || e[2] < 0)
      throw std::logic_error("exterior peel: leading weight not dominant");
    if (!is_integer(c))
      throw std::logic_error("exterior peel: non-integer coefficient " + c.get_str());
    long i = e[0] - e[1], j = e[1] - e[2], k = e[2];
    Rational coeff = c;
    result.add_term({i, j, k}, coeff);
    Poly3 prod = elementary_power_product(i, j, k);
    prod.scale(coeff);
    rem -= prod;
  }
  return result;
}

}  // namespace chi3
