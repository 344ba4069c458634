#include "chi3/symplectic.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <utility>

namespace chi3 {

namespace {

// Integer coefficient sum of a Laurent polynomial (its value at all ones).
template <typename P>
Integer coefficient_sum(const P& poly) {
  Rational acc(0);
  for (const auto& [e, c] : poly.terms()) acc += c;
  if (acc.get_den() != 1) throw std::logic_error("non-integral coefficient sum");
  return acc.get_num();
}

}  // namespace

SpectrumSeries::SpectrumSeries(EigenvalueSystem es) : es_(std::move(es)) {
  h_.push_back(Cyclotomic(1));
  p_.push_back(Cyclotomic(static_cast<long>(es_.entries.size())));
}

Cyclotomic SpectrumSeries::h(long d) {
  if (d < 0) return Cyclotomic(0);
  while (static_cast<long>(h_.size()) <= d) {
    long m = static_cast<long>(h_.size());
    while (static_cast<long>(p_.size()) <= m) p_.push_back(es_.power_sum(p_.size()));
    Cyclotomic acc(0);
    for (long k = 1; k <= m; ++k) acc += p_[k] * h_[m - k];
    acc *= Cyclotomic(Rational(1, m));
    h_.push_back(acc);
  }
  return h_[d];
}

Cyclotomic symplectic_character(const Partition& lambda, SpectrumSeries& s) {
  std::array<std::array<Cyclotomic, 3>, 3> a;
  for (int i = 1; i <= 3; ++i) {
    long base = lambda.p[i - 1] - i;
    a[i - 1][0] = s.h(base + 1);
    a[i - 1][1] = s.h(base + 2) + s.h(base);
    a[i - 1][2] = s.h(base + 3) + s.h(base - 1);
  }
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Cyclotomic symplectic_character(const Partition& lambda, const EigenvalueSystem& es) {
  static std::map<EigenvalueSystem, SpectrumSeries> series;
  static std::map<std::pair<Partition, EigenvalueSystem>, Cyclotomic> cache;
  auto key = std::make_pair(lambda, es);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto [sit, inserted] = series.try_emplace(es, SpectrumSeries(es));
  Cyclotomic v = symplectic_character(lambda, sit->second);
  cache.emplace(std::move(key), v);
  return v;
}

Integer invariant_dimension(const Partition& lambda, const FiniteGroup& g) {
  // Elements sharing a spectrum share a character value.
  Cyclotomic acc(0);
  for (const auto& [es, count] : g.spectrum_classes())
    acc += Cyclotomic(Rational(count)) * symplectic_character(lambda, es);
  acc *= Cyclotomic(Rational(1, g.order()));

  if (!acc.is_rational()) throw std::runtime_error("invariant dimension is not rational");
  Rational r = acc.rational_value();
  if (r.get_den() != 1 || r < 0)
    throw std::runtime_error("invariant dimension is not a nonnegative integer: " +
                             lambda.str() + " -> " + r.get_str());
  return r.get_num();
}

namespace {

// det(x_i^{l_j} - x_i^{-l_j}) for three strictly decreasing exponents.
Poly3 alternant3(long l1, long l2, long l3) {
  static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                  {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  const long l[3] = {l1, l2, l3};
  Poly3 out;
  for (int pi = 0; pi < 6; ++pi) {
    int base = pi < 3 ? 1 : -1;
    for (int mask = 0; mask < 8; ++mask) {
      std::array<long, 3> e;
      int sign = base;
      for (int i = 0; i < 3; ++i) {
        long li = l[perms[pi][i]];
        if (mask & (1 << i)) {
          e[i] = -li;
          sign = -sign;
        } else {
          e[i] = li;
        }
      }
      out.add_term(e, Rational(sign));
    }
  }
  return out;
}

Poly2 alternant2(long l1, long l2) {
  const long l[2] = {l1, l2};
  Poly2 out;
  for (int pi = 0; pi < 2; ++pi) {
    int base = pi == 0 ? 1 : -1;
    for (int mask = 0; mask < 4; ++mask) {
      std::array<long, 2> e;
      int sign = base;
      for (int i = 0; i < 2; ++i) {
        long li = l[pi == 0 ? i : 1 - i];
        if (mask & (1 << i)) {
          e[i] = -li;
          sign = -sign;
        } else {
          e[i] = li;
        }
      }
      out.add_term(e, Rational(sign));
    }
  }
  return out;
}

}  // namespace

const Poly3& formal_character(const Partition& lambda) {
  static std::map<Partition, Poly3> cache;
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  Poly3 num = alternant3(lambda.p[0] + 3, lambda.p[1] + 2, lambda.p[2] + 1);
  static const Poly3 den = alternant3(3, 2, 1);
  Poly3 q = divide_exact(std::move(num), den);
  return cache.emplace(lambda, std::move(q)).first->second;
}

const Poly2& formal_character2(const Partition2& mu) {
  static std::map<Partition2, Poly2> cache;
  auto it = cache.find(mu);
  if (it != cache.end()) return it->second;
  Poly2 num = alternant2(mu.p[0] + 2, mu.p[1] + 1);
  static const Poly2 den = alternant2(2, 1);
  Poly2 q = divide_exact(std::move(num), den);
  return cache.emplace(mu, std::move(q)).first->second;
}

Poly1 formal_character1(long k) {
  Poly1 out;
  for (long e = k; e >= -k; e -= 2) out.add_term({e}, Rational(1));
  return out;
}

Poly3 formal_character_det(const Partition& lambda) {
  // h-series of the formal alphabet, by the same Newton recursion.
  long top = lambda.p[0] + 2;
  std::vector<Poly3> p(top + 1), h(top + 1);
  for (long k = 1; k <= top; ++k)
    for (int i = 0; i < 3; ++i) {
      std::array<long, 3> e{};
      e[i] = k;
      p[k].add_term(e, Rational(1));
      e[i] = -k;
      p[k].add_term(e, Rational(1));
    }
  h[0] = Poly3::one();
  for (long m = 1; m <= top; ++m) {
    Poly3 acc;
    for (long k = 1; k <= m; ++k) acc += p[k] * h[m - k];
    acc.scale(Rational(1, m));
    h[m] = std::move(acc);
  }
  auto J = [&](long d) { return d < 0 ? Poly3() : h[d]; };

  std::array<std::array<Poly3, 3>, 3> a;
  for (int i = 1; i <= 3; ++i) {
    long base = lambda.p[i - 1] - i;
    a[i - 1][0] = J(base + 1);
    a[i - 1][1] = J(base + 2) + J(base);
    a[i - 1][2] = J(base + 3) + J(base - 1);
  }
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Integer dim_sp6(const Partition& lambda) { return coefficient_sum(formal_character(lambda)); }

Integer dim_sp4(const Partition2& mu) { return coefficient_sum(formal_character2(mu)); }

Integer dim_sp2(long k) { return Integer(k + 1); }

}  // namespace chi3
