#include "chi3/strata.hpp"

#include <map>
#include <stdexcept>

#include "chi3/symplectic.hpp"

namespace chi3 {

namespace {

Cyclotomic z(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

Mat3c diag(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c) {
  Mat3c m;
  m.setConstant(Cyclotomic(0));
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

Mat3c rows(std::initializer_list<std::initializer_list<Cyclotomic>> entries) {
  Mat3c m;
  int i = 0;
  for (const auto& row : entries) {
    int j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

std::vector<StratumSpec> build_strata() {
  std::vector<StratumSpec> out;

  Cyclotomic i4 = Cyclotomic::imaginary_unit();
  Cyclotomic half = Cyclotomic(Rational(1, 2));
  Cyclotomic inv_sqrt2 = Cyclotomic::sqrt2() * half;

  out.push_back({0, "1", 1, 6, {}});
  out.push_back({1, "Z/2", 2, 4, {diag(-1, 1, -1)}});
  out.push_back({2, "V4", 4, 3, {diag(-1, 1, -1), diag(-1, -1, 1)}});
  out.push_back({3, "Z/3", 3, 2, {diag(z(3, 2), z(3), z(3))}});

  Mat3c swap_neg = rows({{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}});
  out.push_back({4, "S3", 6, 2, {swap_neg, diag(1, z(3), z(3, 2))}});
  out.push_back({5, "D4", 8, 2, {swap_neg, diag(1, i4, -i4)}});
  out.push_back({6, "Z/6", 6, 1, {diag(-z(3, 2), z(3), -z(3))}});

  Mat3c quarter_turn = rows({{1, 0, 0}, {0, 0, -1}, {0, 1, 0}});
  out.push_back({7, "Gamma16", 16, 1, {diag(-1, 1, -1), diag(1, i4, -i4), quarter_turn}});

  Mat3c cycle = rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  out.push_back({8, "S4", 24, 1, {cycle, quarter_turn}});
  out.push_back({9, "Z/9", 9, 0, {diag(z(9, 2), z(9, 4), z(9))}});

  Mat3c g48a = rows({{z(3), 0, 0},
                     {0, inv_sqrt2 * z(8), inv_sqrt2 * z(8, 3)},
                     {0, inv_sqrt2 * z(8), inv_sqrt2 * z(8, 7)}});
  Mat3c g48b = rows({{-z(3, 2), 0, 0},
                     {0, inv_sqrt2 * z(8, 5), inv_sqrt2 * z(8)},
                     {0, inv_sqrt2 * z(8, 7), inv_sqrt2 * z(8, 7)}});
  out.push_back({10, "Gamma48", 48, 0, {g48a, g48b}});

  Mat3c g96 = rows({{0, 0, -i4}, {0, i4, 0}, {-1, 0, 0}});
  out.push_back({11, "Gamma96", 96, 0, {cycle, g96}});

  Mat3c g168 = diag(z(7), z(7, 4), z(7, 2));
  Mat3c s168;
  Cyclotomic scale = Cyclotomic(0) - Cyclotomic::sqrt_minus7();
  Cyclotomic inv_scale = scale.inverse();
  for (long i = 1; i <= 3; ++i)
    for (long j = 1; j <= 3; ++j) {
      long e = (2 * i * j) % 7;
      s168(i - 1, j - 1) = (z(7, e) - z(7, 7 - e)) * inv_scale;
    }
  out.push_back({12, "Gamma168", 168, 0, {g168, s168}});

  return out;
}

}  // namespace

const std::vector<StratumSpec>& strata() {
  static const std::vector<StratumSpec> data = build_strata();
  return data;
}

const FiniteGroup& stratum_group(int i) {
  static std::map<int, FiniteGroup> cache;
  auto it = cache.find(i);
  if (it != cache.end()) return it->second;
  const StratumSpec& spec = strata().at(i);
  FiniteGroup g = generate_group(spec.generators, 200, spec.index);
  if (g.order() != spec.expected_order)
    throw std::logic_error("stratum " + std::to_string(i) + " closed to order " +
                           std::to_string(g.order()) + ", expected " +
                           std::to_string(spec.expected_order));
  return cache.emplace(i, std::move(g)).first->second;
}

std::array<Integer, 13> invariant_vector(const Partition& lambda) {
  std::array<Integer, 13> k;
  for (int i = 0; i < 13; ++i) k[i] = invariant_dimension(lambda, stratum_group(i));
  return k;
}

Integer euler_m3_nonhyp(const Partition& lambda) {
  std::array<Integer, 13> k = invariant_vector(lambda);
  return k[2] - k[4] - k[6] - k[7] + k[9] + k[10] + k[11] + k[12];
}

std::array<Integer, 13> strata_euler_numbers(const Integer& e0, const Integer& e8) {
  std::array<Integer, 13> e;
  e[0] = e0;
  e[1] = -3 * e0;
  e[2] = 2 * e0 + e8 + 1;
  e[3] = 0;
  e[4] = -e8 - 1;
  e[5] = -e8;
  e[6] = -1;
  e[7] = -1;
  e[8] = e8;
  e[9] = 1;
  e[10] = 1;
  e[11] = 1;
  e[12] = 1;
  return e;
}

Integer euler_m3_nonhyp_general(const Partition& lambda, const Integer& e0, const Integer& e8) {
  std::array<Integer, 13> k = invariant_vector(lambda);
  std::array<Integer, 13> e = strata_euler_numbers(e0, e8);
  Integer acc = 0;
  for (int i = 0; i < 13; ++i) acc += e[i] * k[i];
  return acc;
}

}  // namespace chi3
