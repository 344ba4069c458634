#include "chi3/matgroup.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chi3 {

std::pair<long, long> EigenvalueSystem::root_key(long n, long k) {
  if (n < 1) throw std::invalid_argument("root order must be positive");
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return {1, 0};
  long g = std::gcd(k, n);
  return {n / g, k / g};
}

void EigenvalueSystem::add(long n, long k, long multiplicity) {
  auto key = root_key(n, k);
  for (long i = 0; i < multiplicity; ++i) entries.push_back(key);
}

void EigenvalueSystem::normalize() { std::sort(entries.begin(), entries.end()); }

std::vector<Cyclotomic> EigenvalueSystem::values() const {
  std::vector<Cyclotomic> out;
  out.reserve(entries.size());
  for (const auto& [n, k] : entries) out.push_back(Cyclotomic::root_of_unity(n, k));
  return out;
}

Cyclotomic EigenvalueSystem::power_sum(long k) const {
  Cyclotomic acc(0);
  for (const auto& [n, e] : entries) {
    long j = (e * k) % n;
    if (j < 0) j += n;
    acc += Cyclotomic::root_of_unity(n, j);
  }
  return acc;
}

bool EigenvalueSystem::closed_under_inversion() const {
  std::vector<std::pair<long, long>> inverted;
  inverted.reserve(entries.size());
  for (const auto& [n, e] : entries) inverted.push_back(root_key(n, n - e));
  std::sort(inverted.begin(), inverted.end());
  std::vector<std::pair<long, long>> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  return inverted == sorted;
}

Mat3c identity3() {
  Mat3c m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Cyclotomic(i == j ? 1 : 0);
  return m;
}

bool is_identity3(const Mat3c& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(m(i, j) == Cyclotomic(i == j ? 1 : 0))) return false;
  return true;
}

Cyclotomic det3(const Mat3c& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

long common_conductor(const std::vector<Mat3c>& ms) {
  long l = 1;
  for (const Mat3c& m : ms)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) l = std::lcm(l, m(i, j).conductor());
  return l;
}

std::string matrix_key(const Mat3c& m, long conductor) {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // Promotion re-expresses every entry over the common field; rational
      // entries keep their unique conductor-1 form either way.
      Cyclotomic c = m(i, j).promoted(conductor);
      os << c.conductor();
      for (const auto& [e, v] : c.coefficients())
        os << ',' << e << ':' << v.get_num().get_str() << '/' << v.get_den().get_str();
      os << ';';
    }
  return os.str();
}

const std::map<EigenvalueSystem, long>& FiniteGroup::spectrum_classes() const {
  if (classes_.empty() && !elements.empty())
    for (const Mat3c& m : elements) classes_[eigenvalues_h1(m)]++;
  return classes_;
}

FiniteGroup generate_group(const std::vector<Mat3c>& generators, long order_cap, int label) {
  for (const Mat3c& g : generators)
    if (det3(g).is_zero()) throw std::invalid_argument("singular generator");

  FiniteGroup group;
  group.generators = generators;
  group.label = label;

  long conductor = common_conductor(generators);
  std::set<std::string> seen;
  std::deque<Mat3c> frontier;

  Mat3c id = identity3();
  seen.insert(matrix_key(id, conductor));
  group.elements.push_back(id);
  frontier.push_back(id);

  while (!frontier.empty()) {
    Mat3c cur = frontier.front();
    frontier.pop_front();
    for (const Mat3c& g : generators) {
      Mat3c next = cur * g;
      if (seen.insert(matrix_key(next, conductor)).second) {
        if (static_cast<long>(group.elements.size()) >= order_cap)
          throw std::runtime_error("group closure exceeds order cap " +
                                   std::to_string(order_cap));
        group.elements.push_back(next);
        frontier.push_back(next);
      }
    }
  }
  return group;
}

long element_order(const Mat3c& m, long cap) {
  Mat3c p = m;
  for (long n = 1; n <= cap; ++n) {
    if (is_identity3(p)) return n;
    p = p * m;
  }
  throw std::runtime_error("element order exceeds cap " + std::to_string(cap));
}

EigenvalueSystem eigenvalues_h1(const Mat3c& m) {
  long n = element_order(m);

  std::vector<Cyclotomic> traces(n);
  Mat3c p = identity3();
  for (long k = 0; k < n; ++k) {
    traces[k] = p(0, 0) + p(1, 1) + p(2, 2);
    p = p * m;
  }

  // Multiplicity of the eigenvalue zeta_n^j is the j-th discrete Fourier
  // coefficient of the trace sequence.
  EigenvalueSystem sys;
  long total = 0;
  Rational inv_n(1, n);
  for (long j = 0; j < n; ++j) {
    Cyclotomic acc(0);
    for (long k = 0; k < n; ++k) {
      long e = (-j * k) % n;
      if (e < 0) e += n;
      acc += traces[k] * Cyclotomic::root_of_unity(n, e);
    }
    acc *= Cyclotomic(inv_n);
    if (acc.is_zero()) continue;
    if (!acc.is_rational()) throw std::runtime_error("non-rational eigenvalue multiplicity");
    Rational mult = acc.rational_value();
    if (mult < 0 || mult.get_den() != 1)
      throw std::runtime_error("eigenvalue multiplicity is not a nonnegative integer");
    long mi = mult.get_num().get_si();
    sys.add(n, j, mi);
    sys.add(n, n - j, mi);  // the inverse eigenvalue, from the dual pairing on H^1
    total += mi;
  }
  if (total != 3) throw std::runtime_error("eigenvalue multiplicities do not sum to 3");
  sys.normalize();
  return sys;
}

}  // namespace chi3
