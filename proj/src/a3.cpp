#include "chi3/a3.hpp"

#include <string>
#include <vector>

#include "chi3/branching.hpp"
#include "chi3/strata.hpp"

namespace chi3 {

namespace {

// Polynomial binomials: arguments may be negative or small.
Integer choose2(const Integer& n) { return n * (n - 1) / 2; }
Integer choose3(const Integer& n) { return n * (n - 1) * (n - 2) / 6; }

}  // namespace

Integer euler_a111(const Partition& lambda) {
  WreathDecomposition d = restrict_wreath(lambda);
  auto e = [](int k) { return euler_a1(k); };
  Integer acc = 0;
  for (const auto& [k, v] : d.plain) acc += v * e(k[0]) * e(k[1]) * e(k[2]);
  for (const auto& [k, v] : d.pair_plus) acc += v * e(k[0]) * choose2(e(k[1]) + 1);
  for (const auto& [k, v] : d.pair_minus) acc += v * e(k[0]) * choose2(e(k[1]));
  for (const auto& [k, v] : d.diag_plus) acc += v * choose3(e(k) + 2);
  for (const auto& [k, v] : d.diag_minus) acc += v * choose3(e(k));
  for (const auto& [k, v] : d.diag_two)
    acc += v * (e(k) * choose2(e(k) + 1) - choose3(e(k) + 2));
  return acc;
}

Integer euler_kunneth(const Partition& lambda, const M2Provider& m2) {
  Sp4Sp2Decomposition d = restrict_sp4_sp2(lambda);

  // A vanishing elliptic factor kills the term before any genus-2 lookup.
  std::string missing;
  for (const auto& [key, m] : d.m) {
    if (euler_a1(key.second) == 0) continue;
    if (!m2.covers(key.first)) {
      if (!missing.empty()) missing += ", ";
      missing += key.first.str();
    }
  }
  if (!missing.empty())
    throw CoverageError("genus-2 data unavailable for mu in {" + missing +
                        "}; supply extension file (--m2-table) or run the bootstrap");

  Integer acc = 0;
  for (const auto& [key, m] : d.m) {
    Integer ea = euler_a1(key.second);
    if (ea == 0) continue;
    acc += m * m2.lookup(key.first) * ea;
  }
  return acc;
}

A3Breakdown euler_a3(const Partition& lambda, const H3Provider& h3, const M2Provider& m2) {
  A3Breakdown out;
  std::vector<std::string> missing;

  // The Torelli image of the non-hyperelliptic locus is a degree-2 quotient,
  // so its local system loses the odd-weight part entirely.
  out.m30_term = lambda.even_weight() ? euler_m3_nonhyp(lambda) : Integer(0);

  try {
    out.h3_term = h3.lookup(lambda);
  } catch (const CoverageError& err) {
    missing.emplace_back(err.what());
  }
  try {
    out.kunneth_term = euler_kunneth(lambda, m2);
  } catch (const CoverageError& err) {
    missing.emplace_back(err.what());
  }
  out.a111_term = euler_a111(lambda);

  if (!missing.empty()) {
    std::string all = missing[0];
    for (size_t i = 1; i < missing.size(); ++i) all += "; " + missing[i];
    throw CoverageError(all);
  }

  out.total = out.m30_term + out.h3_term + out.kunneth_term + out.a111_term;
  return out;
}

}  // namespace chi3
