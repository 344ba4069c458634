#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chi3/partition.hpp"
#include "chi3/rational.hpp"

namespace chi3 {

// Raised when a value outside the built-in data is requested and no
// extension entry covers it.
class CoverageError : public std::runtime_error {
 public:
  explicit CoverageError(const std::string& message) : std::runtime_error(message) {}
};

// Euler characteristics on the hyperelliptic locus of genus 3.  Odd weights
// vanish identically.  Built-in even-weight data covers |lambda| <= 10 and
// the five high-weight reference rows; anything else needs an extension.
class H3Provider {
 public:
  H3Provider();  // loads the built-in rows

  // Exact-match override; extension files win over built-in data.
  void set_value(const Partition& lambda, const Integer& value);
  void load_extension(const std::string& path);

  bool covers(const Partition& lambda) const;
  Integer lookup(const Partition& lambda) const;  // throws CoverageError

 private:
  std::map<Partition, Integer> table_;
};

// Euler characteristics of genus-2 local systems.  Odd weights vanish; even
// weights come from the bootstrap solve or from extension files.
class M2Provider {
 public:
  M2Provider() = default;

  void set_value(const Partition2& mu, const Integer& value);
  void load_extension(const std::string& path);

  bool covers(const Partition2& mu) const;
  Integer lookup(const Partition2& mu) const;  // throws CoverageError

  const std::map<Partition2, Integer>& table() const { return table_; }

 private:
  std::map<Partition2, Integer> table_;
};

// Euler characteristic of the weight-k local system on the moduli of
// elliptic curves: 0 in odd weight; in even weight the generic stratum
// counts -1 with the two extra-automorphism points added back.
Integer euler_a1(long k);

// Full genus-3 moduli: non-hyperelliptic part plus hyperelliptic part.
Integer euler_m3(const Partition& lambda, const H3Provider& h3);

// Solves for the 21 genus-2 values of even weight <= 10 from anchor rows
// (lambda, e_c on the abelian threefold moduli) of weight <= 10, using a
// greedily chosen independent row subset and checking the held-out rows
// exactly.  reverse_scan reverses the greedy scan order; the solution must
// not depend on it.
M2Provider bootstrap_m2(const std::vector<std::pair<Partition, Integer>>& anchors,
                        bool reverse_scan = false);

// The default anchor rows: reference abelian-threefold values, |lambda| <= 10.
std::vector<std::pair<Partition, Integer>> default_m2_anchors();

}  // namespace chi3
