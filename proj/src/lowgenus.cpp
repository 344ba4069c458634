#include "chi3/lowgenus.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "chi3/a3.hpp"
#include "chi3/branching.hpp"
#include "chi3/strata.hpp"
#include "chi3/tables.hpp"

namespace chi3 {

namespace {

std::string trimmed(const std::string& s) {
  size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Reads `fields` comma-separated integers per line; '#' starts a comment.
std::vector<std::vector<Integer>> parse_extension(const std::string& path, size_t fields) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open extension file: " + path);
  std::vector<std::vector<Integer>> rows;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    std::vector<Integer> row;
    std::stringstream ss(line);
    std::string token;
    while (std::getline(ss, token, ',')) {
      token = trimmed(token);
      try {
        row.emplace_back(token, 10);
      } catch (const std::invalid_argument&) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": not an integer: " + token);
      }
    }
    if (row.size() != fields)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected " +
                               std::to_string(fields) + " comma-separated values");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

H3Provider::H3Provider() {
  for (const auto& row : reference_m3_even()) table_.emplace(row.lambda, row.h3);
  for (const auto& row : reference_high_weight()) table_.emplace(row.lambda, row.h3);
}

void H3Provider::set_value(const Partition& lambda, const Integer& value) {
  table_[lambda] = value;
}

void H3Provider::load_extension(const std::string& path) {
  for (const auto& row : parse_extension(path, 4))
    set_value(Partition(static_cast<int>(to_long(row[0])), static_cast<int>(to_long(row[1])),
                        static_cast<int>(to_long(row[2]))),
              row[3]);
}

bool H3Provider::covers(const Partition& lambda) const {
  return lambda.weight() % 2 == 1 || table_.count(lambda) > 0;
}

Integer H3Provider::lookup(const Partition& lambda) const {
  if (lambda.weight() % 2 == 1) return 0;
  auto it = table_.find(lambda);
  if (it == table_.end())
    throw CoverageError("hyperelliptic data unavailable for lambda=" + lambda.str() +
                        "; supply extension file (--h3-table)");
  return it->second;
}

void M2Provider::set_value(const Partition2& mu, const Integer& value) { table_[mu] = value; }

void M2Provider::load_extension(const std::string& path) {
  for (const auto& row : parse_extension(path, 3))
    set_value(Partition2(static_cast<int>(to_long(row[0])), static_cast<int>(to_long(row[1]))),
              row[2]);
}

bool M2Provider::covers(const Partition2& mu) const {
  return mu.weight() % 2 == 1 || table_.count(mu) > 0;
}

Integer M2Provider::lookup(const Partition2& mu) const {
  if (mu.weight() % 2 == 1) return 0;
  auto it = table_.find(mu);
  if (it == table_.end())
    throw CoverageError("genus-2 data unavailable for mu=" + mu.str() +
                        "; supply extension file (--m2-table) or run the bootstrap");
  return it->second;
}

Integer euler_a1(long k) {
  if (k < 0) throw std::invalid_argument("euler_a1: negative weight");
  if (k % 2 == 1) return 0;
  long fours = 0, sixes = 0;
  for (long j = 0; j <= k; ++j) {
    long r = k - 2 * j;
    if (r % 4 == 0) ++fours;
    if (r % 6 == 0) ++sixes;
  }
  return Integer(-(k + 1) + fours + sixes);
}

Integer euler_m3(const Partition& lambda, const H3Provider& h3) {
  return euler_m3_nonhyp(lambda) + h3.lookup(lambda);
}

std::vector<std::pair<Partition, Integer>> default_m2_anchors() {
  std::vector<std::pair<Partition, Integer>> anchors;
  for (const auto& row : reference_a3())
    if (row.lambda.weight() <= 10) anchors.emplace_back(row.lambda, row.a3);
  return anchors;
}

M2Provider bootstrap_m2(const std::vector<std::pair<Partition, Integer>>& anchors,
                        bool reverse_scan) {
  // Unknowns: genus-2 values of even weight <= 10.
  std::vector<Partition2> unknowns;
  std::map<Partition2, int> column;
  for (int w = 0; w <= 10; w += 2)
    for (const Partition2& mu : partitions2_of_weight(w)) {
      column.emplace(mu, static_cast<int>(unknowns.size()));
      unknowns.push_back(mu);
    }
  const int width = static_cast<int>(unknowns.size());

  H3Provider h3;
  using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
  using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

  std::vector<VecQ> rows;
  std::vector<Rational> rhs;
  for (const auto& [lambda, a3_value] : anchors) {
    if (lambda.weight() % 2 == 1 || lambda.weight() > 10) continue;
    VecQ row = VecQ::Zero(width);
    for (const auto& [key, m] : restrict_sp4_sp2(lambda).m) {
      Integer ea = euler_a1(key.second);
      if (ea == 0 || key.first.weight() % 2 == 1) continue;
      row[column.at(key.first)] += Rational(Integer(m) * ea);
    }
    Integer target = a3_value - euler_m3_nonhyp(lambda) - h3.lookup(lambda) -
                     euler_a111(lambda);
    rows.push_back(std::move(row));
    rhs.emplace_back(target);
  }
  if (static_cast<int>(rows.size()) < width)
    throw std::logic_error("bootstrap: fewer anchor rows than unknowns");

  // Greedy independent subset in scan order, chosen by exact rank tests.
  std::vector<int> order(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) order[i] = static_cast<int>(i);
  if (reverse_scan) std::reverse(order.begin(), order.end());

  std::vector<int> chosen;
  MatQ subset(width, width);
  for (int candidate : order) {
    if (static_cast<int>(chosen.size()) == width) break;
    int k = static_cast<int>(chosen.size());
    subset.row(k) = rows[candidate].transpose();
    Eigen::FullPivLU<MatQ> lu(subset.topRows(k + 1));
    if (lu.rank() == k + 1) chosen.push_back(candidate);
  }
  if (static_cast<int>(chosen.size()) < width)
    throw std::logic_error("bootstrap: anchor system is rank-deficient");

  MatQ a(width, width);
  VecQ b(width);
  for (int i = 0; i < width; ++i) {
    a.row(i) = rows[chosen[i]].transpose();
    b[i] = rhs[chosen[i]];
  }
  Eigen::FullPivLU<MatQ> lu(a);
  VecQ x = lu.solve(b);
  VecQ check = a * x;
  for (int i = 0; i < width; ++i)
    if (check[i] != b[i]) throw std::logic_error("bootstrap: solve failed");

  M2Provider m2;
  for (int i = 0; i < width; ++i) {
    if (!is_integer(x[i]))
      throw std::logic_error("bootstrap: non-integer value for mu=" + unknowns[i].str());
    m2.set_value(unknowns[i], Integer(x[i].get_num()));
  }

  // Every anchor row, chosen or held out, must be satisfied exactly.
  for (size_t i = 0; i < rows.size(); ++i) {
    Rational residual = -rhs[i];
    for (int j = 0; j < width; ++j) residual += rows[i][j] * x[j];
    if (residual != 0)
      throw std::logic_error("bootstrap: held-out anchor row not satisfied");
  }

  return m2;
}

}  // namespace chi3
