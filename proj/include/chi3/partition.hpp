// Partitions indexing irreducible symplectic representations:
// lambda_1 >= lambda_2 >= ... >= 0, at most 3 (genus 3), 2 (genus 2) or 1 (genus 1) parts.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chi3 {

struct Partition {
  std::array<int, 3> p{0, 0, 0};

  Partition() = default;
  Partition(int a, int b, int c) : p{a, b, c} {
    if (a < b || b < c || c < 0) throw std::invalid_argument("not a partition: " + str());
  }

  int weight() const { return p[0] + p[1] + p[2]; }
  bool even_weight() const { return weight() % 2 == 0; }
  int operator[](int i) const { return p[i]; }
  auto operator<=>(const Partition&) const = default;

  std::string str() const {
    return std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]);
  }
};

struct Partition2 {
  std::array<int, 2> p{0, 0};

  Partition2() = default;
  Partition2(int a, int b) : p{a, b} {
    if (a < b || b < 0) throw std::invalid_argument("not a partition: " + str());
  }

  int weight() const { return p[0] + p[1]; }
  int operator[](int i) const { return p[i]; }
  auto operator<=>(const Partition2&) const = default;

  std::string str() const { return std::to_string(p[0]) + "," + std::to_string(p[1]); }
};

// Partitions of weight w, heaviest first (reverse-lexicographic), as in the
// reference tables: (4,0,0), (3,1,0), (2,2,0), (2,1,1).
std::vector<Partition> partitions_of_weight(int w);

// All weights 0..max_weight, ordered by weight then reverse-lexicographically.
std::vector<Partition> partitions_up_to(int max_weight);

std::vector<Partition2> partitions2_of_weight(int w);

// Parses "a,b,c" (shorter forms are zero-padded on the right).
Partition parse_partition(const std::string& text);

inline std::vector<Partition> partitions_of_weight(int w) {
  std::vector<Partition> out;
  for (int a = w; 3 * a >= w; --a)
    for (int b = std::min(a, w - a); 2 * b >= w - a; --b) {
      int c = w - a - b;
      if (c <= b) out.emplace_back(a, b, c);
    }
  return out;
}

inline std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& l : partitions_of_weight(w)) out.push_back(l);
  return out;
}

inline std::vector<Partition2> partitions2_of_weight(int w) {
  std::vector<Partition2> out;
  for (int a = w; 2 * a >= w; --a) out.emplace_back(a, w - a);
  return out;
}

inline Partition parse_partition(const std::string& text) {
  std::array<int, 3> v{0, 0, 0};
  size_t pos = 0;
  int n = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (n >= 3 || part.empty()) throw std::invalid_argument("bad partition: " + text);
    size_t used = 0;
    int val = std::stoi(part, &used);
    if (used != part.size() || val < 0) throw std::invalid_argument("bad partition: " + text);
    v[n++] = val;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (n == 0) throw std::invalid_argument("bad partition: " + text);
  return Partition(v[0], v[1], v[2]);
}

}  // namespace chi3
