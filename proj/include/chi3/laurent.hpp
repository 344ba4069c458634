#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace chi3 {

// Orders exponent vectors by total degree, ties broken lexicographically,
// largest first. Used as the map comparator so begin() is the leading term.
template <int N>
struct GradedLexDesc {
  using Exp = std::array<long, N>;
  bool operator()(const Exp& a, const Exp& b) const {
    long da = 0, db = 0;
    for (int i = 0; i < N; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse Laurent polynomial in N variables. Coefficients of zero are never
// stored, so empty() means the polynomial is zero.
template <typename C, int N, typename Cmp = GradedLexDesc<N>>
class Laurent {
 public:
  using Exp = std::array<long, N>;
  using Map = std::map<Exp, C, Cmp>;

  Laurent() = default;

  static Laurent monomial(const Exp& e, C c = C(1)) {
    Laurent out;
    out.add_term(e, std::move(c));
    return out;
  }

  static Laurent one() { return monomial(Exp{}); }

  void add_term(const Exp& e, const C& c) {
    if (c == C(0)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  const std::pair<const Exp, C>& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.begin();
  }

  C coefficient(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e;
        for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent& scale(const C& c) {
    if (c == C(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  // *this *= c * x^e, done in place without reallocation of the tree shape.
  Laurent shifted(const Exp& e, const C& c) const {
    Laurent out;
    if (c == C(0)) return out;
    for (const auto& [ea, ca] : terms_) {
      Exp es;
      for (int i = 0; i < N; ++i) es[i] = ea[i] + e[i];
      out.terms_.emplace_hint(out.terms_.end(), es, ca * c);
    }
    return out;
  }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

  // Substitutes a value for each variable; V needs *, +=, and pow with
  // negative exponents.
  template <typename V>
  V eval(const std::array<V, N>& x) const {
    V acc(0);
    for (const auto& [e, c] : terms_) {
      V t(c);
      for (int i = 0; i < N; ++i)
        if (e[i] != 0) t = t * x[i].pow(e[i]);
      acc += t;
    }
    return acc;
  }

 private:
  Map terms_;
};

// Exact division: returns q with num == q * den, throwing if the division
// leaves a remainder or fails to terminate within max_steps quotient terms.
template <typename C, int N, typename Cmp>
Laurent<C, N, Cmp> divide_exact(Laurent<C, N, Cmp> num, const Laurent<C, N, Cmp>& den,
                                std::size_t max_steps = 1u << 22) {
  if (den.empty()) throw std::invalid_argument("division by zero polynomial");
  const auto& dlead = den.leading();
  Laurent<C, N, Cmp> q;
  std::size_t steps = 0;
  while (!num.empty()) {
    if (++steps > max_steps) throw std::logic_error("laurent division does not terminate");
    const auto& nlead = num.leading();
    typename Laurent<C, N, Cmp>::Exp e;
    for (int i = 0; i < N; ++i) e[i] = nlead.first[i] - dlead.first[i];
    C c = nlead.second / dlead.second;
    q.add_term(e, c);
    num -= den.shifted(e, c);
  }
  return q;
}

}  // namespace chi3
