#include <chi3/cyclotomic.hpp>

#include <Eigen/Dense>

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace chi3 {

namespace {

// Promotions beyond this are a bug in the caller: every pipeline in this
// project lives in conductors dividing lcm(7*4, 24, 9, 56) and the like.
constexpr long kConductorCap = 5040;

long phi_of(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

// Dense integer polynomials, ascending coefficients, used only to set up the
// per-conductor reduction tables.
using ZPoly = std::vector<Integer>;

// Exact quotient by a monic divisor.
ZPoly divide_monic(ZPoly num, const ZPoly& den) {
  ZPoly q(num.size() - den.size() + 1, Integer(0));
  for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
    Integer c = num[i + den.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const Integer& c : num)
    if (c != 0) throw std::logic_error("inexact polynomial division");
  return q;
}

const ZPoly& cyclotomic_polynomial(long n) {
  static std::map<long, ZPoly> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  ZPoly poly(n + 1, Integer(0));  // x^n - 1
  poly[0] = -1;
  poly[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  return memo.emplace(n, std::move(poly)).first->second;
}

struct ConductorData {
  long phi;
  // rows[e - phi] rewrites zeta^e, phi <= e < n, over the power basis.
  std::vector<std::vector<Integer>> rows;
};

const ConductorData& conductor_data(long n) {
  static std::map<long, ConductorData> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  ConductorData cd;
  cd.phi = phi_of(n);
  const ZPoly& cp = cyclotomic_polynomial(n);
  std::vector<Integer> head(cp.begin(), cp.begin() + cd.phi);  // x^phi = -head
  std::vector<std::vector<Integer>> rows;
  if (cd.phi < n) {
    std::vector<Integer> cur(cd.phi, Integer(0));
    for (long i = 0; i < cd.phi; ++i) cur[i] = -head[i];
    rows.push_back(cur);
    for (long e = cd.phi + 1; e < n; ++e) {
      std::vector<Integer> next(cd.phi, Integer(0));
      Integer top = cur[cd.phi - 1];
      for (long i = cd.phi - 1; i > 0; --i) next[i] = cur[i - 1];
      next[0] = 0;
      if (top != 0)
        for (long i = 0; i < cd.phi; ++i) next[i] -= top * head[i];
      rows.push_back(next);
      cur = std::move(next);
    }
  }
  cd.rows = std::move(rows);
  return memo.emplace(n, std::move(cd)).first->second;
}

}  // namespace

long euler_phi(long n) { return phi_of(n); }

Cyclotomic Cyclotomic::from_terms(long n, const std::map<long, Rational>& raw) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  if (n > kConductorCap) throw std::overflow_error("conductor cap exceeded: " + std::to_string(n));
  const ConductorData& cd = conductor_data(n);

  std::map<long, Rational> reduced;
  auto bump = [&reduced](long e, const Rational& v) {
    auto [it, inserted] = reduced.emplace(e, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) reduced.erase(it);
    } else if (it->second == 0) {
      reduced.erase(it);
    }
  };

  for (const auto& [e_raw, coeff] : raw) {
    if (coeff == 0) continue;
    long e = ((e_raw % n) + n) % n;
    if (e < cd.phi) {
      bump(e, coeff);
    } else {
      const auto& row = cd.rows[e - cd.phi];
      for (long i = 0; i < cd.phi; ++i)
        if (row[i] != 0) bump(i, coeff * Rational(row[i]));
    }
  }

  Cyclotomic out;
  if (reduced.empty() || (reduced.size() == 1 && reduced.begin()->first == 0)) {
    out.n_ = 1;
    if (!reduced.empty()) out.c_ = std::move(reduced);
  } else {
    out.n_ = n;
    out.c_ = std::move(reduced);
  }
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw std::invalid_argument("root order must be positive");
  return from_terms(n, {{k, Rational(1)}});
}

Cyclotomic Cyclotomic::sqrt2() { return root_of_unity(8, 1) + root_of_unity(8, 7); }

Cyclotomic Cyclotomic::imaginary_unit() { return root_of_unity(4, 1); }

Cyclotomic Cyclotomic::sqrt_minus7() {
  Cyclotomic g;
  for (long k = 1; k < 7; ++k) {
    bool square = (k == 1 || k == 2 || k == 4);
    Cyclotomic term = root_of_unity(7, k);
    g += square ? term : -term;
  }
  return g;
}

Rational Cyclotomic::rational_value() const {
  if (n_ != 1) throw std::domain_error("not a rational value: " + str());
  return c_.empty() ? Rational(0) : c_.begin()->second;
}

Cyclotomic Cyclotomic::promoted(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("promotion target is not a multiple");
  long f = m / n_;
  std::map<long, Rational> terms;
  for (const auto& [e, v] : c_) terms.emplace(e * f, v);
  return from_terms(m, terms);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& [e, v] : out.c_) v = -v;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  long m = std::lcm(n_, o.n_);
  Cyclotomic a = promoted(m), b = o.promoted(m);
  std::map<long, Rational> terms = std::move(a.c_);
  for (const auto& [e, v] : b.c_) {
    auto [it, inserted] = terms.emplace(e, v);
    if (!inserted) it->second += v;
  }
  *this = from_terms(m, terms);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  // Rational scaling avoids the promotion round-trip; it is the common case.
  if (o.n_ == 1) {
    Rational s = o.c_.empty() ? Rational(0) : o.c_.begin()->second;
    if (s == 0) {
      *this = Cyclotomic();
    } else {
      for (auto& [e, v] : c_) v *= s;
    }
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_.empty() ? Rational(0) : c_.begin()->second;
    *this = o;
    return *this *= Cyclotomic(s);
  }

  long m = std::lcm(n_, o.n_);
  Cyclotomic a = promoted(m), b = o.promoted(m);
  std::map<long, Rational> terms;
  for (const auto& [e1, v1] : a.c_)
    for (const auto& [e2, v2] : b.c_) {
      long e = (e1 + e2) % m;
      auto [it, inserted] = terms.emplace(e, v1 * v2);
      if (!inserted) it->second += v1 * v2;
    }
  *this = from_terms(m, terms);
  return *this;
}

Cyclotomic Cyclotomic::conj() const {
  std::map<long, Rational> terms;
  for (const auto& [e, v] : c_) terms.emplace((n_ - e) % n_, v);
  return from_terms(n_, terms);
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_.begin()->second);

  // Solve (this) * x = 1 over the power basis: column j of M is this * zeta^j.
  const long ph = conductor_data(n_).phi;
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> M(ph, ph);
  M.setConstant(Rational(0));
  for (long j = 0; j < ph; ++j) {
    std::map<long, Rational> shifted;
    for (const auto& [e, v] : c_) shifted.emplace(e + j, v);
    Cyclotomic col = from_terms(n_, shifted);
    // A rational column sits at conductor 1; its lone exponent 0 indexes the
    // same basis vector there as at conductor n_.
    for (const auto& [e, v] : col.c_) M(e, j) = v;
  }
  Eigen::Matrix<Rational, Eigen::Dynamic, 1> rhs(ph);
  rhs.setConstant(Rational(0));
  rhs(0) = 1;
  Eigen::FullPivLU<Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>> lu(M);
  Eigen::Matrix<Rational, Eigen::Dynamic, 1> x = lu.solve(rhs);

  std::map<long, Rational> terms;
  for (long e = 0; e < ph; ++e)
    if (x(e) != 0) terms.emplace(e, x(e));
  Cyclotomic result = from_terms(n_, terms);
  if (*this * result != Cyclotomic(1)) throw std::logic_error("inverse verification failed");
  return result;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  long m = std::lcm(n_, o.n_);
  return promoted(m).c_ == o.promoted(m).c_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  long m = std::lcm(a.n_, b.n_);
  const Cyclotomic pa = a.promoted(m), pb = b.promoted(m);
  auto ia = pa.c_.begin(), ib = pb.c_.begin();
  for (; ia != pa.c_.end() && ib != pb.c_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia != pa.c_.end()) return 1;
  if (ib != pb.c_.end()) return -1;
  return 0;
}

std::string Cyclotomic::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    if (!first) os << (v > 0 ? " + " : " - ");
    Rational av = first ? v : Rational(abs(v));
    first = false;
    if (e == 0) {
      os << av.get_str();
    } else {
      if (av != 1) os << av.get_str() << "*";
      os << "z" << n_;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace chi3
