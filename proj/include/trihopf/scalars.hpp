#pragma once

// Exact arithmetic in Q and in the cyclotomic fields Q(zeta_n).
//
// A CycScalar of order n is a polynomial in zeta_n of degree < phi(n),
// reduced modulo the n-th cyclotomic polynomial. Values that happen to be
// rational are always stored with order 1, so the common rational case never
// touches polynomial code. Mixed-order arithmetic promotes both operands to
// Q(zeta_lcm).

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <ostream>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trihopf/errors.hpp"

namespace trihopf {

using Rational = mpq_class;

/// Builds num/den from decimal strings, in lowest terms with den > 0.
inline Rational make_rational(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw FormatError("bad rational: " + num + "/" + den);
  if (d == 0) throw DivisionByZero();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZero();
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace detail {

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Coefficients of Phi_n, lowest degree first; monic of degree phi(n).
inline const std::vector<long>& cyclotomic_polynomial(int n) {
  thread_local std::unordered_map<int, std::vector<long>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& q = cyclotomic_polynomial(d);
    const int dq = static_cast<int>(q.size()) - 1;
    const int dp = static_cast<int>(p.size()) - 1;
    std::vector<long> quot(dp - dq + 1, 0);
    for (int k = dp; k >= dq; --k) {
      long c = p[k];
      quot[k - dq] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dq; ++j) p[k - dq + j] -= c * q[j];
    }
    p = std::move(quot);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

/// Reduces a polynomial in zeta_n (arbitrary length) modulo Phi_n.
inline std::vector<Rational> reduce_mod_cyclotomic(std::vector<Rational> poly, int n) {
  const auto& phi = cyclotomic_polynomial(n);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(poly.size()) - 1; k >= deg; --k) {
    if (sgn(poly[k]) == 0) continue;
    const Rational c = poly[k];
    for (int j = 0; j <= deg; ++j) {
      if (phi[j] != 0) poly[k - deg + j] -= c * phi[j];
    }
  }
  poly.resize(deg);
  return poly;
}

/// +1 or -1.
inline bool is_unit(const Rational& q) {
  return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0 && mpz_cmpabs_ui(q.get_num_mpz_t(), 1) == 0;
}

}  // namespace detail

class CycScalar {
 public:
  CycScalar() = default;
  CycScalar(long value) {  // NOLINT: implicit by design of numeric literals
    if (value != 0) q_.emplace(value);
  }
  CycScalar(Rational value) {  // NOLINT
    if (sgn(value) != 0) q_.emplace(std::move(value));
  }

  /// Takes a polynomial in zeta_order of any length and reduces it.
  static CycScalar from_polynomial(int order, std::vector<Rational> poly) {
    if (order < 1) throw ShapeError("cyclotomic order must be positive");
    if (order == 1) {
      Rational sum = 0;
      for (auto& c : poly) sum += c;
      return CycScalar(std::move(sum));
    }
    CycScalar out;
    out.order_ = order;
    out.c_ = detail::reduce_mod_cyclotomic(std::move(poly), order);
    out.c_.resize(detail::euler_phi(order));
    out.demote();
    return out;
  }

  /// Coefficients must already be the reduced residue (length phi(order)).
  static CycScalar from_coeffs(int order, std::vector<Rational> coeffs) {
    if (order < 1 || static_cast<int>(coeffs.size()) != detail::euler_phi(order))
      throw ShapeError("coefficient count does not match phi(order)");
    if (order == 1) return CycScalar(std::move(coeffs[0]));
    CycScalar out;
    out.order_ = order;
    out.c_ = std::move(coeffs);
    out.demote();
    return out;
  }

  int order() const { return order_; }
  /// phi(order) coefficients in the power basis of Q(zeta_order).
  std::vector<Rational> coeffs() const { return order_ == 1 ? std::vector<Rational>{rational()} : c_; }

  bool is_rational() const { return order_ == 1; }
  const Rational& rational() const {
    static const Rational zero;
    return q_ ? *q_ : zero;
  }

  bool is_zero() const { return order_ == 1 && (!q_ || sgn(*q_) == 0); }
  bool is_one() const { return order_ == 1 && q_ && *q_ == 1; }

  /// The same element written in Q(zeta_m); requires order() | m.
  CycScalar embed(int m) const {
    if (m % order_ != 0) throw ShapeError("embedding needs order | m");
    if (m == order_) return *this;
    CycScalar out;
    out.order_ = m;
    if (order_ == 1) {
      out.c_.resize(detail::euler_phi(m));
      out.c_[0] = rational();
      return out;
    }
    const int step = m / order_;
    std::vector<Rational> poly((c_.size() - 1) * step + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) poly[k * step] = c_[k];
    out.c_ = detail::reduce_mod_cyclotomic(std::move(poly), m);
    out.c_.resize(detail::euler_phi(m));
    return out;
  }

  /// Representation in the smallest cyclotomic field containing the value.
  CycScalar minimal() const;

  CycScalar operator-() const {
    CycScalar out = *this;
    if (out.q_) *out.q_ = -*out.q_;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  CycScalar& operator+=(const CycScalar& b) {
    if (b.order_ == 1) {
      if (!b.q_) return *this;
      if (order_ != 1)
        c_[0] += *b.q_;
      else if (q_)
        *q_ += *b.q_;
      else
        q_ = b.q_;
      return *this;
    }
    if (order_ != b.order_) {
      const int m = std::lcm(order_, b.order_);
      *this = embed(m);
      if (b.order_ != m) return *this += b.embed(m);
    }
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += b.c_[k];
    demote();
    return *this;
  }

  CycScalar& operator-=(const CycScalar& b) { return *this += -b; }

  CycScalar& operator*=(const CycScalar& b) {
    if (b.order_ == 1) {
      if (!b.q_) return *this = CycScalar();
      if (detail::is_unit(*b.q_)) {
        if (sgn(*b.q_) < 0) *this = -*this;
        return *this;
      }
      if (order_ == 1) {
        if (q_) *q_ *= *b.q_;
        return *this;
      }
      for (auto& c : c_) c *= *b.q_;
      demote();
      return *this;
    }
    if (order_ == 1) {
      if (!q_) return *this;
      if (detail::is_unit(*q_)) {
        const bool negate = sgn(*q_) < 0;
        *this = b;
        if (negate) *this = -*this;
        return *this;
      }
      const Rational s = *q_;
      *this = b;
      for (auto& c : c_) c *= s;
      demote();
      return *this;
    }
    const int m = std::lcm(order_, b.order_);
    const CycScalar x = embed(m);
    const CycScalar y = b.embed(m);
    std::vector<Rational> poly(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (sgn(x.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j)
        if (sgn(y.c_[j]) != 0) poly[i + j] += x.c_[i] * y.c_[j];
    }
    *this = from_polynomial(m, std::move(poly));
    return *this;
  }

  CycScalar inverse() const;

  CycScalar& operator/=(const CycScalar& b) { return *this *= b.inverse(); }

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

  friend bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.order_ == b.order_) return a.order_ == 1 ? a.rational() == b.rational() : a.c_ == b.c_;
    // Rationals are always order 1, so a mismatch with one rational side
    // means the other side is irrational.
    if (a.order_ == 1 || b.order_ == 1) return false;
    const int m = std::lcm(a.order_, b.order_);
    return a.embed(m).c_ == b.embed(m).c_;
  }

  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const CycScalar& a) { return os << a.str(); }

 private:
  void demote() {
    if (order_ == 1) return;
    for (std::size_t k = 1; k < c_.size(); ++k)
      if (sgn(c_[k]) != 0) return;
    q_.reset();
    if (sgn(c_[0]) != 0) q_.emplace(std::move(c_[0]));
    c_.clear();
    order_ = 1;
  }

  int order_ = 1;
  std::optional<Rational> q_;  // the value when order_ == 1; empty means zero
  std::vector<Rational> c_;    // phi(order_) coefficients when order_ > 1
};

/// zeta_n^k in reduced form.
inline CycScalar root_of_unity(int n, long k) {
  if (n < 1) throw ShapeError("root_of_unity needs n >= 1");
  long e = k % n;
  if (e < 0) e += n;
  if (n == 1) return CycScalar(1);
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1);
  poly[e] = 1;
  return CycScalar::from_polynomial(n, std::move(poly));
}

namespace detail {

/// Solves M x = b over Q by Gauss-Jordan; M is n x m row-major.
inline bool solve_rational(std::vector<Rational> m, int rows, int cols, std::vector<Rational> b,
                           std::vector<Rational>& x) {
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && sgn(m[p * cols + c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (int j = 0; j < cols; ++j) std::swap(m[p * cols + j], m[r * cols + j]);
      std::swap(b[p], b[r]);
    }
    const Rational piv = m[r * cols + c];
    for (int j = 0; j < cols; ++j) m[r * cols + j] /= piv;
    b[r] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i * cols + c]) == 0) continue;
      const Rational f = m[i * cols + c];
      for (int j = 0; j < cols; ++j) m[i * cols + j] -= f * m[r * cols + j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) return false;
  x.assign(cols, Rational(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return true;
}

}  // namespace detail

inline CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (order_ == 1) return CycScalar(Rational(1) / *q_);
  // Solve (this * y) = 1 for y; column j of the system is this * zeta^j.
  const int n = static_cast<int>(c_.size());
  std::vector<Rational> m(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> poly(c_.size() + j);
    for (int k = 0; k < n; ++k) poly[k + j] = c_[k];
    auto col = detail::reduce_mod_cyclotomic(std::move(poly), order_);
    for (int i = 0; i < n; ++i) m[i * n + j] = col[i];
  }
  std::vector<Rational> rhs(n);
  rhs[0] = 1;
  std::vector<Rational> y;
  if (!detail::solve_rational(std::move(m), n, n, std::move(rhs), y)) throw DivisionByZero();
  return from_coeffs(order_, std::move(y));
}

inline CycScalar CycScalar::minimal() const {
  if (order_ == 1) return *this;
  for (int m = 3; m < order_; ++m) {
    if (order_ % m != 0 || m % 4 == 2) continue;
    const int pm = detail::euler_phi(m);
    const int pn = static_cast<int>(c_.size());
    std::vector<Rational> e(static_cast<std::size_t>(pn) * pm);
    for (int j = 0; j < pm; ++j) {
      std::vector<Rational> basis(pm);
      basis[j] = 1;
      const auto img = from_coeffs(m, std::move(basis)).embed(order_);
      for (int i = 0; i < pn; ++i) e[i * pm + j] = img.c_[i];
    }
    std::vector<Rational> y;
    if (detail::solve_rational(std::move(e), pn, pm, c_, y)) return from_coeffs(m, std::move(y));
  }
  return *this;
}

inline std::string CycScalar::str() const {
  const CycScalar v = minimal();
  if (v.order_ == 1) return v.rational().get_str();
  std::string out;
  for (std::size_t k = 0; k < v.c_.size(); ++k) {
    const Rational& c = v.c_[k];
    if (sgn(c) == 0) continue;
    std::string term = c.get_str();
    if (k > 0) {
      std::string z = "z" + std::to_string(v.order_) + (k > 1 ? "^" + std::to_string(k) : "");
      term = c == 1 ? z : (c == -1 ? "-" + z : term + "*" + z);
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace trihopf
