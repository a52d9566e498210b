#pragma once

// A finite-dimensional (super) Hopf algebra given by structure constants,
// together with the algebra operations on H, H (x) H and H (x) H (x) H that
// every verifier is built from.
//
// Super mode multiplies in tensor powers with the Koszul rule
//   (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trihopf/linalg.hpp"
#include "trihopf/tensor.hpp"

namespace trihopf {

/// One summand c * e_index of a product of basis elements.
struct Term {
  int index;
  CycScalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

using MultTable = std::vector<std::vector<Term>>;  // entry i*d+j holds e_i * e_j

/// Sparse terms of a dense coordinate vector.
inline std::vector<Term> to_terms(std::span<const CycScalar> v) {
  std::vector<Term> out;
  for (int k = 0; k < static_cast<int>(v.size()); ++k)
    if (!v[k].is_zero()) out.push_back({k, v[k]});
  return out;
}

class HopfData {
 public:
  HopfData() = default;

  HopfData(int dim, bool is_super, std::vector<int> parity, Vec unit, MultTable mult, Vec counit,
           std::vector<Tensor2> comult, Mat antipode)
      : dim_(dim),
        super_(is_super),
        parity_(std::move(parity)),
        unit_(std::move(unit)),
        mult_(std::move(mult)),
        counit_(std::move(counit)),
        comult_(std::move(comult)),
        antipode_(std::move(antipode)) {
    validate_shape();
  }

  int dim() const { return dim_; }
  bool is_super() const { return super_; }
  std::span<const int> parity() const { return parity_; }
  /// Parity vector for sign computations; empty in ordinary mode.
  std::span<const int> koszul_parity() const {
    return super_ ? std::span<const int>(parity_) : std::span<const int>();
  }
  int parity(int i) const { return super_ ? parity_[i] : 0; }
  const Vec& unit() const { return unit_; }
  const MultTable& mult() const { return mult_; }
  const std::vector<Term>& product(int i, int j) const { return mult_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Vec& counit() const { return counit_; }
  const Tensor2& comult(int i) const { return comult_[i]; }
  const std::vector<Tensor2>& comult() const { return comult_; }
  const Mat& antipode() const { return antipode_; }

  friend bool operator==(const HopfData&, const HopfData&) = default;

 private:
  void validate_shape() const {
    if (dim_ < 1) throw ShapeError("Hopf algebra dimension must be positive");
    const auto d = static_cast<std::size_t>(dim_);
    if (parity_.size() != d || unit_.size() != d || counit_.size() != d || comult_.size() != d ||
        mult_.size() != d * d || antipode_.rows() != dim_ || antipode_.cols() != dim_)
      throw ShapeError("Hopf data components disagree with dim");
    for (int p : parity_) {
      if (p != 0 && p != 1) throw ShapeError("parity entries must be 0 or 1");
      if (p != 0 && !super_) throw ShapeError("odd basis element in a non-super algebra");
    }
    for (const auto& terms : mult_)
      for (const auto& t : terms)
        if (t.index < 0 || t.index >= dim_) throw ShapeError("structure constant index out of range");
    for (const auto& t : comult_)
      if (t.dim() != dim_) throw ShapeError("comultiplication tensor has wrong dimension");
  }

  int dim_ = 0;
  bool super_ = false;
  std::vector<int> parity_;
  Vec unit_;
  MultTable mult_;
  Vec counit_;
  std::vector<Tensor2> comult_;
  Mat antipode_;
};

// ---------------------------------------------------------------------------
// Elements of H

inline Vec multiply(const HopfData& h, std::span<const CycScalar> a, std::span<const CycScalar> b) {
  Vec out(h.dim());
  for (int i = 0; i < h.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < h.dim(); ++j) {
      if (b[j].is_zero()) continue;
      const CycScalar ab = a[i] * b[j];
      for (const auto& t : h.product(i, j)) out[t.index] += ab * t.coeff;
    }
  }
  return out;
}

inline Vec basis_product(const HopfData& h, int i, int j) {
  Vec out(h.dim());
  for (const auto& t : h.product(i, j)) out[t.index] += t.coeff;
  return out;
}

inline CycScalar apply_counit(const HopfData& h, std::span<const CycScalar> x) {
  CycScalar s = 0;
  for (int i = 0; i < h.dim(); ++i)
    if (!x[i].is_zero() && !h.counit()[i].is_zero()) s += x[i] * h.counit()[i];
  return s;
}

inline Vec apply_antipode(const HopfData& h, std::span<const CycScalar> x) { return h.antipode().apply(x); }

inline Tensor2 comultiply(const HopfData& h, std::span<const CycScalar> x) {
  Tensor2 out(h.dim());
  for (int i = 0; i < h.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& e : h.comult(i).nonzeros()) out(e.i, e.j) += *e.value * x[i];
  }
  return out;
}

namespace detail {

/// Dense accumulator that remembers which slots were touched, so repeated
/// sparse sums can be checked and reset without scanning every slot.
class SparseAccumulator {
 public:
  explicit SparseAccumulator(std::size_t size) : v_(size), mark_(size, 0) {}

  void add(std::size_t k, const CycScalar& c) {
    if (!mark_[k]) {
      mark_[k] = 1;
      touched_.push_back(k);
    }
    v_[k] += c;
  }

  /// True iff every slot is zero; clears the accumulator either way.
  bool take_is_zero() {
    bool zero = true;
    for (std::size_t k : touched_) {
      if (!v_[k].is_zero()) zero = false;
      v_[k] = CycScalar();
      mark_[k] = 0;
    }
    touched_.clear();
    return zero;
  }

 private:
  Vec v_;
  std::vector<char> mark_;
  std::vector<std::size_t> touched_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// H (x) H

inline Tensor2 tensor2_unit(const HopfData& h) { return Tensor2::outer(h.unit(), h.unit()); }

inline Tensor2 tensor2_mul(const Tensor2& a, const Tensor2& b, const HopfData& h) {
  if (a.dim() != h.dim() || b.dim() != h.dim()) throw ShapeError("tensor2_mul: dimension mismatch");
  Tensor2 out(h.dim());
  const auto na = a.nonzeros();
  const auto nb = b.nonzeros();
  for (const auto& x : na)
    for (const auto& y : nb) {
      const auto& left = h.product(x.i, y.i);
      const auto& right = h.product(x.j, y.j);
      if (left.empty() || right.empty()) continue;
      CycScalar c = *x.value * *y.value;
      if (h.parity(x.j) && h.parity(y.i)) c = -c;
      for (const auto& l : left) {
        const CycScalar cl = c * l.coeff;
        for (const auto& r : right) out(l.index, r.index) += cl * r.coeff;
      }
    }
  return out;
}

namespace detail {

/// Inverse of `a` in a finite-dimensional algebra from its minimal
/// polynomial: if p(a) = sum_k c_k a^k = 0 with c_0 != 0, then
/// a^{-1} = -(1/c_0) sum_{k>=1} c_k a^{k-1}. A zero constant term means `a`
/// is a zero divisor.
template <class Mul>
std::optional<Vec> krylov_inverse(const Vec& one, const Vec& a, Mul mul) {
  const std::size_t n = one.size();
  std::vector<Vec> powers{one};
  std::vector<Vec> reduced;    // echelon rows, pivot normalized to 1
  std::vector<std::size_t> pivot;
  std::vector<Vec> combo;      // reduced[m] = sum_t combo[m][t] * powers[t]
  for (std::size_t k = 0;; ++k) {
    if (k > 0) powers.push_back(mul(powers.back(), a));
    Vec v = powers[k];
    Vec c(k + 1);
    c[k] = 1;
    for (std::size_t m = 0; m < reduced.size(); ++m) {
      if (v[pivot[m]].is_zero()) continue;
      const CycScalar f = v[pivot[m]];
      for (std::size_t t = 0; t < n; ++t)
        if (!reduced[m][t].is_zero()) v[t] -= f * reduced[m][t];
      for (std::size_t t = 0; t < combo[m].size(); ++t)
        if (!combo[m][t].is_zero()) c[t] -= f * combo[m][t];
    }
    std::size_t p = 0;
    while (p < n && v[p].is_zero()) ++p;
    if (p == n) {
      if (k == 0) return std::nullopt;  // the algebra is zero
      if (c[0].is_zero()) return std::nullopt;
      Vec inv(n);
      for (std::size_t t = 1; t <= k; ++t)
        if (!c[t].is_zero())
          for (std::size_t s = 0; s < n; ++s)
            if (!powers[t - 1][s].is_zero()) inv[s] += c[t] * powers[t - 1][s];
      return scaled(std::move(inv), -c[0].inverse());
    }
    const CycScalar norm = v[p].inverse();
    for (auto& x : v) x *= norm;
    for (auto& x : c) x *= norm;
    reduced.push_back(std::move(v));
    pivot.push_back(p);
    combo.push_back(std::move(c));
  }
}

inline Tensor2 tensor2_from_flat(int dim, const Vec& flat) {
  Tensor2 t(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t(i, j) = flat[static_cast<std::size_t>(i) * dim + j];
  return t;
}

inline Vec flat(const Tensor2& t) { return Vec(t.entries().begin(), t.entries().end()); }

}  // namespace detail

/// Two-sided inverse in the algebra H (x) H.
inline Tensor2 tensor2_inv(const Tensor2& a, const HopfData& h) {
  if (a.dim() != h.dim()) throw ShapeError("tensor2_inv: dimension mismatch");
  const int d = h.dim();
  auto inv = detail::krylov_inverse(detail::flat(tensor2_unit(h)), detail::flat(a), [&](const Vec& x, const Vec& y) {
    return detail::flat(tensor2_mul(detail::tensor2_from_flat(d, x), detail::tensor2_from_flat(d, y), h));
  });
  if (!inv) throw NotInvertible("element of H(x)H is not invertible");
  return detail::tensor2_from_flat(d, *inv);
}

/// Inverse of an element of H.
inline Vec element_inverse(const HopfData& h, const Vec& x) {
  auto inv = detail::krylov_inverse(h.unit(), x, [&](const Vec& a, const Vec& b) { return multiply(h, a, b); });
  if (!inv) throw NotInvertible("element of H is not invertible");
  return *inv;
}

// ---------------------------------------------------------------------------
// H (x) H (x) H

inline Tensor3 tensor3_mul(const Tensor3& a, const Tensor3& b, const HopfData& h) {
  if (a.dim() != h.dim() || b.dim() != h.dim()) throw ShapeError("tensor3_mul: dimension mismatch");
  Tensor3 out(h.dim());
  const auto na = a.nonzeros();
  const auto nb = b.nonzeros();
  for (const auto& x : na)
    for (const auto& y : nb) {
      const auto& p1 = h.product(x.i, y.i);
      const auto& p2 = h.product(x.j, y.j);
      const auto& p3 = h.product(x.k, y.k);
      if (p1.empty() || p2.empty() || p3.empty()) continue;
      CycScalar c = *x.value * *y.value;
      const int sign = ((h.parity(x.j) + h.parity(x.k)) * h.parity(y.i) + h.parity(x.k) * h.parity(y.j)) % 2;
      if (sign) c = -c;
      for (const auto& t1 : p1) {
        const CycScalar c1 = c * t1.coeff;
        for (const auto& t2 : p2) {
          const CycScalar c2 = c1 * t2.coeff;
          for (const auto& t3 : p3) out(t1.index, t2.index, t3.index) += c2 * t3.coeff;
        }
      }
    }
  return out;
}

enum class Slots {
  s13,             // a (x) 1 (x) b
  s23,             // 1 (x) a (x) b
  s12,             // a (x) b (x) 1
  coproduct_left,  // (Delta (x) id)
  coproduct_right  // (id (x) Delta)
};

inline Tensor3 embed(const Tensor2& a, Slots slots, const HopfData& h) {
  if (a.dim() != h.dim()) throw ShapeError("embed: dimension mismatch");
  Tensor3 out(h.dim());
  const auto unit = to_terms(h.unit());
  for (const auto& e : a.nonzeros()) {
    const CycScalar& v = *e.value;
    switch (slots) {
      case Slots::s13:
        for (const auto& u : unit) out(e.i, u.index, e.j) += v * u.coeff;
        break;
      case Slots::s23:
        for (const auto& u : unit) out(u.index, e.i, e.j) += v * u.coeff;
        break;
      case Slots::s12:
        for (const auto& u : unit) out(e.i, e.j, u.index) += v * u.coeff;
        break;
      case Slots::coproduct_left:
        for (const auto& c : h.comult(e.i).nonzeros()) out(c.i, c.j, e.j) += v * *c.value;
        break;
      case Slots::coproduct_right:
        for (const auto& c : h.comult(e.j).nonzeros()) out(e.i, c.i, c.j) += v * *c.value;
        break;
    }
  }
  return out;
}

}  // namespace trihopf
