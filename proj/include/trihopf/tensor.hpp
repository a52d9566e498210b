#pragma once

// Elements of H (x) H and H (x) H (x) H in the product basis.

#include <algorithm>
#include <optional>
#include <span>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "trihopf/linalg.hpp"

namespace trihopf {

/// sum_{i,j} (*this)(i, j) e_i (x) e_j
class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

  int dim() const { return dim_; }
  CycScalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  const CycScalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

  std::span<const CycScalar> entries() const { return a_; }

  struct Entry {
    int i;
    int j;
    const CycScalar* value;
  };

  std::vector<Entry> nonzeros() const {
    std::vector<Entry> out;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (const auto& v = (*this)(i, j); !v.is_zero()) out.push_back({i, j, &v});
    return out;
  }

  /// a (x) b for two vectors.
  static Tensor2 outer(std::span<const CycScalar> a, std::span<const CycScalar> b) {
    if (a.size() != b.size()) throw ShapeError("outer product of mismatched vectors");
    Tensor2 t(static_cast<int>(a.size()));
    for (int i = 0; i < t.dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < t.dim_; ++j)
        if (!b[j].is_zero()) t(i, j) = a[i] * b[j];
    }
    return t;
  }

  /// Coefficient array as a d x d matrix.
  Mat coefficient_matrix() const {
    Mat m(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  Tensor2& operator+=(const Tensor2& b) {
    check(b);
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!b.a_[k].is_zero()) a_[k] += b.a_[k];
    return *this;
  }
  Tensor2& operator-=(const Tensor2& b) {
    check(b);
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!b.a_[k].is_zero()) a_[k] -= b.a_[k];
    return *this;
  }
  Tensor2& operator*=(const CycScalar& s) {
    for (auto& x : a_)
      if (!x.is_zero()) x *= s;
    return *this;
  }
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(Tensor2 a, const CycScalar& s) { return a *= s; }

  friend bool operator==(const Tensor2& a, const Tensor2& b) = default;

  bool is_zero() const { return trihopf::is_zero(a_); }

 private:
  void check(const Tensor2& b) const {
    if (b.dim_ != dim_) throw ShapeError("tensor dimension mismatch");
  }

  int dim_ = 0;
  std::vector<CycScalar> a_;
};

/// Sparse element of H (x) H (x) H.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int dim) : dim_(dim) {}

  int dim() const { return dim_; }

  /// Mutable access; creates a zero entry when absent.
  CycScalar& operator()(int i, int j, int k) { return a_[key(i, j, k)]; }

  CycScalar at(int i, int j, int k) const {
    auto it = a_.find(key(i, j, k));
    return it == a_.end() ? CycScalar(0) : it->second;
  }

  struct Entry {
    int i;
    int j;
    int k;
    const CycScalar* value;
  };

  /// Nonzero entries in lexicographic index order.
  std::vector<Entry> nonzeros() const {
    std::vector<std::pair<std::size_t, const CycScalar*>> keyed;
    for (const auto& [k, v] : a_)
      if (!v.is_zero()) keyed.emplace_back(k, &v);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Entry> out;
    out.reserve(keyed.size());
    const auto d = static_cast<std::size_t>(dim_);
    for (const auto& [k, v] : keyed)
      out.push_back({static_cast<int>(k / (d * d)), static_cast<int>(k / d % d), static_cast<int>(k % d), v});
    return out;
  }

  /// First index triple (lexicographic) where the two tensors differ.
  friend std::optional<std::tuple<int, int, int>> first_difference(const Tensor3& a, const Tensor3& b) {
    if (a.dim_ != b.dim_) throw ShapeError("tensor dimension mismatch");
    std::optional<std::size_t> best;
    auto scan = [&](const Tensor3& x, const Tensor3& y) {
      for (const auto& [k, v] : x.a_) {
        if (best && k >= *best) continue;
        auto it = y.a_.find(k);
        const bool same = it == y.a_.end() ? v.is_zero() : v == it->second;
        if (!same) best = k;
      }
    };
    scan(a, b);
    scan(b, a);
    if (!best) return std::nullopt;
    const auto d = static_cast<std::size_t>(a.dim_);
    return std::tuple{static_cast<int>(*best / (d * d)), static_cast<int>(*best / d % d), static_cast<int>(*best % d)};
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.dim_ == b.dim_ && !first_difference(a, b).has_value();
  }

 private:
  std::size_t key(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }

  int dim_ = 0;
  std::unordered_map<std::size_t, CycScalar> a_;
};

/// e_i (x) e_j -> e_j (x) e_i, times (-1)^{|i||j|} when a parity is supplied.
inline Tensor2 flip(const Tensor2& a, std::span<const int> parity = {}) {
  Tensor2 out(a.dim());
  for (const auto& e : a.nonzeros()) {
    const bool odd = !parity.empty() && parity[e.i] && parity[e.j];
    out(e.j, e.i) = odd ? -*e.value : *e.value;
  }
  return out;
}

}  // namespace trihopf
