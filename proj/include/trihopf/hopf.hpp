#pragma once

// Axiom verification and structural analysis of HopfData: duality, the
// Jacobson radical, semisimplicity, the Chevalley property and the order of
// the antipode.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "trihopf/hopf_data.hpp"

namespace trihopf {

struct AxiomCheck {
  bool ok = true;
  std::vector<int> witness;  // basis indices of the first failure

  void fail(std::vector<int> w) {
    if (ok) {
      ok = false;
      witness = std::move(w);
    }
  }
};

struct AxiomReport {
  AxiomCheck grading;  // parity is respected (trivial in ordinary mode)
  AxiomCheck associativity;
  AxiomCheck unit;
  AxiomCheck coassociativity;
  AxiomCheck counit;
  AxiomCheck bialgebra;
  AxiomCheck antipode;

  bool all() const {
    return grading.ok && associativity.ok && unit.ok && coassociativity.ok && counit.ok && bialgebra.ok &&
           antipode.ok;
  }

  /// (name, check) pairs in a fixed order.
  std::vector<std::pair<std::string, const AxiomCheck*>> entries() const {
    return {{"grading", &grading},     {"associativity", &associativity},
            {"unit", &unit},           {"coassociativity", &coassociativity},
            {"counit", &counit},       {"bialgebra", &bialgebra},
            {"antipode", &antipode}};
  }
};

namespace detail {

inline bool vec_equal(std::span<const CycScalar> a, std::span<const CycScalar> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

inline void check_grading(const HopfData& h, AxiomCheck& out) {
  if (!h.is_super()) return;
  const int d = h.dim();
  for (int i = 0; i < d; ++i)
    if (!h.unit()[i].is_zero() && h.parity(i)) return out.fail({i});
  for (int i = 0; i < d; ++i)
    if (!h.counit()[i].is_zero() && h.parity(i)) return out.fail({i});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& t : h.product(i, j))
        if (!t.coeff.is_zero() && h.parity(t.index) != (h.parity(i) + h.parity(j)) % 2) return out.fail({i, j});
  for (int i = 0; i < d; ++i) {
    for (const auto& e : h.comult(i).nonzeros())
      if ((h.parity(e.i) + h.parity(e.j)) % 2 != h.parity(i)) return out.fail({i});
    for (int r = 0; r < d; ++r)
      if (!h.antipode()(r, i).is_zero() && h.parity(r) != h.parity(i)) return out.fail({i});
  }
}

}  // namespace detail

/// Exhaustive check of the (super) Hopf algebra axioms on basis tuples.
/// The witness of each failed axiom is the lexicographically first failing
/// tuple.
inline AxiomReport verify_hopf(const HopfData& h) {
  AxiomReport rep;
  const int d = h.dim();
  detail::check_grading(h, rep.grading);

  // (e_i e_j) e_k = e_i (e_j e_k)
  detail::SparseAccumulator acc(d);
  for (int i = 0; i < d && rep.associativity.ok; ++i)
    for (int j = 0; j < d && rep.associativity.ok; ++j)
      for (int k = 0; k < d; ++k) {
        for (const auto& t : h.product(i, j))
          for (const auto& s : h.product(t.index, k)) acc.add(s.index, t.coeff * s.coeff);
        for (const auto& t : h.product(j, k))
          for (const auto& s : h.product(i, t.index)) acc.add(s.index, -(t.coeff * s.coeff));
        if (!acc.take_is_zero()) {
          rep.associativity.fail({i, j, k});
          break;
        }
      }

  for (int i = 0; i < d; ++i) {
    const Vec e = basis_vector(d, i);
    if (!detail::vec_equal(multiply(h, h.unit(), e), e) || !detail::vec_equal(multiply(h, e, h.unit()), e)) {
      rep.unit.fail({i});
      break;
    }
  }

  for (int i = 0; i < d; ++i) {
    if (embed(h.comult(i), Slots::coproduct_left, h) != embed(h.comult(i), Slots::coproduct_right, h)) {
      rep.coassociativity.fail({i});
      break;
    }
  }

  for (int i = 0; i < d; ++i) {
    Vec left(d), right(d);
    for (const auto& e : h.comult(i).nonzeros()) {
      if (!h.counit()[e.i].is_zero()) left[e.j] += h.counit()[e.i] * *e.value;
      if (!h.counit()[e.j].is_zero()) right[e.i] += h.counit()[e.j] * *e.value;
    }
    const Vec ei = basis_vector(d, i);
    if (!detail::vec_equal(left, ei) || !detail::vec_equal(right, ei)) {
      rep.counit.fail({i});
      break;
    }
  }

  // Delta and epsilon are unital algebra maps.
  if (!(comultiply(h, h.unit()) == tensor2_unit(h)) || !apply_counit(h, h.unit()).is_one()) rep.bialgebra.fail({});
  std::vector<std::vector<Tensor2::Entry>> delta(d);
  for (int i = 0; i < d; ++i) delta[i] = h.comult(i).nonzeros();
  detail::SparseAccumulator acc2(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d && rep.bialgebra.ok; ++i)
    for (int j = 0; j < d; ++j) {
      CycScalar eps;
      for (const auto& t : h.product(i, j)) {
        if (!h.counit()[t.index].is_zero()) eps += t.coeff * h.counit()[t.index];
        for (const auto& e : delta[t.index]) acc2.add(static_cast<std::size_t>(e.i) * d + e.j, t.coeff * *e.value);
      }
      for (const auto& x : delta[i])
        for (const auto& y : delta[j]) {
          const auto& left = h.product(x.i, y.i);
          const auto& right = h.product(x.j, y.j);
          if (left.empty() || right.empty()) continue;
          CycScalar c = *x.value * *y.value;
          if (!(h.parity(x.j) && h.parity(y.i))) c = -c;
          for (const auto& l : left) {
            const CycScalar cl = c * l.coeff;
            for (const auto& r : right) acc2.add(static_cast<std::size_t>(l.index) * d + r.index, cl * r.coeff);
          }
        }
      const bool delta_ok = acc2.take_is_zero();
      const bool eps_ok = eps == h.counit()[i] * h.counit()[j];
      if (!delta_ok || !eps_ok) {
        rep.bialgebra.fail({i, j});
        break;
      }
    }

  // m(S (x) id) Delta = eta epsilon = m(id (x) S) Delta
  for (int i = 0; i < d; ++i) {
    Vec left(d), right(d);
    for (const auto& e : h.comult(i).nonzeros()) {
      const Vec se = scaled(h.antipode().column(e.i), *e.value);
      left = add(std::move(left), multiply(h, se, basis_vector(d, e.j)));
      const Vec sf = scaled(h.antipode().column(e.j), *e.value);
      right = add(std::move(right), multiply(h, basis_vector(d, e.i), sf));
    }
    const Vec expected = scaled(h.unit(), h.counit()[i]);
    if (!detail::vec_equal(left, expected) || !detail::vec_equal(right, expected)) {
      rep.antipode.fail({i});
      break;
    }
  }
  return rep;
}

/// flip(Delta(x)) = Delta(x) for every basis x; the flip is signed in super mode.
inline bool is_cocommutative(const HopfData& h) {
  for (int i = 0; i < h.dim(); ++i)
    if (!(flip(h.comult(i), h.koszul_parity()) == h.comult(i))) return false;
  return true;
}

inline bool is_commutative(const HopfData& h) {
  for (int i = 0; i < h.dim(); ++i)
    for (int j = i + 1; j < h.dim(); ++j)
      if (!(h.product(i, j) == h.product(j, i))) return false;
  return true;
}

/// The dual Hopf algebra in the dual basis: multiplication is the transpose
/// of Delta, comultiplication the transpose of m, S is transposed, and unit
/// and counit trade places.
inline HopfData dual_hopf(const HopfData& h) {
  const int d = h.dim();
  MultTable mult(static_cast<std::size_t>(d) * d);
  std::vector<Tensor2> comult(d, Tensor2(d));
  for (int k = 0; k < d; ++k)
    for (const auto& e : h.comult(k).nonzeros()) mult[static_cast<std::size_t>(e.i) * d + e.j].push_back({k, *e.value});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& t : h.product(i, j)) comult[t.index](i, j) += t.coeff;
  for (auto& terms : mult) std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  std::vector<int> parity(h.parity().begin(), h.parity().end());
  return HopfData(d, h.is_super(), std::move(parity), h.counit(), std::move(mult), h.unit(), std::move(comult),
                  h.antipode().transpose());
}

/// The same Hopf algebra in a new basis; column k of `p` is the k-th new
/// basis vector in old coordinates. Columns must be parity-homogeneous.
inline HopfData change_basis(const HopfData& h, const Mat& p) {
  const int d = h.dim();
  if (p.rows() != d || p.cols() != d) throw ShapeError("change_basis: matrix shape");
  const Mat q = mat_inverse(p);
  std::vector<Vec> cols;
  for (int k = 0; k < d; ++k) cols.push_back(p.column(k));
  std::vector<int> parity(d, 0);
  for (int k = 0; k < d; ++k) {
    int seen = -1;
    for (int i = 0; i < d; ++i) {
      if (cols[k][i].is_zero()) continue;
      const int pi = h.parity(i);
      if (seen >= 0 && seen != pi) throw ShapeError("change_basis: column mixes parities");
      seen = pi;
    }
    parity[k] = std::max(seen, 0);
  }
  MultTable mult(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) mult[static_cast<std::size_t>(i) * d + j] = to_terms(q.apply(multiply(h, cols[i], cols[j])));
  std::vector<Tensor2> comult;
  for (int k = 0; k < d; ++k) {
    const Tensor2 old = comultiply(h, cols[k]);
    comult.push_back(Tensor2(d));
    // (q (x) q) applied to the coefficient array: q * C * q^T
    const Mat c = q * old.coefficient_matrix() * q.transpose();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) comult.back()(i, j) = c(i, j);
  }
  Vec counit(d);
  for (int k = 0; k < d; ++k) counit[k] = apply_counit(h, cols[k]);
  return HopfData(d, h.is_super(), std::move(parity), q.apply(h.unit()), std::move(mult), std::move(counit),
                  std::move(comult), q * h.antipode() * p);
}

/// T(i, j) = trace of left multiplication by e_i e_j.
inline Mat trace_form(const HopfData& h) {
  const int d = h.dim();
  std::vector<CycScalar> tr(d);
  for (int l = 0; l < d; ++l)
    for (int k = 0; k < d; ++k)
      for (const auto& t : h.product(l, k))
        if (t.index == k) tr[l] += t.coeff;
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& t : h.product(i, j))
        if (!tr[t.index].is_zero()) m(i, j) += t.coeff * tr[t.index];
  return m;
}

/// Basis of the Jacobson radical, computed as the kernel of the trace form
/// (valid in characteristic 0).
inline std::vector<Vec> jacobson_radical(const HopfData& h) { return mat_kernel(trace_form(h)); }

inline bool is_semisimple(const HopfData& h) { return jacobson_radical(h).empty(); }

struct IdealReport {
  bool counit_vanishes = true;
  bool antipode_stable = true;
  bool coideal = true;
  std::optional<int> witness;  // index into the subspace basis

  bool ok() const { return counit_vanishes && antipode_stable && coideal; }
};

/// Tests whether span(basis) is a Hopf ideal: epsilon vanishes on it, S maps
/// it into itself, and Delta maps it into I(x)H + H(x)I. The last two are
/// tested through the quotient map: functionals P annihilating I satisfy
/// ker(P (x) P) = I(x)H + H(x)I.
inline IdealReport hopf_ideal_report(const HopfData& h, const std::vector<Vec>& basis) {
  IdealReport rep;
  const int d = h.dim();
  if (basis.empty()) return rep;
  const auto annihilator = mat_kernel(Mat::from_rows(d, basis));
  const Mat p = annihilator.empty() ? Mat(0, d) : Mat::from_rows(d, annihilator);
  auto note = [&](bool& flag, int idx) {
    flag = false;
    if (!rep.witness || idx < *rep.witness) rep.witness = idx;
  };
  for (int r = 0; r < static_cast<int>(basis.size()); ++r) {
    const Vec& x = basis[r];
    if (!apply_counit(h, x).is_zero()) note(rep.counit_vanishes, r);
    if (p.rows() == 0) continue;
    if (!is_zero(p.apply(apply_antipode(h, x)))) note(rep.antipode_stable, r);
    const Mat image = p * comultiply(h, x).coefficient_matrix() * p.transpose();
    if (!image.is_zero()) note(rep.coideal, r);
  }
  return rep;
}

/// The radical is a Hopf ideal, i.e. H/Rad(H) is again a Hopf algebra.
inline bool is_chevalley(const HopfData& h) { return hopf_ideal_report(h, jacobson_radical(h)).ok(); }

/// Least k >= 1 with S^k = id.
inline int antipode_order(const HopfData& h, int bound = 16) {
  const Mat id = Mat::identity(h.dim());
  Mat power = h.antipode();
  for (int k = 1; k <= bound; ++k) {
    if (power == id) return k;
    power = power * h.antipode();
  }
  throw OrderNotFound("antipode order exceeds " + std::to_string(bound));
}

}  // namespace trihopf
