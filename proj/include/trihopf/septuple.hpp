#pragma once

// Triangular septuples (G, W, A, Y, B, V, u): validation of every defining
// condition, and the construction pipeline for the Y = B = 0 stratum
// (modified supergroup algebra of (G, W, u) twisted by the bicharacter twist
// that carries the V-datum on A).

#include <string>
#include <vector>

#include "trihopf/constructions.hpp"

namespace trihopf {

struct Septuple {
  FiniteGroup group;
  GroupRep w;
  std::vector<int> a;                               // subgroup, as element indices
  std::optional<std::vector<int>> a_generators;     // cyclic decomposition of A, if given
  Mat y_basis;                                      // dim W x dim Y, columns span Y
  Mat b;                                            // dim Y x dim Y
  Bicharacter v_datum;                              // twist bicharacter on A; its skew form is the V class
  int v_dim = 1;
  int u = 0;
};

struct SeptupleCheck {
  std::string name;
  bool ok = true;
  std::string witness;
};

struct SeptupleReport {
  std::vector<SeptupleCheck> checks;

  bool valid() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const SeptupleCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }
};

namespace detail {

/// Matrix of rho(a) restricted to span(Y) in Y's basis, if Y is invariant.
inline std::optional<Mat> restrict_to(const Mat& rho, const Mat& y) {
  const Mat img = rho * y;
  Mat out(y.cols(), y.cols());
  for (int j = 0; j < y.cols(); ++j) {
    const auto coords = mat_solve(y, img.column(j));
    if (!coords) return std::nullopt;
    for (int i = 0; i < y.cols(); ++i) out(i, j) = (*coords)[i];
  }
  return out;
}

inline std::optional<AbelianSubgroup> septuple_subgroup(const Septuple& s) {
  try {
    if (s.a_generators) {
      auto a = AbelianSubgroup::from_generators(s.group, *s.a_generators);
      std::vector<int> sorted_a = s.a, sorted_gen = a.elements;
      std::sort(sorted_a.begin(), sorted_a.end());
      std::sort(sorted_gen.begin(), sorted_gen.end());
      if (sorted_a != sorted_gen) return std::nullopt;
      return a;
    }
    return AbelianSubgroup::decompose(s.group, s.a);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Checks every defining condition of a triangular septuple. The V-datum is
/// a bicharacter on the dual of A, so A must also be abelian with a cyclic
/// decomposition matching the bicharacter's factors.
inline SeptupleReport validate_septuple(const Septuple& s) {
  SeptupleReport rep;
  auto add = [&](std::string name, bool ok, std::string witness = {}) {
    rep.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(witness)});
  };
  const FiniteGroup& g = s.group;
  const int dim_w = s.w.degree;
  const int dim_y = s.y_basis.cols();

  add("W_over_G", s.w.group == g, "representation is over a different group");

  const bool a_in_range =
      std::all_of(s.a.begin(), s.a.end(), [&](int x) { return x >= 0 && x < g.order(); });
  const bool a_sub = a_in_range && g.is_subgroup(s.a);
  add("A_subgroup", a_sub, "A is not closed or misses the identity");

  const bool y_shape = s.y_basis.rows() == dim_w || dim_y == 0;
  const bool y_indep = y_shape && (dim_y == 0 || mat_rank(s.y_basis) == dim_y);
  add("Y_basis_independent", y_indep, "Y basis is not a linearly independent set in W");

  std::vector<std::optional<Mat>> restricted;
  bool y_inv = y_indep && a_sub && s.w.group == g;
  std::string y_witness;
  if (y_inv && dim_y > 0)
    for (int x : s.a) {
      restricted.push_back(detail::restrict_to(s.w(x), s.y_basis));
      if (!restricted.back()) {
        y_inv = false;
        y_witness = "rho(" + std::to_string(x) + ") moves Y";
        break;
      }
    }
  add("Y_A_invariant", y_inv, y_witness);

  const bool b_shape = s.b.rows() == dim_y && s.b.cols() == dim_y;
  add("B_symmetric", b_shape && s.b == s.b.transpose(), "B is not a symmetric dim Y x dim Y matrix");
  add("B_invertible", b_shape && (dim_y == 0 || mat_rank(s.b) == dim_y), "B is degenerate");
  bool b_inv = b_shape && y_inv;
  std::string b_witness = "B is not A-invariant";
  if (b_inv && dim_y > 0)
    for (std::size_t k = 0; k < restricted.size(); ++k) {
      const Mat& m = *restricted[k];
      if (!(m * s.b * m.transpose() == s.b)) {
        b_inv = false;
        b_witness = "rho(" + std::to_string(s.a[k]) + ") does not preserve B";
        break;
      }
    }
  add("B_A_invariant", b_inv, b_witness);

  add("V_dimension", static_cast<long>(s.v_dim) * s.v_dim == static_cast<long>(s.a.size()),
      "dim(V)^2 = " + std::to_string(static_cast<long>(s.v_dim) * s.v_dim) + " but |A| = " + std::to_string(s.a.size()));

  const auto sub = a_sub ? detail::septuple_subgroup(s) : std::nullopt;
  add("A_abelian_decomposition", sub.has_value() && sub->factors == s.v_datum.factors,
      "A has no cyclic decomposition matching the bicharacter factors");
  add("V_bicharacter", s.v_datum.is_bimultiplicative(), "V-datum is not bimultiplicative");
  add("V_nondegenerate_skew", s.v_datum.has_nondegenerate_skew(),
      "the skew form of the V-datum is degenerate");

  const bool u_range = s.u >= 0 && s.u < g.order();
  add("u_central", u_range && g.is_central(s.u), "u is not central");
  add("u_order_le_2", u_range && g.mul(s.u, s.u) == g.identity(), "u^2 != 1");
  bool minus = u_range && s.w.group == g;
  if (minus) {
    Mat m = Mat::identity(dim_w);
    for (int i = 0; i < dim_w; ++i) m(i, i) = -1;
    minus = s.w(s.u) == m;
  }
  add("u_acts_by_minus_one", minus, "rho_W(u) != -1");
  return rep;
}

/// H(G, W, A, 0, 0, V, u): the modified supergroup algebra of (G, W, u)
/// twisted by the bicharacter twist of the V-datum, with R = J_21^{-1} R_u J.
inline TriangularHopf septuple_pipeline(const Septuple& s) {
  if (s.y_basis.cols() != 0 || !s.b.is_zero())
    throw UnsupportedStratum("septuples with Y != 0 or B != 0 are not constructed (only the Y = B = 0 stratum)");
  const auto rep = validate_septuple(s);
  if (const auto* bad = rep.first_failure())
    throw SeptupleInvariantViolation(bad->name + ": " + bad->witness);
  auto base = modified_supergroup_algebra(s.group, s.w, s.u);
  const auto a = *detail::septuple_subgroup(s);
  const int ext = 1 << s.w.degree;
  std::vector<int> to_basis(s.group.order());
  for (int x = 0; x < s.group.order(); ++x) to_basis[x] = x * ext;
  const Tensor2 j = build_bicharacter_twist(a, s.v_datum, base.hopf.dim(), to_basis);
  auto tw = apply_twist(base.hopf, j, base.r);
  return {std::move(tw.hopf), std::move(*tw.r)};
}

}  // namespace trihopf
