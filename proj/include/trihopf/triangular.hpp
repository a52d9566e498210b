#pragma once

// Quasitriangular and triangular structures: verification, the Drinfeld
// element, the order-two modification R_u, R-matrix rank and the structural
// checks every finite-dimensional triangular Hopf algebra must pass.

#include <optional>

#include "trihopf/hopf.hpp"

namespace trihopf {

/// An invertible R in H (x) H with its inverse.
class RMatrix {
 public:
  RMatrix(const HopfData& h, Tensor2 value) : value_(std::move(value)) {
    if (value_.dim() != h.dim()) throw ShapeError("R-matrix dimension differs from host");
    // For triangular R the inverse is R_21; fall back to the general inverse.
    Tensor2 r21 = flip(value_, h.koszul_parity());
    if (tensor2_mul(r21, value_, h) == tensor2_unit(h))
      inverse_ = std::move(r21);
    else
      inverse_ = tensor2_inv(value_, h);
  }

  const Tensor2& value() const { return value_; }
  const Tensor2& inverse() const { return inverse_; }

 private:
  Tensor2 value_;
  Tensor2 inverse_;
};

/// (Delta (x) id)(R) = R13 R23, (id (x) Delta)(R) = R13 R12 and
/// Delta^op(x) R = R Delta(x) for every basis x.
inline bool verify_quasitriangular(const HopfData& h, const RMatrix& r) {
  const Tensor2& rv = r.value();
  const Tensor3 r13 = embed(rv, Slots::s13, h);
  if (!(embed(rv, Slots::coproduct_left, h) == tensor3_mul(r13, embed(rv, Slots::s23, h), h))) return false;
  if (!(embed(rv, Slots::coproduct_right, h) == tensor3_mul(r13, embed(rv, Slots::s12, h), h))) return false;
  for (int i = 0; i < h.dim(); ++i) {
    const Tensor2& delta = h.comult(i);
    if (!(tensor2_mul(flip(delta, h.koszul_parity()), rv, h) == tensor2_mul(rv, delta, h))) return false;
  }
  return true;
}

/// Quasitriangular and R_21 R = 1 (x) 1.
inline bool verify_triangular(const HopfData& h, const RMatrix& r) {
  if (!(tensor2_mul(flip(r.value(), h.koszul_parity()), r.value(), h) == tensor2_unit(h))) return false;
  return verify_quasitriangular(h, r);
}

/// u = sum_i S(b_i) a_i for R = sum_i a_i (x) b_i.
inline Vec drinfeld_element(const HopfData& h, const RMatrix& r) {
  if (!verify_quasitriangular(h, r)) throw NotQuasitriangular("drinfeld_element needs a quasitriangular R");
  Vec u(h.dim());
  for (const auto& e : r.value().nonzeros()) {
    const Vec sb = scaled(h.antipode().column(e.j), *e.value);
    u = add(std::move(u), multiply(h, sb, basis_vector(h.dim(), e.i)));
  }
  return u;
}

/// R_u = 1/2 (1(x)1 + 1(x)u + u(x)1 - u(x)u) for a group-like u with u^2 = 1.
inline Tensor2 r_u(const HopfData& h, const Vec& u) {
  if (static_cast<int>(u.size()) != h.dim()) throw ShapeError("r_u: element has wrong length");
  if (!detail::vec_equal(multiply(h, u, u), h.unit())) throw InvalidDrinfeldElement("u^2 != 1");
  if (!(comultiply(h, u) == Tensor2::outer(u, u))) throw InvalidDrinfeldElement("u is not group-like");
  const Vec& one = h.unit();
  Tensor2 r = Tensor2::outer(one, one);
  r += Tensor2::outer(one, u);
  r += Tensor2::outer(u, one);
  r -= Tensor2::outer(u, u);
  r *= make_rational(1, 2);
  return r;
}

/// R R_u.
inline RMatrix modify_R(const HopfData& h, const RMatrix& r, const Vec& u) {
  return RMatrix(h, tensor2_mul(r.value(), r_u(h, u), h));
}

/// Rank of the d x d coefficient array of R.
inline int r_matrix_rank(const RMatrix& r) { return mat_rank(r.value().coefficient_matrix()); }
inline int r_matrix_rank(const Tensor2& r) { return mat_rank(r.coefficient_matrix()); }

struct TheoremReport {
  Vec u;
  bool u_squared_is_one = false;
  bool u_grouplike = false;
  bool s4_is_id = false;
  bool s2_is_ad_u = false;
  bool odd_dim_forces_u1_semisimple = false;  // vacuously true in even dimension
  bool chevalley = false;

  bool all() const {
    return u_squared_is_one && u_grouplike && s4_is_id && s2_is_ad_u && odd_dim_forces_u1_semisimple && chevalley;
  }
};

/// Structural facts of finite-dimensional triangular Hopf algebras in
/// characteristic 0: u^2 = 1, u group-like, S^2 = Ad(u) hence S^4 = id, in
/// odd dimension u = 1 and H semisimple, and the Chevalley property.
/// Failures are reported, not thrown.
inline TheoremReport check_structure_theorems(const HopfData& h, const RMatrix& r) {
  TheoremReport rep;
  const int d = h.dim();
  rep.u = drinfeld_element(h, r);
  const Vec& u = rep.u;
  rep.u_squared_is_one = detail::vec_equal(multiply(h, u, u), h.unit());
  rep.u_grouplike = comultiply(h, u) == Tensor2::outer(u, u);
  const Mat s2 = h.antipode() * h.antipode();
  rep.s4_is_id = s2 * s2 == Mat::identity(d);
  std::optional<Vec> u_inv;
  try {
    u_inv = element_inverse(h, u);
  } catch (const NotInvertible&) {
  }
  rep.s2_is_ad_u = u_inv.has_value();
  for (int i = 0; i < d && rep.s2_is_ad_u; ++i) {
    const Vec conj = multiply(h, multiply(h, u, basis_vector(d, i)), *u_inv);
    rep.s2_is_ad_u = detail::vec_equal(s2.column(i), conj);
  }
  rep.odd_dim_forces_u1_semisimple = d % 2 == 0 || (detail::vec_equal(u, h.unit()) && is_semisimple(h));
  rep.chevalley = is_chevalley(h);
  return rep;
}

}  // namespace trihopf
