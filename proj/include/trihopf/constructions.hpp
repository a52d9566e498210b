#pragma once

// Builders for group algebras, exterior and supergroup algebras k[G] x| /\V,
// modified supergroup algebras with their R_u, bicharacter twists, and twisted
// Hopf algebras.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trihopf/group.hpp"
#include "trihopf/hopf.hpp"
#include "trihopf/triangular.hpp"

namespace trihopf {

/// k[G]: group-like basis, Delta(g) = g (x) g, S(g) = g^{-1}.
inline HopfData group_algebra(const FiniteGroup& g) {
  const int n = g.order();
  MultTable mult(static_cast<std::size_t>(n) * n);
  std::vector<Tensor2> comult;
  Mat s(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>(a) * n + b] = {{g.mul(a, b), CycScalar(1)}};
    Tensor2 t(n);
    t(a, a) = 1;
    comult.push_back(std::move(t));
    s(g.inverse(a), a) = 1;
  }
  return HopfData(n, false, std::vector<int>(n, 0), basis_vector(n, g.identity()), std::move(mult), Vec(n, CycScalar(1)),
                  std::move(comult), std::move(s));
}

struct CharacterTable {
  std::vector<int> factors;
  std::vector<std::vector<CycScalar>> values;  // values[s][r] = chi_s(A.elements[r])
  std::vector<Vec> idempotents;                // E_s in the host basis
};

/// Characters chi_s of an abelian subgroup and the idempotents
/// E_s = (1/|A|) sum_a chi_s(a)^{-1} a, written in a host algebra whose basis
/// contains group element g at index group_to_basis[g].
inline CharacterTable characters(const AbelianSubgroup& a, int host_dim, std::span<const int> group_to_basis) {
  CharacterTable tab;
  tab.factors = a.factors;
  const int m = a.order();
  const int n = a.exponent();
  const CycScalar inv_order = make_rational(1, m);
  for (int s = 0; s < m; ++s) {
    std::vector<CycScalar> row;
    Vec e(host_dim);
    for (int r = 0; r < m; ++r) {
      const int k = a.pairing(s, r);
      row.push_back(root_of_unity(n, k));
      e[group_to_basis[a.elements[r]]] += root_of_unity(n, -k) * inv_order;
    }
    tab.values.push_back(std::move(row));
    tab.idempotents.push_back(std::move(e));
  }
  return tab;
}

/// Characters of an abelian group with its idempotents in k[G].
inline CharacterTable characters(const FiniteGroup& g) {
  if (!g.is_abelian()) throw NotAbelian("characters need an abelian group");
  std::vector<int> id(g.order());
  std::iota(id.begin(), id.end(), 0);
  return characters(AbelianSubgroup::whole(g), g.order(), id);
}

namespace detail {

/// v_S v_T in the exterior algebra on n generators, S and T bitmasks.
inline std::pair<int, int> wedge(unsigned s, unsigned t) {
  if (s & t) return {0, -1};
  int sign = 1;
  for (unsigned rest = s; rest; rest &= rest - 1) {
    const int i = __builtin_ctz(rest);
    // generators of T below i must move past v_i
    sign *= (__builtin_popcount(t & ((1u << i) - 1)) % 2) ? -1 : 1;
  }
  return {sign, static_cast<int>(s | t)};
}

/// Matrix of the induced action of rho(g) on /\V in the monomial basis.
inline Mat exterior_action(const Mat& rho) {
  const int n = rho.rows();
  const int dim = 1 << n;
  Mat act(dim, dim);
  for (int s = 0; s < dim; ++s) {
    Vec img(dim);
    img[0] = 1;
    for (int i = 0; i < n; ++i) {
      if (!((s >> i) & 1)) continue;
      Vec next(dim);
      for (int t = 0; t < dim; ++t) {
        if (img[t].is_zero()) continue;
        for (int k = 0; k < n; ++k) {
          if (rho(k, i).is_zero()) continue;
          const auto [sign, w] = wedge(static_cast<unsigned>(t), 1u << k);
          if (sign == 0) continue;
          next[w] += img[t] * rho(k, i) * CycScalar(sign);
        }
      }
      img = std::move(next);
    }
    for (int t = 0; t < dim; ++t) act(t, s) = img[t];
  }
  return act;
}

/// Multiplication table of k[G] x| /\V; basis index g * 2^n + S.
inline MultTable smash_product_table(const GroupRep& v) {
  const FiniteGroup& g = v.group;
  const int n = v.degree;
  const int ext = 1 << n;
  const int d = g.order() * ext;
  std::vector<Mat> act;
  for (int a = 0; a < g.order(); ++a) act.push_back(exterior_action(v(a)));
  MultTable mult(static_cast<std::size_t>(d) * d);
  for (int a = 0; a < g.order(); ++a)
    for (int s = 0; s < ext; ++s)
      for (int b = 0; b < g.order(); ++b)
        for (int t = 0; t < ext; ++t) {
          // (a v_S)(b v_T) = ab (b^{-1} . v_S) v_T
          const int ab = g.mul(a, b);
          const Mat& m = act[g.inverse(b)];
          Vec out(d);
          for (int w = 0; w < ext; ++w) {
            if (m(w, s).is_zero()) continue;
            const auto [sign, x] = wedge(static_cast<unsigned>(w), static_cast<unsigned>(t));
            if (sign != 0) out[ab * ext + x] += m(w, s) * CycScalar(sign);
          }
          mult[static_cast<std::size_t>(a * ext + s) * d + (b * ext + t)] = to_terms(out);
        }
  return mult;
}

/// Fills Delta and S on k[G] x| /\V from their values on generators:
/// Delta(g v_S) = Delta(g) Delta(v_s1) ... and S(g v_S) = sign S(v_sk)...S(v_s1) S(g),
/// where sign is the Koszul sign of reversing the odd generators.
inline HopfData extend_from_generators(const FiniteGroup& g, int n, bool is_super, MultTable mult,
                                       const std::vector<Tensor2>& delta_v, const std::vector<Vec>& s_v) {
  const int ext = 1 << n;
  const int d = g.order() * ext;
  std::vector<int> parity(d, 0);
  if (is_super)
    for (int k = 0; k < d; ++k) parity[k] = __builtin_popcount(static_cast<unsigned>(k % ext)) % 2;
  const Vec unit = basis_vector(d, g.identity() * ext);
  // Provisional structure used only for products.
  const HopfData shell(d, is_super, parity, unit, std::move(mult), Vec(d), std::vector<Tensor2>(d, Tensor2(d)), Mat(d, d));
  std::vector<Tensor2> comult;
  Mat antipode(d, d);
  Vec counit(d);
  for (int a = 0; a < g.order(); ++a)
    for (int s = 0; s < ext; ++s) {
      const int idx = a * ext + s;
      counit[idx] = s == 0 ? 1 : 0;
      Tensor2 delta(d);
      delta(a * ext, a * ext) = 1;
      Vec anti = basis_vector(d, g.inverse(a) * ext);
      int k = 0;
      for (int i = 0; i < n; ++i) {
        if (!((s >> i) & 1)) continue;
        delta = tensor2_mul(delta, delta_v[i], shell);
        anti = multiply(shell, s_v[i], anti);
        ++k;
      }
      if (is_super && (k * (k - 1) / 2) % 2) anti = scaled(std::move(anti), -1);
      comult.push_back(std::move(delta));
      for (int r = 0; r < d; ++r) antipode(r, idx) = anti[r];
    }
  return HopfData(d, is_super, std::move(parity), unit, shell.mult(), std::move(counit), std::move(comult),
                  std::move(antipode));
}

}  // namespace detail

/// /\V for dim V = n as a super Hopf algebra with primitive odd generators.
inline HopfData exterior_algebra(int n) {
  if (n < 0) throw ShapeError("exterior algebra needs n >= 0");
  const FiniteGroup trivial;
  const GroupRep v = GroupRep(trivial, n, {Mat::identity(n)});
  const int d = 1 << n;
  std::vector<Tensor2> delta_v;
  std::vector<Vec> s_v;
  for (int i = 0; i < n; ++i) {
    Tensor2 t(d);
    t(1 << i, 0) = 1;
    t(0, 1 << i) = 1;
    delta_v.push_back(std::move(t));
    s_v.push_back(scaled(basis_vector(d, 1 << i), -1));
  }
  return detail::extend_from_generators(trivial, n, true, detail::smash_product_table(v), delta_v, s_v);
}

/// k[G] x| /\V: group-likes even, generators of V odd and primitive,
/// g v = rho(g)(v) g.
inline HopfData supergroup_algebra(const FiniteGroup& g, const GroupRep& v) {
  if (!(v.group == g)) throw ShapeError("representation is over a different group");
  const int n = v.degree;
  const int ext = 1 << n;
  const int d = g.order() * ext;
  const int one = g.identity() * ext;
  std::vector<Tensor2> delta_v;
  std::vector<Vec> s_v;
  for (int i = 0; i < n; ++i) {
    Tensor2 t(d);
    t(one + (1 << i), one) = 1;
    t(one, one + (1 << i)) = 1;
    delta_v.push_back(std::move(t));
    s_v.push_back(scaled(basis_vector(d, one + (1 << i)), -1));
  }
  return detail::extend_from_generators(g, n, true, detail::smash_product_table(v), delta_v, s_v);
}

inline void check_modification_element(const FiniteGroup& g, const GroupRep& v, int u) {
  if (u < 0 || u >= g.order()) throw SeptupleInvariantViolation("u is not a group element");
  if (!g.is_central(u)) throw SeptupleInvariantViolation("u is not central");
  if (g.mul(u, u) != g.identity()) throw SeptupleInvariantViolation("u does not have order <= 2");
  Mat minus = Mat::identity(v.degree);
  for (int i = 0; i < v.degree; ++i) minus(i, i) = -1;
  if (!(v(u) == minus)) throw SeptupleInvariantViolation("u does not act by -1");
}

struct TriangularHopf {
  HopfData hopf;
  Tensor2 r;
};

/// The ordinary Hopf algebra on the algebra k[G] x| /\V with
/// Delta(v) = v (x) 1 + u (x) v, S(v) = -uv, triangular with R_u.
inline TriangularHopf modified_supergroup_algebra(const FiniteGroup& g, const GroupRep& v, int u) {
  if (!(v.group == g)) throw ShapeError("representation is over a different group");
  check_modification_element(g, v, u);
  const int n = v.degree;
  const int ext = 1 << n;
  const int d = g.order() * ext;
  const int one = g.identity() * ext;
  MultTable mult = detail::smash_product_table(v);
  std::vector<Tensor2> delta_v;
  std::vector<Vec> s_v;
  for (int i = 0; i < n; ++i) {
    const int vi = one + (1 << i);
    Tensor2 t(d);
    t(vi, one) = 1;
    t(u * ext, vi) = 1;
    delta_v.push_back(std::move(t));
    // -u v_i
    Vec uv(d);
    for (const auto& term : mult[static_cast<std::size_t>(u * ext) * d + vi]) uv[term.index] -= term.coeff;
    s_v.push_back(std::move(uv));
  }
  HopfData h = detail::extend_from_generators(g, n, false, std::move(mult), delta_v, s_v);
  Tensor2 r = r_u(h, basis_vector(d, u * ext));
  return {std::move(h), std::move(r)};
}

/// J = sum_{s,t} beta(s,t) E_s (x) E_t, with A's elements placed in a host
/// basis through group_to_basis.
inline Tensor2 build_bicharacter_twist(const AbelianSubgroup& a, const Bicharacter& beta, int host_dim,
                                       std::span<const int> group_to_basis) {
  if (beta.factors != a.factors) throw BicharacterError("bicharacter factors differ from the subgroup's");
  if (!beta.is_bimultiplicative()) throw BicharacterError("bicharacter table is not bimultiplicative");
  const int m = a.order();
  // Common exponent for beta and the characters.
  const int n = std::lcm(a.exponent(), beta.base());
  const int beta_scale = n / beta.base();
  const int chi_scale = n / a.exponent();
  const CycScalar norm = make_rational(1, static_cast<long>(m) * m);
  Tensor2 j(host_dim);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      // coefficient of a_x (x) a_y: (1/m^2) sum beta(s,t) chi_s(a_x)^{-1} chi_t(a_y)^{-1}
      std::vector<long> count(n, 0);
      for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
          long e = static_cast<long>(beta.exponent(s, t)) * beta_scale - static_cast<long>(a.pairing(s, x)) * chi_scale -
                   static_cast<long>(a.pairing(t, y)) * chi_scale;
          count[((e % n) + n) % n] += 1;
        }
      CycScalar c = 0;
      for (int e = 0; e < n; ++e)
        if (count[e]) c += root_of_unity(n, e) * CycScalar(count[e]);
      if (!c.is_zero()) j(group_to_basis[a.elements[x]], group_to_basis[a.elements[y]]) = c * norm;
    }
  return j;
}

inline Tensor2 build_bicharacter_twist(const FiniteGroup& g, const AbelianSubgroup& a, const Bicharacter& beta) {
  std::vector<int> id(g.order());
  std::iota(id.begin(), id.end(), 0);
  return build_bicharacter_twist(a, beta, g.order(), id);
}

struct TwistReport {
  bool counit_left = false;   // (epsilon (x) id)(J) = 1
  bool counit_right = false;  // (id (x) epsilon)(J) = 1
  bool cocycle = false;

  bool ok() const { return counit_left && counit_right && cocycle; }
};

/// Checks that J is a twist for the conjugation Delta^J = J^{-1} Delta J:
/// counit normalization and (Delta (x) id)(J)(J (x) 1) = (id (x) Delta)(J)(1 (x) J).
/// Normalization is checked before invertibility, so a non-normalized J is
/// reported rather than rejected.
inline TwistReport twist_report(const HopfData& h, const Tensor2& j) {
  if (j.dim() != h.dim()) throw ShapeError("twist has wrong dimension");
  TwistReport rep;
  Vec left(h.dim()), right(h.dim());
  for (const auto& e : j.nonzeros()) {
    if (!h.counit()[e.i].is_zero()) left[e.j] += h.counit()[e.i] * *e.value;
    if (!h.counit()[e.j].is_zero()) right[e.i] += h.counit()[e.j] * *e.value;
  }
  rep.counit_left = detail::vec_equal(left, h.unit());
  rep.counit_right = detail::vec_equal(right, h.unit());
  if (!rep.counit_left || !rep.counit_right) return rep;
  tensor2_inv(j, h);  // throws NotInvertible
  const Tensor3 lhs = tensor3_mul(embed(j, Slots::coproduct_left, h), embed(j, Slots::s12, h), h);
  const Tensor3 rhs = tensor3_mul(embed(j, Slots::coproduct_right, h), embed(j, Slots::s23, h), h);
  rep.cocycle = lhs == rhs;
  return rep;
}

inline bool verify_twist(const HopfData& h, const Tensor2& j) { return twist_report(h, j).ok(); }

struct TwistedHopf {
  HopfData hopf;
  std::optional<Tensor2> r;
};

/// H^J with Delta^J(x) = J^{-1} Delta(x) J and S^J(x) = Q^{-1} S(x) Q,
/// Q = m(S (x) id)(J). An R-matrix, when given, becomes J_21^{-1} R J.
inline TwistedHopf apply_twist(const HopfData& h, const Tensor2& j, const std::optional<Tensor2>& r = std::nullopt) {
  try {
    if (!verify_twist(h, j)) throw TwistError("element is not a twist");
  } catch (const NotInvertible&) {
    throw TwistError("twist is not invertible");
  }
  const int d = h.dim();
  const Tensor2 j_inv = tensor2_inv(j, h);
  std::vector<Tensor2> comult;
  for (int i = 0; i < d; ++i) comult.push_back(tensor2_mul(tensor2_mul(j_inv, h.comult(i), h), j, h));
  Vec q(d);
  for (const auto& e : j.nonzeros())
    q = add(std::move(q), multiply(h, scaled(h.antipode().column(e.i), *e.value), basis_vector(d, e.j)));
  const Vec q_inv = element_inverse(h, q);
  Mat s(d, d);
  for (int i = 0; i < d; ++i) {
    const Vec col = multiply(h, multiply(h, q_inv, h.antipode().column(i)), q);
    for (int k = 0; k < d; ++k) s(k, i) = col[k];
  }
  std::vector<int> parity(h.parity().begin(), h.parity().end());
  HopfData twisted(d, h.is_super(), std::move(parity), h.unit(), h.mult(), h.counit(), std::move(comult), std::move(s));
  std::optional<Tensor2> r_twisted;
  if (r) {
    const Tensor2 j21_inv = tensor2_inv(flip(j, h.koszul_parity()), h);
    r_twisted = tensor2_mul(tensor2_mul(j21_inv, *r, h), j, h);
  }
  return {std::move(twisted), std::move(r_twisted)};
}

/// (k[G]^J, J_21^{-1} R_u J) for J built from a bicharacter on A.
inline TriangularHopf semisimple_triangular(const FiniteGroup& g, const AbelianSubgroup& a, const Bicharacter& beta,
                                            int u) {
  check_modification_element(g, zero_representation(g), u);
  const HopfData h = group_algebra(g);
  const Tensor2 ru = r_u(h, basis_vector(g.order(), u));
  const Tensor2 j = build_bicharacter_twist(g, a, beta);
  auto tw = apply_twist(h, j, ru);
  return {std::move(tw.hopf), std::move(*tw.r)};
}

}  // namespace trihopf
