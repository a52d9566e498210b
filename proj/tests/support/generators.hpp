#pragma once

// Seeded random inputs for property tests.

#include <random>

#include "trihopf/hopf_data.hpp"

namespace testgen {

using trihopf::CycScalar;
using trihopf::Rational;

inline constexpr unsigned kSeed = 20240611;

inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return Rational(num(rng), den(rng));
}

/// Random element of Q(zeta_order) with small coefficients.
inline CycScalar scalar(std::mt19937& rng, int order) {
  std::vector<Rational> poly(std::max(1, trihopf::detail::euler_phi(order)));
  for (auto& c : poly) c = small_rational(rng);
  for (auto& c : poly) c.canonicalize();
  return CycScalar::from_coeffs(order, std::move(poly));
}

inline CycScalar nonzero_scalar(std::mt19937& rng, int order) {
  for (;;) {
    CycScalar x = scalar(rng, order);
    if (!x.is_zero()) return x;
  }
}

/// Orders exercised by mixed-field properties.
inline int field_order(std::mt19937& rng) {
  static const int orders[] = {1, 3, 4, 5, 6, 8, 12};
  return orders[std::uniform_int_distribution<int>(0, 6)(rng)];
}

inline trihopf::Tensor2 tensor2(std::mt19937& rng, int dim, int terms, int order = 1) {
  trihopf::Tensor2 t(dim);
  std::uniform_int_distribution<int> idx(0, dim - 1);
  for (int k = 0; k < terms; ++k) t(idx(rng), idx(rng)) += scalar(rng, order);
  return t;
}

inline trihopf::Vec vec(std::mt19937& rng, int dim, int order = 1) {
  trihopf::Vec v(dim);
  for (auto& x : v) x = scalar(rng, order);
  return v;
}

}  // namespace testgen
