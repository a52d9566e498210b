#pragma once

// Sweedler's four-dimensional Hopf algebra written out entry by entry.
// Basis: 0 = 1, 1 = x, 2 = g, 3 = gx, with g^2 = 1, x^2 = 0, xg = -gx,
// Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x, S(g) = g, S(x) = -gx.

#include "trihopf/hopf_data.hpp"

namespace oracle {

inline trihopf::HopfData sweedler_h4() {
  using trihopf::Term;
  const int d = 4;
  trihopf::MultTable m(16);
  auto set = [&](int i, int j, int k, long c) { m[i * d + j] = {Term{k, c}}; };
  // row 1
  set(0, 0, 0, 1);
  set(0, 1, 1, 1);
  set(0, 2, 2, 1);
  set(0, 3, 3, 1);
  // row x: x.x = 0, x.g = -gx, x.gx = xgx = -g x x = 0
  set(1, 0, 1, 1);
  set(1, 2, 3, -1);
  // row g
  set(2, 0, 2, 1);
  set(2, 1, 3, 1);
  set(2, 2, 0, 1);
  set(2, 3, 1, 1);
  // row gx: gx.x = 0, gx.g = g(xg) = -x, gx.gx = 0
  set(3, 0, 3, 1);
  set(3, 2, 1, -1);

  std::vector<trihopf::Tensor2> delta(4, trihopf::Tensor2(d));
  delta[0](0, 0) = 1;
  delta[1](1, 0) = 1;  // x (x) 1
  delta[1](2, 1) = 1;  // g (x) x
  delta[2](2, 2) = 1;
  delta[3](3, 2) = 1;  // gx (x) g
  delta[3](0, 3) = 1;  // 1 (x) gx

  trihopf::Mat s(d, d);
  s(0, 0) = 1;
  s(3, 1) = -1;  // S(x) = -gx
  s(2, 2) = 1;
  s(1, 3) = 1;   // S(gx) = x

  trihopf::Vec unit{1, 0, 0, 0};
  trihopf::Vec counit{1, 0, 1, 0};
  return trihopf::HopfData(d, false, {0, 0, 0, 0}, unit, std::move(m), counit, std::move(delta), std::move(s));
}

}  // namespace oracle
