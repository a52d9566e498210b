#pragma once

// Invariant summary of a Hopf algebra, with an optional triangular block.

#include <optional>
#include <sstream>
#include <string>

#include "trihopf/io.hpp"
#include "trihopf/triangular.hpp"

namespace trihopf {

struct TriangularSummary {
  bool triangular = false;
  std::vector<Term> drinfeld_u;  // nonzero coefficients of u
  bool u_squared_is_one = false;
  bool u_grouplike = false;
  bool s4_is_id = false;
  bool s2_is_ad_u = false;
  bool odd_dim_forces_u1_semisimple = false;
  bool chevalley = false;
  int r_rank = 0;

  bool ok() const {
    return triangular && u_squared_is_one && u_grouplike && s4_is_id && s2_is_ad_u && odd_dim_forces_u1_semisimple &&
           chevalley;
  }
};

struct AnalysisReport {
  int dim = 0;
  bool is_super = false;
  bool semisimple = false;
  int radical_dim = 0;
  bool chevalley = false;
  std::optional<int> antipode_order;  // empty if no order up to the search bound
  bool cocommutative = false;
  std::optional<TriangularSummary> triangular;

  bool theorems_ok() const { return !triangular || triangular->ok(); }
};

inline AnalysisReport analyze(const HopfData& h, const std::optional<Tensor2>& r = std::nullopt) {
  AnalysisReport rep;
  rep.dim = h.dim();
  rep.is_super = h.is_super();
  const auto radical = jacobson_radical(h);
  rep.radical_dim = static_cast<int>(radical.size());
  rep.semisimple = radical.empty();
  rep.chevalley = hopf_ideal_report(h, radical).ok();
  try {
    rep.antipode_order = antipode_order(h);
  } catch (const OrderNotFound&) {
  }
  rep.cocommutative = is_cocommutative(h);
  if (r) {
    TriangularSummary t;
    const RMatrix rm(h, *r);
    t.triangular = verify_triangular(h, rm);
    t.r_rank = r_matrix_rank(rm);
    try {
      const TheoremReport th = check_structure_theorems(h, rm);
      t.drinfeld_u = to_terms(th.u);
      t.u_squared_is_one = th.u_squared_is_one;
      t.u_grouplike = th.u_grouplike;
      t.s4_is_id = th.s4_is_id;
      t.s2_is_ad_u = th.s2_is_ad_u;
      t.odd_dim_forces_u1_semisimple = th.odd_dim_forces_u1_semisimple;
      t.chevalley = th.chevalley;
    } catch (const NotQuasitriangular&) {
    }
    rep.triangular = std::move(t);
  }
  return rep;
}

namespace io {

inline json to_json(const AnalysisReport& r) {
  json out{{"dim", r.dim},
           {"super", r.is_super},
           {"semisimple", r.semisimple},
           {"radical_dim", r.radical_dim},
           {"chevalley", r.chevalley},
           {"antipode_order", r.antipode_order ? json(*r.antipode_order) : json(nullptr)},
           {"cocommutative", r.cocommutative}};
  if (r.triangular) {
    const auto& t = *r.triangular;
    json u = json::array();
    for (const auto& term : t.drinfeld_u) u.push_back(json::array({term.index, to_json(term.coeff)}));
    out["triangular"] = json{{"triangular", t.triangular},
                             {"drinfeld_u", std::move(u)},
                             {"u_squared_is_one", t.u_squared_is_one},
                             {"u_grouplike", t.u_grouplike},
                             {"s4_is_id", t.s4_is_id},
                             {"s2_is_ad_u", t.s2_is_ad_u},
                             {"odd_dim_forces_u1_semisimple", t.odd_dim_forces_u1_semisimple},
                             {"chevalley", t.chevalley},
                             {"r_rank", t.r_rank}};
  }
  return out;
}

inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "true" : "false"; };
  os << "dim: " << r.dim << "\n"
     << "super: " << yn(r.is_super) << "\n"
     << "semisimple: " << yn(r.semisimple) << "\n"
     << "radical_dim: " << r.radical_dim << "\n"
     << "chevalley: " << yn(r.chevalley) << "\n"
     << "antipode_order: " << (r.antipode_order ? std::to_string(*r.antipode_order) : "none") << "\n"
     << "cocommutative: " << yn(r.cocommutative) << "\n";
  if (r.triangular) {
    const auto& t = *r.triangular;
    os << "triangular: " << yn(t.triangular) << "\n"
       << "drinfeld_u:";
    for (const auto& term : t.drinfeld_u) os << " " << term.coeff.str() << "*e" << term.index;
    os << "\n"
       << "u_squared_is_one: " << yn(t.u_squared_is_one) << "\n"
       << "u_grouplike: " << yn(t.u_grouplike) << "\n"
       << "s4_is_id: " << yn(t.s4_is_id) << "\n"
       << "s2_is_ad_u: " << yn(t.s2_is_ad_u) << "\n"
       << "odd_dim_forces_u1_semisimple: " << yn(t.odd_dim_forces_u1_semisimple) << "\n"
       << "chevalley: " << yn(t.chevalley) << "\n"
       << "r_rank: " << t.r_rank << "\n";
  }
  return os.str();
}

}  // namespace io
}  // namespace trihopf
