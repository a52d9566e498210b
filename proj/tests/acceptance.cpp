// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "radical_oracle.hpp"
#include "sweedler_h4.hpp"
#include "trihopf/atlas.hpp"

using namespace trihopf;
namespace fs = std::filesystem;

namespace {

constexpr double kAxiomSuiteSeconds = 60.0;
constexpr int kAtlasMaxOrder = 16;
constexpr int kAtlasMaxDim = 64;
constexpr int kOracleMaxDim = 8;
constexpr int kSuperMaxOrder = 8;
constexpr int kMaxVDim = 2;

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", n, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Named {
  std::string name;
  HopfData hopf;
  int g_order = 0;
  int v_dim = 0;
};

/// Sign representations given by multisets of at most kMaxVDim characters
/// drawn from `pool`, the empty multiset included.
std::vector<std::vector<int>> multisets(const std::vector<int>& pool) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    out.push_back({pool[i]});
    for (std::size_t j = i; j < pool.size(); ++j) out.push_back({pool[i], pool[j]});
  }
  return out;
}

GroupRep rep_of(const FiniteGroup& g, const std::vector<std::vector<int>>& chars, const std::vector<int>& pick) {
  if (pick.empty()) return zero_representation(g);
  std::vector<std::vector<int>> v;
  for (int c : pick) v.push_back(chars[c]);
  return sign_representation(g, v);
}

/// Supergroup algebras k[G] x| /\V for |G| <= 8 and dim V <= 2.
std::vector<Named> supergroup_family() {
  std::vector<Named> out;
  for (const auto& name : atlas_catalog_names()) {
    const FiniteGroup g = *io::catalog_group(name);
    if (g.order() > kSuperMaxOrder) continue;
    const auto chars = sign_characters(g);
    std::vector<int> all(chars.size());
    std::iota(all.begin(), all.end(), 0);
    for (const auto& pick : multisets(all))
      out.push_back({name + "_V" + join_ints(pick, "-"), supergroup_algebra(g, rep_of(g, chars, pick)), g.order(),
                     static_cast<int>(pick.size())});
  }
  return out;
}

struct Modified {
  std::string name;
  TriangularHopf t;
  bool u_is_identity = false;
  int g_order = 0;
  int v_dim = 0;
};

/// Modified supergroup algebras over every central u with u^2 = 1.
std::vector<Modified> modified_family() {
  std::vector<Modified> out;
  for (const auto& name : atlas_catalog_names()) {
    const FiniteGroup g = *io::catalog_group(name);
    if (g.order() > kSuperMaxOrder) continue;
    const auto chars = sign_characters(g);
    for (int u = 0; u < g.order(); ++u) {
      if (!g.is_central(u) || g.mul(u, u) != g.identity()) continue;
      std::vector<int> odd;
      for (std::size_t c = 0; c < chars.size(); ++c)
        if (chars[c][u] == -1) odd.push_back(static_cast<int>(c));
      for (const auto& pick : multisets(odd))
        out.push_back({name + "_u" + std::to_string(u) + "_V" + join_ints(pick, "-"),
                       modified_supergroup_algebra(g, rep_of(g, chars, pick), u), u == g.identity(), g.order(),
                       static_cast<int>(pick.size())});
    }
  }
  return out;
}

std::map<std::string, std::string> file_tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    out[fs::relative(e.path(), root).string()] = s.str();
  }
  return out;
}

void criterion1(const std::vector<Named>& supers, const std::vector<Modified>& mods, double build_seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  std::string first_bad;
  auto check = [&](const std::string& name, const HopfData& h) {
    ++checked;
    if (!verify_hopf(h).all() && first_bad.empty()) first_bad = name;
  };
  for (const auto& name : atlas_catalog_names()) check("k[" + name + "]", group_algebra(*io::catalog_group(name)));
  for (int n = 0; n <= 3; ++n) check("exterior" + std::to_string(n), exterior_algebra(n));
  for (const auto& s : supers) check("super " + s.name, s.hopf);
  for (const auto& m : mods) check("modified " + m.name, m.t.hopf);
  const double secs = seconds_since(t0) + build_seconds;
  char detail[160];
  std::snprintf(detail, sizeof detail, "%d algebras, %.1f s of %.0f s%s%s", checked, secs, kAxiomSuiteSeconds,
                first_bad.empty() ? "" : ", first failure ", first_bad.c_str());
  report(1, first_bad.empty() && secs < kAxiomSuiteSeconds, "axiom suite on the construction catalog", detail);
}

void criterion2() {
  const FiniteGroup z2 = cyclic_group(2);
  const auto m = modified_supergroup_algebra(z2, sign_representation(z2, {{1, -1}}), 1);
  const HopfData h4 = oracle::sweedler_h4();
  int mismatches = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) mismatches += m.hopf.product(i, j) != h4.product(i, j);
    mismatches += !(m.hopf.comult(i) == h4.comult(i));
  }
  mismatches += !(m.hopf.antipode() == h4.antipode());
  mismatches += m.hopf.counit() != h4.counit();
  mismatches += m.hopf.unit() != h4.unit();
  mismatches += !(m.hopf == h4);
  report(2, mismatches == 0, "Sweedler algebra equals the hand-built H4 table",
         std::to_string(mismatches) + " mismatching entries");
}

void criteria3and4(const AtlasSummary& atlas) {
  int triangular = 0, bad3 = 0, odd = 0, bad_odd = 0, bad4 = 0, nonsemisimple = 0;
  std::string first3, first4;
  std::set<std::string> odd_seen;
  for (const auto& r : atlas.results) {
    if (r.skipped || !r.analysis || !r.analysis->triangular) {
      ++bad3;
      if (first3.empty()) first3 = r.name + (r.error.empty() ? "" : ": " + r.error);
      continue;
    }
    ++triangular;
    const auto& a = *r.analysis;
    const auto& t = *a.triangular;
    const bool core = t.triangular && t.u_squared_is_one && t.u_grouplike && t.s4_is_id && t.s2_is_ad_u;
    if (!core && first3.empty()) first3 = r.name;
    bad3 += !core;
    if (a.dim % 2 == 1) {
      ++odd;
      const bool u_trivial = t.drinfeld_u == std::vector<Term>{{0, CycScalar(1)}};
      const bool ok = u_trivial && a.semisimple && t.odd_dim_forces_u1_semisimple;
      bad_odd += !ok;
      if (!ok && first3.empty()) first3 = r.name;
      odd_seen.insert(r.name.substr(0, r.name.find('_')) + (r.name.find("_A") != std::string::npos ? "^J" : ""));
    }
    nonsemisimple += !a.semisimple;
    if (!(a.chevalley && t.chevalley)) {
      ++bad4;
      if (first4.empty()) first4 = r.name;
    }
  }
  bool required = true;
  for (const char* need : {"Z3", "Z5", "Z7", "Z3xZ3^J"}) required = required && odd_seen.count(need);
  report(3, bad3 == 0 && bad_odd == 0 && required && triangular > 0, "u^2 = 1, u group-like, S^4 = id, S^2 = Ad(u)",
         std::to_string(triangular) + " triangular instances, " + std::to_string(odd) + " odd-dimensional, " +
             std::to_string(bad3 + bad_odd) + " failures" + (required ? "" : ", required odd instances missing") +
             (first3.empty() ? "" : ", first " + first3));
  report(4, bad4 == 0 && triangular > 0, "Chevalley property on every triangular instance",
         std::to_string(triangular) + " instances, " + std::to_string(nonsemisimple) + " non-semisimple, " +
             std::to_string(bad4) + " failures" + (first4.empty() ? "" : ", first " + first4));
}

void criterion5() {
  int twists = 0, bad = 0, host_checks = 0;
  std::string first;
  std::set<std::string> hosts;
  for (const auto& inst : enumerate_atlas(kAtlasMaxOrder)) {
    if (!inst.a || inst.dim > kAtlasMaxDim) continue;
    ++twists;
    bool ok = false;
    try {
      const AtlasBuild b = build_atlas_instance(inst);
      const Tensor2& j = *b.twist;
      ok = verify_twist(b.untwisted, j) && verify_hopf(b.hopf).all();
      const auto back = apply_twist(b.hopf, tensor2_inv(j, b.untwisted));
      ok = ok && io::dump(io::hopf_to_json(back.hopf)) == io::dump(io::hopf_to_json(b.untwisted));
      const std::string key = inst.group.name() + join_ints(inst.a->elements, ",") + "|" +
                              join_ints(inst.b->exponents, ",");
      if (hosts.insert(key).second) {
        ++host_checks;
        const FiniteGroup a = abelian_group(inst.a->factors);
        const HopfData ka = group_algebra(a);
        const Tensor2 ja = build_bicharacter_twist(a, AbelianSubgroup::whole(a), inst.b->polarization());
        const auto tw = apply_twist(ka, ja, tensor2_unit(ka));
        ok = ok && verify_triangular(tw.hopf, RMatrix(tw.hopf, *tw.r)) &&
             *tw.r == tensor2_mul(tensor2_inv(flip(ja), ka), ja, ka);
      }
    } catch (const std::exception& e) {
      if (first.empty()) first = inst.name + ": " + e.what();
    }
    if (!ok) {
      ++bad;
      if (first.empty()) first = inst.name;
    }
  }
  report(5, bad == 0 && twists > 0, "twist contract",
         std::to_string(twists) + " twisted instances, " + std::to_string(host_checks) + " (k[A]^J, J21^-1 J) checks, " +
             std::to_string(bad) + " failures" + (first.empty() ? "" : ", first " + first));
}

void criterion6(const std::vector<Modified>& mods) {
  int bad = 0, rank2 = 0;
  std::string first;
  for (const auto& m : mods) {
    const int rank = r_matrix_rank(m.t.r);
    const bool ok = rank <= 2 && (m.u_is_identity ? rank == 1 : rank == 2);
    rank2 += rank == 2;
    if (!ok) {
      ++bad;
      if (first.empty()) first = m.name + " rank " + std::to_string(rank);
    }
  }
  report(6, bad == 0 && !mods.empty(), "rank of R_u is at most 2, exactly 2 when u != 1",
         std::to_string(mods.size()) + " modified algebras, " + std::to_string(rank2) + " of rank 2, " +
             std::to_string(bad) + " failures" + (first.empty() ? "" : ", first " + first));
}

void criterion7(const std::vector<Named>& supers, const std::vector<Modified>& mods) {
  int compared = 0, bad_oracle = 0, bad_formula = 0, formula_checked = 0;
  std::string first;
  auto compare = [&](const std::string& name, const HopfData& h) {
    if (h.dim() > kOracleMaxDim) return;
    ++compared;
    const auto cert = oracle::certified_radical(h);
    if (!cert.ok() || !oracle::same_span(cert.basis, jacobson_radical(h))) {
      ++bad_oracle;
      if (first.empty()) first = name;
    }
  };
  auto formula = [&](const std::string& name, const HopfData& h, int g_order, int v_dim) {
    ++formula_checked;
    if (static_cast<int>(jacobson_radical(h).size()) != g_order * ((1 << v_dim) - 1)) {
      ++bad_formula;
      if (first.empty()) first = name + " radical dimension";
    }
  };
  for (const auto& name : atlas_catalog_names()) compare("k[" + name + "]", group_algebra(*io::catalog_group(name)));
  for (int n = 0; n <= 3; ++n) compare("exterior" + std::to_string(n), exterior_algebra(n));
  for (const auto& s : supers) {
    compare("super " + s.name, s.hopf);
    formula("super " + s.name, s.hopf, s.g_order, s.v_dim);
  }
  for (const auto& m : mods) {
    compare("modified " + m.name, m.t.hopf);
    formula("modified " + m.name, m.t.hopf, m.g_order, m.v_dim);
  }
  for (const auto& inst : enumerate_atlas(kAtlasMaxOrder))
    if (inst.a && inst.dim <= kOracleMaxDim) compare(inst.name, build_atlas_instance(inst).hopf);
  report(7, bad_oracle == 0 && bad_formula == 0 && compared > 0, "trace-form radical matches the independent oracle",
         std::to_string(compared) + " algebras of dim <= " + std::to_string(kOracleMaxDim) + " compared, " +
             std::to_string(formula_checked) + " radical dimensions against |G|(2^dim V - 1), " +
             std::to_string(bad_oracle + bad_formula) + " failures" + (first.empty() ? "" : ", first " + first));
}

void criterion8(const fs::path& one, const fs::path& two) {
  const auto a = file_tree(one);
  const auto b = file_tree(two);
  int differing = 0;
  std::string first;
  for (const auto& [path, bytes] : a) {
    const auto it = b.find(path);
    if (it == b.end() || it->second != bytes) {
      ++differing;
      if (first.empty()) first = path;
    }
  }
  for (const auto& [path, bytes] : b)
    if (!a.count(path)) {
      ++differing;
      if (first.empty()) first = path;
    }
  report(8, differing == 0 && !a.empty(), "atlas output identical for 1 and 2 workers",
         std::to_string(a.size()) + " files, " + std::to_string(differing) + " differing" +
             (first.empty() ? "" : ", first " + first));
}

}  // namespace

int main() {
  const fs::path work = fs::temp_directory_path() / "trihopf_acceptance";
  fs::remove_all(work);

  const auto t0 = std::chrono::steady_clock::now();
  const auto supers = supergroup_family();
  const auto mods = modified_family();
  const double build_seconds = seconds_since(t0);

  criterion1(supers, mods, build_seconds);
  criterion2();
  const AtlasSummary atlas = run_atlas(work / "jobs1", kAtlasMaxOrder, 1, kAtlasMaxDim);
  criteria3and4(atlas);
  criterion5();
  criterion6(mods);
  criterion7(supers, mods);
  run_atlas(work / "jobs2", kAtlasMaxOrder, 2, kAtlasMaxDim);
  criterion8(work / "jobs1", work / "jobs2");

  fs::remove_all(work);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
