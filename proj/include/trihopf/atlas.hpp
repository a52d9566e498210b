#pragma once

// Bounded catalog of triangular Hopf algebras: modified supergroup algebras
// H(G, V, u), optionally twisted by a bicharacter twist on an abelian
// subgroup of square order.

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "trihopf/analysis.hpp"

namespace trihopf {

/// Groups of the atlas, in enumeration order.
inline std::vector<std::string> atlas_catalog_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 16; ++n) names.push_back(n == 1 ? "1" : "Z" + std::to_string(n));
  for (const char* s : {"Z2xZ2", "Z2xZ2xZ2", "Z4xZ2", "Z3xZ3", "S3", "D4", "Q8"}) names.emplace_back(s);
  return names;
}

struct AtlasInstance {
  std::string name;
  FiniteGroup group;
  std::vector<int> v_characters;  // indices into sign_characters(group)
  int u = 0;
  std::optional<AbelianSubgroup> a;
  std::optional<Bicharacter> b;  // alternating; the twist uses its polarization
  int dim = 0;
};

inline int max_dim_from_env() {
  if (const char* s = std::getenv("HOPF_MAX_DIM")) {
    try {
      return std::max(1, std::stoi(s));
    } catch (const std::exception&) {
    }
  }
  return 32;
}

inline std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

namespace detail {

inline bool is_abelian_subset(const FiniteGroup& g, const std::vector<int>& s) {
  for (int x : s)
    for (int y : s)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

inline bool is_square(int n) {
  int r = 1;
  while (r * r < n) ++r;
  return r * r == n;
}

}  // namespace detail

/// All instances with |G| <= max_order, sorted by name.
inline std::vector<AtlasInstance> enumerate_atlas(int max_order) {
  std::vector<AtlasInstance> out;
  for (const auto& gname : atlas_catalog_names()) {
    const FiniteGroup g = *io::catalog_group(gname);
    if (g.order() > max_order) continue;
    const auto chars = sign_characters(g);
    struct Twist {
      std::string tag;
      AbelianSubgroup a;
      Bicharacter b;
    };
    std::vector<Twist> twists;
    const auto subs = all_subgroups(g);
    for (std::size_t si = 0; si < subs.size(); ++si) {
      const auto& s = subs[si];
      if (s.size() < 4 || !detail::is_square(static_cast<int>(s.size())) || !detail::is_abelian_subset(g, s)) continue;
      const auto a = AbelianSubgroup::decompose(g, s);
      const auto forms = alternating_nondegenerate_bicharacters(a.factors);
      for (std::size_t k = 0; k < forms.size(); ++k)
        twists.push_back({"A" + std::to_string(si) + "b" + std::to_string(k), a, forms[k]});
    }
    for (int u = 0; u < g.order(); ++u) {
      if (!g.is_central(u) || g.mul(u, u) != g.identity()) continue;
      std::vector<int> odd;
      for (std::size_t c = 0; c < chars.size(); ++c)
        if (chars[c][u] == -1) odd.push_back(static_cast<int>(c));
      std::vector<std::vector<int>> vs{{}};
      for (std::size_t i = 0; i < odd.size(); ++i) {
        vs.push_back({odd[i]});
        for (std::size_t j = i; j < odd.size(); ++j) vs.push_back({odd[i], odd[j]});
      }
      for (const auto& v : vs) {
        AtlasInstance base;
        base.group = g;
        base.v_characters = v;
        base.u = u;
        base.dim = g.order() << v.size();
        base.name = gname + "_u" + std::to_string(u) + "_V" + (v.empty() ? "0" : join_ints(v, "-"));
        out.push_back(base);
        for (const auto& t : twists) {
          AtlasInstance inst = base;
          inst.name += "_" + t.tag;
          inst.a = t.a;
          inst.b = t.b;
          out.push_back(std::move(inst));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  return out;
}

struct AtlasBuild {
  HopfData hopf;
  Tensor2 r;
  std::optional<Tensor2> twist;
  HopfData untwisted;
};

inline AtlasBuild build_atlas_instance(const AtlasInstance& inst) {
  const auto chars = sign_characters(inst.group);
  std::vector<std::vector<int>> v;
  for (int c : inst.v_characters) v.push_back(chars[c]);
  const GroupRep rep = v.empty() ? zero_representation(inst.group) : sign_representation(inst.group, v);
  auto base = modified_supergroup_algebra(inst.group, rep, inst.u);
  if (!inst.a) return {base.hopf, base.r, std::nullopt, base.hopf};
  const int ext = 1 << rep.degree;
  std::vector<int> to_basis(inst.group.order());
  for (int x = 0; x < inst.group.order(); ++x) to_basis[x] = x * ext;
  Tensor2 j = build_bicharacter_twist(*inst.a, inst.b->polarization(), base.hopf.dim(), to_basis);
  auto tw = apply_twist(base.hopf, j, base.r);
  return {std::move(tw.hopf), std::move(*tw.r), std::move(j), std::move(base.hopf)};
}

struct AtlasResult {
  std::string name;
  bool skipped = false;
  bool ok = false;
  std::string error;
  int dim = 0;
  std::optional<AnalysisReport> analysis;
  bool hopf_ok = false;
};

inline io::json atlas_instance_json(const AtlasInstance& inst) {
  io::json out{{"name", inst.name},
               {"group", inst.group.name()},
               {"u", inst.u},
               {"V_characters", inst.v_characters},
               {"dim", inst.dim}};
  if (inst.a) {
    out["A"] = inst.a->elements;
    out["A_factors"] = inst.a->factors;
    out["bicharacter"] = io::bicharacter_to_json(*inst.b);
  }
  return out;
}

/// Builds, verifies and analyzes one instance, writing hopf.json, R.json,
/// J.json (twisted instances) and report.json under dir.
inline AtlasResult run_atlas_instance(const AtlasInstance& inst, const io::fs::path& dir, int max_dim) {
  AtlasResult res;
  res.name = inst.name;
  res.dim = inst.dim;
  if (inst.dim > max_dim) {
    res.skipped = true;
    res.ok = true;
    return res;
  }
  try {
    const AtlasBuild b = build_atlas_instance(inst);
    const AxiomReport axioms = verify_hopf(b.hopf);
    res.hopf_ok = axioms.all();
    res.analysis = analyze(b.hopf, b.r);
    res.ok = res.hopf_ok && res.analysis->theorems_ok();
    io::json report = atlas_instance_json(inst);
    report["axioms"] = io::to_json(axioms);
    report["analysis"] = io::to_json(*res.analysis);
    report["ok"] = res.ok;
    io::write_json(dir / "hopf.json", io::hopf_to_json(b.hopf));
    io::write_json(dir / "R.json", io::tensor2_to_json(b.r));
    if (b.twist) io::write_json(dir / "J.json", io::tensor2_to_json(*b.twist));
    io::write_json(dir / "report.json", report);
  } catch (const std::exception& e) {
    res.ok = false;
    res.error = e.what();
  }
  return res;
}

/// Coarse isomorphism-invariant fingerprint.
inline std::string fingerprint(const AtlasResult& r) {
  if (!r.analysis) return "";
  const auto& a = *r.analysis;
  std::string s = "d" + std::to_string(a.dim) + "-rad" + std::to_string(a.radical_dim) + "-S" +
                  (a.antipode_order ? std::to_string(*a.antipode_order) : "inf") + (a.cocommutative ? "-cc" : "");
  if (a.triangular) s += "-rk" + std::to_string(a.triangular->r_rank);
  return s;
}

struct AtlasSummary {
  std::vector<AtlasResult> results;  // sorted by instance name
  int failures = 0;
};

/// Runs every instance with |G| <= max_order on `jobs` worker threads and
/// writes out_dir/instances/<name>/ plus out_dir/index.json.
inline AtlasSummary run_atlas(const io::fs::path& out_dir, int max_order, int jobs, int max_dim) {
  const auto instances = enumerate_atlas(max_order);
  std::vector<AtlasResult> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();)
      results[i] = run_atlas_instance(instances[i], out_dir / "instances" / instances[i].name, max_dim);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(jobs, 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  AtlasSummary summary;
  io::json list = io::json::array();
  io::json skipped = io::json::array();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& r = results[i];
    if (r.skipped) {
      skipped.push_back(r.name);
      continue;
    }
    if (!r.ok) ++summary.failures;
    io::json entry = atlas_instance_json(instances[i]);
    entry["ok"] = r.ok;
    entry["fingerprint"] = fingerprint(r);
    if (!r.error.empty()) entry["error"] = r.error;
    list.push_back(std::move(entry));
  }
  io::json index{{"max_order", max_order},
                 {"max_dim", max_dim},
                 {"instances", std::move(list)},
                 {"skipped", std::move(skipped)},
                 {"failures", summary.failures}};
  io::write_json(out_dir / "index.json", index);
  summary.results = std::move(results);
  return summary;
}

}  // namespace trihopf
