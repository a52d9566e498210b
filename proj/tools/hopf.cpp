// hopf: build, verify, analyze, twist and enumerate finite-dimensional
// triangular Hopf algebras from JSON files.

#include <iostream>

#include "CLI11.hpp"
#include "trihopf/atlas.hpp"

namespace {

using namespace trihopf;
namespace fs = std::filesystem;
using io::json;

enum Exit { kOk = 0, kFailed = 1, kMalformed = 2, kUnsupported = 3 };

/// A verification or theorem failure, reported with exit code 1.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_dim(int dim) {
  const int max_dim = max_dim_from_env();
  if (dim > max_dim)
    throw FormatError("dimension " + std::to_string(dim) + " exceeds HOPF_MAX_DIM=" + std::to_string(max_dim));
}

HopfData load_hopf(const fs::path& path) {
  const json j = io::load_json(path);
  if (j.contains("dim") && j["dim"].is_number_integer()) check_dim(j["dim"].get<int>());
  return io::hopf_from_json(j);
}

Tensor2 load_tensor(const fs::path& path, int dim) {
  Tensor2 t = io::tensor2_from_json(io::load_json(path));
  if (t.dim() != dim) throw FormatError(path.string() + ": host_dim does not match the dump");
  return t;
}

fs::path default_r_path(const fs::path& out) {
  fs::path p = out;
  p.replace_filename(out.stem().string() + "_R" + out.extension().string());
  return p;
}

void write_result(const HopfData& h, const std::optional<Tensor2>& r, const fs::path& out, const std::string& r_out) {
  io::write_json(out, io::hopf_to_json(h));
  std::cout << "wrote " << out.string() << " (dim " << h.dim() << ")\n";
  if (r) {
    const fs::path rp = r_out.empty() ? default_r_path(out) : fs::path(r_out);
    io::write_json(rp, io::tensor2_to_json(*r));
    std::cout << "wrote " << rp.string() << "\n";
  }
}

int cmd_build(const std::string& kind, const fs::path& spec_path, const fs::path& out, const std::string& r_out) {
  const json spec = io::load_json(spec_path);
  const fs::path base = spec_path.parent_path();
  std::optional<HopfData> h;
  std::optional<Tensor2> r;
  try {
    if (kind == "group-algebra") {
      const auto g = io::group_from_json(spec, base);
      check_dim(g.order());
      h = group_algebra(g);
    } else if (kind == "exterior") {
      const int n = spec.at("n").get<int>();
      if (n < 0 || n > 16) throw FormatError("exterior algebra needs 0 <= n <= 16");
      check_dim(1 << n);
      h = exterior_algebra(n);
    } else if (kind == "supergroup" || kind == "modified-supergroup") {
      const auto g = io::group_ref(spec.at("group"), base);
      const auto v = io::rep_ref(spec.at("rep"), base, g);
      if (v.degree > 16) throw FormatError("representation degree too large");
      check_dim(g.order() << v.degree);
      if (kind == "supergroup") {
        h = supergroup_algebra(g, v);
      } else {
        auto t = modified_supergroup_algebra(g, v, spec.at("u").get<int>());
        h = std::move(t.hopf);
        r = std::move(t.r);
      }
    } else if (kind == "semisimple-triangular") {
      const auto g = io::group_ref(spec.at("group"), base);
      check_dim(g.order());
      const auto elements = spec.at("A").get<std::vector<int>>();
      const auto a = spec.contains("A_generators")
                         ? AbelianSubgroup::from_generators(g, spec.at("A_generators").get<std::vector<int>>())
                         : AbelianSubgroup::decompose(g, elements);
      auto t = semisimple_triangular(g, a, io::bicharacter_ref(spec.at("bicharacter"), base), spec.at("u").get<int>());
      h = std::move(t.hopf);
      r = std::move(t.r);
    } else if (kind == "septuple-pipeline") {
      const auto s = io::septuple_from_json(spec, base);
      check_dim(s.group.order() << std::min(s.w.degree, 16));
      auto t = septuple_pipeline(s);
      h = std::move(t.hopf);
      r = std::move(t.r);
    } else {
      throw FormatError("unknown kind: " + kind);
    }
  } catch (const json::exception& e) {
    throw FormatError(spec_path.string() + ": " + e.what());
  }
  write_result(*h, r, out, r_out);
  return kOk;
}

int cmd_verify(const fs::path& dump, const std::string& r_path, bool force_super) {
  HopfData h = load_hopf(dump);
  if (force_super && !h.is_super()) {
    std::vector<int> parity(h.parity().begin(), h.parity().end());
    h = HopfData(h.dim(), true, std::move(parity), h.unit(), h.mult(), h.counit(), h.comult(), h.antipode());
  }
  bool ok = true;
  const AxiomReport rep = verify_hopf(h);
  for (const auto& [name, check] : rep.entries()) {
    std::cout << name << ": " << (check->ok ? "ok" : "FAIL");
    if (!check->ok) {
      ok = false;
      std::cout << " witness (";
      for (std::size_t k = 0; k < check->witness.size(); ++k) std::cout << (k ? ", " : "") << check->witness[k];
      std::cout << ")";
    }
    std::cout << "\n";
  }
  if (!r_path.empty()) {
    const RMatrix r(h, load_tensor(r_path, h.dim()));
    const bool quasi = verify_quasitriangular(h, r);
    const bool tri = quasi && verify_triangular(h, r);
    std::cout << "quasitriangular: " << (quasi ? "ok" : "FAIL") << "\n";
    std::cout << "triangular: " << (tri ? "ok" : "FAIL") << "\n";
    ok = ok && tri;
  }
  return ok ? kOk : kFailed;
}

int cmd_analyze(const fs::path& dump, const std::string& r_path, const std::string& format) {
  const HopfData h = load_hopf(dump);
  std::optional<Tensor2> r;
  if (!r_path.empty()) r = load_tensor(r_path, h.dim());
  const AnalysisReport rep = analyze(h, r);
  if (format == "text")
    std::cout << io::to_text(rep);
  else
    std::cout << io::dump(io::to_json(rep));
  return rep.theorems_ok() ? kOk : kFailed;
}

int cmd_twist(const fs::path& dump, const fs::path& j_path, const std::string& r_path, const fs::path& out,
              const std::string& r_out) {
  const HopfData h = load_hopf(dump);
  const Tensor2 j = load_tensor(j_path, h.dim());
  std::optional<Tensor2> r;
  if (!r_path.empty()) r = load_tensor(r_path, h.dim());
  const auto tw = apply_twist(h, j, r);
  write_result(tw.hopf, tw.r, out, r_out);
  return kOk;
}

/// A basis index, or a path to a JSON array of scalars.
Vec parse_element(const std::string& s, int dim) {
  try {
    std::size_t used = 0;
    const int k = std::stoi(s, &used);
    if (used == s.size()) {
      if (k < 0 || k >= dim) throw FormatError("basis index out of range: " + s);
      return basis_vector(dim, k);
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
    throw FormatError("basis index out of range: " + s);
  }
  Vec v = io::vec_from_json(io::load_json(s));
  if (static_cast<int>(v.size()) != dim) throw FormatError("element has the wrong length");
  return v;
}

int cmd_modify(const fs::path& dump, const fs::path& r_path, const std::string& u_arg, const fs::path& out) {
  const HopfData h = load_hopf(dump);
  const RMatrix r(h, load_tensor(r_path, h.dim()));
  const RMatrix modified = modify_R(h, r, parse_element(u_arg, h.dim()));
  io::write_json(out, io::tensor2_to_json(modified.value()));
  std::cout << "wrote " << out.string() << " (rank " << r_matrix_rank(modified) << ")\n";
  return kOk;
}

int cmd_septuple_validate(const fs::path& file) {
  const Septuple s = io::septuple_from_json(io::load_json(file), file.parent_path());
  const SeptupleReport rep = validate_septuple(s);
  for (const auto& c : rep.checks) {
    std::cout << c.name << ": " << (c.ok ? "ok" : "FAIL");
    if (!c.ok && !c.witness.empty()) std::cout << " (" << c.witness << ")";
    std::cout << "\n";
  }
  const bool supported = s.y_basis.cols() == 0 && s.b.is_zero();
  std::cout << "stratum: " << (supported ? "Y = B = 0 (constructible)" : "Y != 0 or B != 0 (not constructed)") << "\n";
  return rep.valid() ? kOk : kFailed;
}

int cmd_atlas(int max_order, const fs::path& out, int jobs) {
  if (max_order < 1 || max_order > 16) throw FormatError("--max-order must be in 1..16");
  const auto summary = run_atlas(out, max_order, jobs, max_dim_from_env());
  int built = 0, skipped = 0;
  for (const auto& r : summary.results) {
    if (r.skipped) {
      ++skipped;
      continue;
    }
    ++built;
    if (!r.ok) std::cerr << "FAIL " << r.name << (r.error.empty() ? "" : ": " + r.error) << "\n";
  }
  std::cout << built << " instances, " << skipped << " skipped (dim > HOPF_MAX_DIM), " << summary.failures
            << " failures\n";
  return summary.failures ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional triangular Hopf algebras over cyclotomic fields"};
  app.require_subcommand(1);

  std::string kind, spec, out, r_out, dump, r_path, j_path, u_arg, format = "json", file;
  bool force_super = false;
  int max_order = 16, jobs = 1;

  auto* build = app.add_subcommand("build", "Build an algebra from a spec file");
  build->add_option("--kind", kind, "Construction kind")
      ->required()
      ->check(CLI::IsMember({"group-algebra", "exterior", "supergroup", "modified-supergroup",
                             "semisimple-triangular", "septuple-pipeline"}));
  build->add_option("spec", spec, "Spec file")->required();
  build->add_option("-o,--out", out, "Output dump")->required();
  build->add_option("--r-out", r_out, "Output R-matrix file (default: <out>_R.json)");

  auto* verify = app.add_subcommand("verify", "Check the Hopf axioms, and triangularity with --r");
  verify->add_option("dump", dump)->required();
  verify->add_option("--r", r_path, "R-matrix file");
  verify->add_flag("--super", force_super, "Verify as a superalgebra using the dump's parity");

  auto* analyze_cmd = app.add_subcommand("analyze", "Print invariants and the triangular theorem checks");
  analyze_cmd->add_option("dump", dump)->required();
  analyze_cmd->add_option("--r", r_path, "R-matrix file");
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* twist = app.add_subcommand("twist", "Twist an algebra (and R) by J");
  twist->add_option("dump", dump)->required();
  twist->add_option("--twist", j_path, "Twist file")->required();
  twist->add_option("--r", r_path, "R-matrix file");
  twist->add_option("-o,--out", out, "Output dump")->required();
  twist->add_option("--r-out", r_out, "Output R-matrix file (default: <out>_R.json)");

  auto* modify = app.add_subcommand("modify", "Replace R by R R_u");
  modify->add_option("dump", dump)->required();
  modify->add_option("--r", r_path, "R-matrix file")->required();
  modify->add_option("--u", u_arg, "Basis index or JSON element file")->required();
  modify->add_option("-o,--out", out, "Output R-matrix file")->required();

  auto* septuple = app.add_subcommand("septuple", "Septuple tools");
  septuple->require_subcommand(1);
  auto* validate = septuple->add_subcommand("validate", "Check septuple axioms");
  validate->add_option("file", file)->required();

  auto* atlas = app.add_subcommand("atlas", "Enumerate the built-in catalog");
  atlas->add_option("--max-order", max_order, "Largest group order")->check(CLI::Range(1, 16));
  atlas->add_option("-o,--out", out, "Output directory")->required();
  atlas->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  try {
    if (*build) return cmd_build(kind, spec, out, r_out);
    if (*verify) return cmd_verify(dump, r_path, force_super);
    if (*analyze_cmd) return cmd_analyze(dump, r_path, format);
    if (*twist) return cmd_twist(dump, j_path, r_path, out, r_out);
    if (*modify) return cmd_modify(dump, r_path, u_arg, out);
    if (*validate) return cmd_septuple_validate(file);
    if (*atlas) return cmd_atlas(max_order, out, jobs);
  } catch (const UnsupportedStratum& e) {
    std::cerr << "unsupported stratum: " << e.what() << "\n";
    return kUnsupported;
  } catch (const FormatError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const ShapeError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const GroupError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const BicharacterError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const NotAbelian& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const DivisionByZero& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kFailed;
}
