#pragma once

// JSON file formats: scalars, Hopf dumps, Tensor2 / R-matrix files, groups,
// representations, bicharacters and septuples.
//
// Scalar wire form: {"n": order, "c": [["num", "den"], ...]} with phi(n)
// coefficient pairs, written in the smallest cyclotomic field containing the
// value. Readers also accept a bare integer or a "p/q" string.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "trihopf/septuple.hpp"

namespace trihopf::io {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Scalars, vectors, matrices

inline json to_json(const CycScalar& x) {
  const CycScalar v = x.minimal();
  json c = json::array();
  for (const auto& q : v.coeffs()) c.push_back(json::array({q.get_num().get_str(), q.get_den().get_str()}));
  return json{{"n", v.order()}, {"c", std::move(c)}};
}

inline CycScalar scalar_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return CycScalar(j.get<long>());
    if (j.is_string()) {
      const auto s = j.get<std::string>();
      const auto slash = s.find('/');
      if (slash == std::string::npos) return CycScalar(make_rational(s, "1"));
      return CycScalar(make_rational(s.substr(0, slash), s.substr(slash + 1)));
    }
    const int n = j.at("n").get<int>();
    std::vector<Rational> c;
    for (const auto& pair : j.at("c")) {
      if (!pair.is_array() || pair.size() != 2) throw FormatError("scalar coefficient must be [num, den]");
      auto part = [](const json& x) { return x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()); };
      c.push_back(make_rational(part(pair[0]), part(pair[1])));
    }
    return CycScalar::from_coeffs(n, std::move(c));
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad scalar: ") + e.what());
  } catch (const ShapeError& e) {
    throw FormatError(std::string("bad scalar: ") + e.what());
  }
}

inline json to_json(std::span<const CycScalar> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of scalars");
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

inline json to_json(const Mat& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

/// Rows of scalars; `cols` fixes the width for matrices with zero rows.
inline Mat mat_from_json(const json& j, int cols = -1) {
  if (!j.is_array()) throw FormatError("expected a matrix (array of rows)");
  const int rows = static_cast<int>(j.size());
  if (rows == 0) return Mat(0, std::max(cols, 0));
  const int width = static_cast<int>(j[0].size());
  Mat m(rows, width);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != width) throw FormatError("ragged matrix");
    for (int k = 0; k < width; ++k) m(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Tensor2 / R-matrix files

inline json tensor2_entries(const Tensor2& t) {
  json out = json::array();
  for (const auto& e : t.nonzeros()) out.push_back(json::array({e.i, e.j, to_json(*e.value)}));
  return out;
}

inline Tensor2 tensor2_from_entries(const json& j, int dim) {
  Tensor2 t(dim);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw FormatError("Tensor2 entry must be [i, j, scalar]");
    const int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 0 || b < 0 || a >= dim || b >= dim) throw FormatError("Tensor2 index out of range");
    t(a, b) += scalar_from_json(e[2]);
  }
  return t;
}

inline json tensor2_to_json(const Tensor2& t) { return json{{"host_dim", t.dim()}, {"entries", tensor2_entries(t)}}; }

inline Tensor2 tensor2_from_json(const json& j) {
  try {
    return tensor2_from_entries(j.at("entries"), j.at("host_dim").get<int>());
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad tensor file: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Hopf dumps

inline json hopf_to_json(const HopfData& h) {
  const int d = h.dim();
  json mult = json::array();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& t : h.product(i, j))
        if (!t.coeff.is_zero()) mult.push_back(json::array({i, j, t.index, to_json(t.coeff)}));
  json comult = json::array();
  for (int i = 0; i < d; ++i) comult.push_back(tensor2_entries(h.comult(i)));
  return json{{"dim", d},
              {"super", h.is_super()},
              {"parity", std::vector<int>(h.parity().begin(), h.parity().end())},
              {"unit", to_json(h.unit())},
              {"mult", std::move(mult)},
              {"comult", std::move(comult)},
              {"counit", to_json(h.counit())},
              {"antipode", to_json(h.antipode())}};
}

inline HopfData hopf_from_json(const json& j) {
  try {
    const int d = j.at("dim").get<int>();
    if (d < 1) throw FormatError("dim must be positive");
    const bool is_super = j.value("super", false);
    std::vector<int> parity = j.contains("parity") ? j.at("parity").get<std::vector<int>>() : std::vector<int>(d, 0);
    MultTable mult(static_cast<std::size_t>(d) * d);
    for (const auto& e : j.at("mult")) {
      if (!e.is_array() || e.size() != 4) throw FormatError("mult entry must be [i, j, k, scalar]");
      const int a = e[0].get<int>(), b = e[1].get<int>(), k = e[2].get<int>();
      if (a < 0 || b < 0 || k < 0 || a >= d || b >= d || k >= d) throw FormatError("mult index out of range");
      auto& terms = mult[static_cast<std::size_t>(a) * d + b];
      const CycScalar c = scalar_from_json(e[3]);
      auto it = std::find_if(terms.begin(), terms.end(), [&](const Term& t) { return t.index == k; });
      if (it == terms.end())
        terms.push_back({k, c});
      else
        it->coeff += c;
    }
    for (auto& terms : mult)
      std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    std::vector<Tensor2> comult;
    const auto& cj = j.at("comult");
    if (!cj.is_array() || static_cast<int>(cj.size()) != d) throw FormatError("comult needs one entry list per basis element");
    for (const auto& t : cj) comult.push_back(tensor2_from_entries(t, d));
    return HopfData(d, is_super, std::move(parity), vec_from_json(j.at("unit")), std::move(mult),
                    vec_from_json(j.at("counit")), std::move(comult), mat_from_json(j.at("antipode"), d));
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad Hopf dump: ") + e.what());
  } catch (const ShapeError& e) {
    throw FormatError(std::string("bad Hopf dump: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Files

inline json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

namespace detail {

/// Indents the outer `depth` levels; anything deeper stays on one line.
inline void dump_shallow(const json& j, int depth, int indent, std::string& out) {
  const bool nested = j.is_object() ? !j.empty()
                     : j.is_array() ? std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })
                                    : false;
  if (depth == 0 || !nested) {
    out += j.dump();
    return;
  }
  const std::string pad(indent + 1, ' ');
  out += j.is_object() ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (j.is_object()) out += json(it.key()).dump() + ": ";
    dump_shallow(*it, depth - 1, indent + 1, out);
  }
  out += "\n" + std::string(indent, ' ') + (j.is_object() ? "}" : "]");
}

}  // namespace detail

inline std::string dump(const json& j) {
  std::string out;
  detail::dump_shallow(j, 2, 0, out);
  return out + "\n";
}

/// Writes through a temporary file and renames it into place.
inline void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp.string());
    out << content;
    if (!out) throw FormatError("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

inline void write_json(const fs::path& path, const json& j) { write_file_atomic(path, dump(j)); }

// ---------------------------------------------------------------------------
// Groups and representations

/// Catalog names: "1", "Zn", products such as "Z4xZ2", and "S3", "D4", "Q8".
inline std::optional<FiniteGroup> catalog_group(const std::string& name) {
  if (name == "1") return cyclic_group(1);
  if (name == "S3") return symmetric_group3();
  if (name == "D4") return dihedral_group4();
  if (name == "Q8") return quaternion_group();
  if (name.empty() || name[0] != 'Z') return std::nullopt;
  std::vector<int> factors;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.size() < 2 || part[0] != 'Z') return std::nullopt;
    try {
      std::size_t used = 0;
      const int n = std::stoi(part.substr(1), &used);
      if (used != part.size() - 1 || n < 1) return std::nullopt;
      factors.push_back(n);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (factors.size() == 1) return cyclic_group(factors[0]);
  return abelian_group(factors);
}

inline json group_to_json(const FiniteGroup& g) {
  json table = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  json out{{"name", g.name()}, {"order", g.order()}, {"table", std::move(table)}, {"identity", g.identity()}};
  if (g.invariant_factors()) {
    out["invariant_factors"] = *g.invariant_factors();
    out["iso_map"] = *g.iso_map();
  }
  return out;
}

inline FiniteGroup group_from_json(const json& j, const fs::path& base_dir = {});

/// A group given inline, as a catalog name, or as a path to a group file.
inline FiniteGroup group_ref(const json& j, const fs::path& base_dir) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const fs::path p = base_dir / s;
    if (fs::exists(p)) return group_from_json(load_json(p), p.parent_path());
    if (auto g = catalog_group(s)) return *g;
    throw FormatError("unknown group reference: " + s);
  }
  return group_from_json(j, base_dir);
}

inline FiniteGroup group_from_json(const json& j, const fs::path& base_dir) {
  try {
    if (j.contains("catalog")) return group_ref(j.at("catalog"), base_dir);
    if (j.contains("group")) return group_ref(j.at("group"), base_dir);
    const int n = j.at("order").get<int>();
    std::vector<int> table;
    for (const auto& row : j.at("table")) {
      if (!row.is_array() || static_cast<int>(row.size()) != n) throw GroupError("Cayley table rows must have length order");
      for (const auto& x : row) table.push_back(x.get<int>());
    }
    std::optional<std::vector<int>> factors;
    std::optional<std::vector<std::vector<int>>> iso;
    if (j.contains("invariant_factors")) factors = j.at("invariant_factors").get<std::vector<int>>();
    if (j.contains("iso_map")) iso = j.at("iso_map").get<std::vector<std::vector<int>>>();
    if (factors && !iso) {
      const FiniteGroup plain(n, std::move(table), j.at("identity").get<int>(), j.value("name", std::string()));
      return with_invariant_factors(plain, *factors);
    }
    return FiniteGroup(n, std::move(table), j.at("identity").get<int>(), j.value("name", std::string()),
                       std::move(factors), std::move(iso));
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad group: ") + e.what());
  }
}

inline json rep_to_json(const GroupRep& r) {
  json mats = json::array();
  for (const auto& m : r.matrices) mats.push_back(to_json(m));
  return json{{"group", group_to_json(r.group)}, {"degree", r.degree}, {"matrices", std::move(mats)}};
}

inline GroupRep rep_from_json(const json& j, const fs::path& base_dir = {},
                              const std::optional<FiniteGroup>& context = std::nullopt);

inline GroupRep rep_ref(const json& j, const fs::path& base_dir,
                        const std::optional<FiniteGroup>& context = std::nullopt) {
  if (j.is_string()) {
    const fs::path p = base_dir / j.get<std::string>();
    return rep_from_json(load_json(p), p.parent_path(), context);
  }
  return rep_from_json(j, base_dir, context);
}

/// {"group_ref" | "group", "degree", "matrices"}; "characters" (lists of +-1
/// per element) may replace "matrices" for sums of sign representations. The
/// group may be omitted when the enclosing file supplies it.
inline GroupRep rep_from_json(const json& j, const fs::path& base_dir, const std::optional<FiniteGroup>& context) {
  try {
    const FiniteGroup g = j.contains("group_ref") ? group_ref(j.at("group_ref"), base_dir)
                          : j.contains("group")   ? group_ref(j.at("group"), base_dir)
                          : context               ? *context
                                                  : throw FormatError("representation names no group");
    if (j.contains("characters")) return sign_representation(g, j.at("characters").get<std::vector<std::vector<int>>>());
    const int deg = j.at("degree").get<int>();
    std::vector<Mat> mats;
    for (const auto& m : j.at("matrices")) mats.push_back(deg == 0 ? Mat(0, 0) : mat_from_json(m, deg));
    return GroupRep(g, deg, std::move(mats));
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad representation: ") + e.what());
  }
}

inline json bicharacter_to_json(const Bicharacter& b) {
  json values = json::array();
  for (int s = 0; s < b.size(); ++s) {
    json row = json::array();
    for (int t = 0; t < b.size(); ++t) row.push_back(b.exponent(s, t));
    values.push_back(std::move(row));
  }
  return json{{"factors", b.factors}, {"values", std::move(values)}};
}

/// {"factors": [...], "values": table of exponents of zeta_N, N = lcm(factors)}.
inline Bicharacter bicharacter_from_json(const json& j) {
  try {
    Bicharacter b;
    b.factors = j.at("factors").get<std::vector<int>>();
    for (const auto& row : j.at("values")) {
      if (!row.is_array() || static_cast<int>(row.size()) != b.size()) throw FormatError("bicharacter table is not |A| x |A|");
      for (const auto& x : row) b.exponents.push_back(x.get<int>());
    }
    if (static_cast<int>(b.exponents.size()) != b.size() * b.size()) throw FormatError("bicharacter table is not |A| x |A|");
    return b;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad bicharacter: ") + e.what());
  }
}

inline Bicharacter bicharacter_ref(const json& j, const fs::path& base_dir) {
  if (j.is_string()) return bicharacter_from_json(load_json(base_dir / j.get<std::string>()));
  return bicharacter_from_json(j);
}

// ---------------------------------------------------------------------------
// Septuples

inline json septuple_to_json(const Septuple& s) {
  json out{{"group", group_to_json(s.group)}, {"W", rep_to_json(s.w)}, {"A", s.a}};
  if (s.a_generators) out["A_generators"] = *s.a_generators;
  out["bicharacter"] = bicharacter_to_json(s.v_datum);
  out["Y_basis"] = to_json(s.y_basis);
  out["B"] = to_json(s.b);
  out["u"] = s.u;
  out["V_dim"] = s.v_dim;
  return out;
}

inline Septuple septuple_from_json(const json& j, const fs::path& base_dir = {}) {
  try {
    Septuple s;
    s.group = group_ref(j.at("group"), base_dir);
    s.w = j.contains("W") ? rep_ref(j.at("W"), base_dir, s.group) : zero_representation(s.group);
    s.a = j.at("A").get<std::vector<int>>();
    if (j.contains("A_generators")) s.a_generators = j.at("A_generators").get<std::vector<int>>();
    s.v_datum = j.contains("bicharacter") ? bicharacter_ref(j.at("bicharacter"), base_dir) : Bicharacter::trivial({});
    s.y_basis = j.contains("Y_basis") ? mat_from_json(j.at("Y_basis"), 0) : Mat(s.w.degree, 0);
    if (s.y_basis.rows() == 0 && s.y_basis.cols() == 0) s.y_basis = Mat(s.w.degree, 0);
    s.b = j.contains("B") ? mat_from_json(j.at("B"), 0) : Mat(0, 0);
    s.u = j.at("u").get<int>();
    s.v_dim = j.at("V_dim").get<int>();
    return s;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad septuple: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const AxiomReport& r) {
  json out;
  for (const auto& [name, check] : r.entries()) {
    out[name] = check->ok;
  }
  return out;
}

inline json to_json(const TheoremReport& r) {
  return json{{"u_squared_is_one", r.u_squared_is_one},
              {"u_grouplike", r.u_grouplike},
              {"s4_is_id", r.s4_is_id},
              {"s2_is_ad_u", r.s2_is_ad_u},
              {"odd_dim_forces_u1_semisimple", r.odd_dim_forces_u1_semisimple},
              {"chevalley", r.chevalley}};
}

inline json to_json(const SeptupleReport& r) {
  json out = json::object();
  for (const auto& c : r.checks) out[c.name] = c.ok;
  out["valid"] = r.valid();
  return out;
}

}  // namespace trihopf::io
