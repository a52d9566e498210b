#pragma once

// Finite groups by Cayley table, matrix representations, abelian subgroups
// with an explicit cyclic decomposition, and bicharacters on their duals.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trihopf/errors.hpp"
#include "trihopf/linalg.hpp"

namespace trihopf {

class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(1, {0}, 0, "1") {}

  /// `iso_map[a]` gives exponents of `a` in Z_{n1} x ... x Z_{nr}.
  FiniteGroup(int order, std::vector<int> table, int identity, std::string name = {},
              std::optional<std::vector<int>> invariant_factors = std::nullopt,
              std::optional<std::vector<std::vector<int>>> iso_map = std::nullopt)
      : order_(order),
        table_(std::move(table)),
        identity_(identity),
        name_(std::move(name)),
        factors_(std::move(invariant_factors)),
        iso_map_(std::move(iso_map)) {
    validate();
  }

  /// Builds the table from a multiplication rule on indices 0..order-1.
  static FiniteGroup from_rule(int order, const std::function<int(int, int)>& mul, std::string name) {
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) table[static_cast<std::size_t>(a) * order + b] = mul(a, b);
    int identity = -1;
    for (int e = 0; e < order && identity < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < order && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) identity = e;
    }
    if (identity < 0) throw GroupError("no identity element");
    return FiniteGroup(order, std::move(table), identity, std::move(name));
  }

  int order() const { return order_; }
  int identity() const { return identity_; }
  const std::string& name() const { return name_; }
  const std::vector<int>& table() const { return table_; }
  const std::optional<std::vector<int>>& invariant_factors() const { return factors_; }
  const std::optional<std::vector<std::vector<int>>>& iso_map() const { return iso_map_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }

  int power(int a, long k) const {
    if (k < 0) return power(inverse(a), -k);
    int r = identity_;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  bool is_central(int a) const {
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      if (!is_central(a)) return false;
    return true;
  }

  std::vector<int> center() const {
    std::vector<int> out;
    for (int a = 0; a < order_; ++a)
      if (is_central(a)) out.push_back(a);
    return out;
  }

  /// Closure of a set of elements under multiplication, sorted.
  std::vector<int> generated_by(std::span<const int> gens) const {
    std::vector<bool> in(order_, false);
    std::vector<int> members{identity_};
    in[identity_] = true;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int g : gens) {
        const int x = mul(members[k], g);
        if (!in[x]) {
          in[x] = true;
          members.push_back(x);
        }
      }
    std::sort(members.begin(), members.end());
    return members;
  }

  bool is_subgroup(std::span<const int> subset) const {
    std::vector<bool> in(order_, false);
    for (int a : subset) {
      if (a < 0 || a >= order_) return false;
      in[a] = true;
    }
    if (!in[identity_]) return false;
    for (int a : subset)
      for (int b : subset)
        if (!in[mul(a, b)]) return false;
    return true;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_ && a.identity_ == b.identity_;
  }

 private:
  void validate() {
    if (order_ < 1) throw GroupError("group order must be positive");
    if (table_.size() != static_cast<std::size_t>(order_) * order_) throw GroupError("Cayley table has wrong size");
    if (identity_ < 0 || identity_ >= order_) throw GroupError("identity index out of range");
    for (int x : table_)
      if (x < 0 || x >= order_) throw GroupError("Cayley table entry out of range");
    for (int a = 0; a < order_; ++a) {
      std::vector<bool> row(order_, false), col(order_, false);
      for (int b = 0; b < order_; ++b) {
        row[mul(a, b)] = true;
        col[mul(b, a)] = true;
      }
      if (std::count(row.begin(), row.end(), false) || std::count(col.begin(), col.end(), false))
        throw GroupError("Cayley table rows and columns must be permutations");
      if (mul(identity_, a) != a || mul(a, identity_) != a) throw GroupError("identity does not act as unit");
    }
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw GroupError("Cayley table is not associative");
    inverse_.assign(order_, -1);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        if (mul(a, b) == identity_) inverse_[a] = b;
    if (factors_ || iso_map_) validate_iso();
  }

  void validate_iso() const {
    if (!factors_ || !iso_map_) throw GroupError("invariant factors and iso_map must be given together");
    const auto& f = *factors_;
    int prod = 1;
    for (int n : f) {
      if (n < 1) throw GroupError("invariant factors must be positive");
      prod *= n;
    }
    if (prod != order_ || static_cast<int>(iso_map_->size()) != order_)
      throw GroupError("invariant factors do not match the group order");
    std::set<std::vector<int>> seen;
    for (const auto& v : *iso_map_) {
      if (v.size() != f.size()) throw GroupError("iso_map entry has wrong length");
      for (std::size_t i = 0; i < f.size(); ++i)
        if (v[i] < 0 || v[i] >= f[i]) throw GroupError("iso_map entry out of range");
      seen.insert(v);
    }
    if (static_cast<int>(seen.size()) != order_) throw GroupError("iso_map is not injective");
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b) {
        const auto& x = (*iso_map_)[a];
        const auto& y = (*iso_map_)[b];
        const auto& z = (*iso_map_)[mul(a, b)];
        for (std::size_t i = 0; i < f.size(); ++i)
          if ((x[i] + y[i]) % f[i] != z[i]) throw GroupError("iso_map is not a homomorphism");
      }
  }

  int order_;
  std::vector<int> table_;
  int identity_;
  std::string name_;
  std::optional<std::vector<int>> factors_;
  std::optional<std::vector<std::vector<int>>> iso_map_;
  std::vector<int> inverse_;
};

// ---------------------------------------------------------------------------
// Catalog groups

namespace detail {

inline std::vector<int> mixed_radix_digits(int index, std::span<const int> radices) {
  std::vector<int> digits(radices.size());
  for (int i = static_cast<int>(radices.size()) - 1; i >= 0; --i) {
    digits[i] = index % radices[i];
    index /= radices[i];
  }
  return digits;
}

inline int mixed_radix_index(std::span<const int> digits, std::span<const int> radices) {
  int index = 0;
  for (std::size_t i = 0; i < radices.size(); ++i) index = index * radices[i] + digits[i];
  return index;
}

}  // namespace detail

/// Z_{n1} x ... x Z_{nr}; element index is the mixed-radix number of its
/// exponent tuple, first factor most significant.
inline FiniteGroup abelian_group(std::vector<int> factors) {
  int order = 1;
  for (int n : factors) order *= n;
  std::string name;
  for (int n : factors) name += (name.empty() ? "Z" : "xZ") + std::to_string(n);
  if (name.empty()) name = "1";
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::vector<int>> iso(order);
  for (int a = 0; a < order; ++a) iso[a] = detail::mixed_radix_digits(a, factors);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> s(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i) s[i] = (iso[a][i] + iso[b][i]) % factors[i];
      table[static_cast<std::size_t>(a) * order + b] = detail::mixed_radix_index(s, factors);
    }
  return FiniteGroup(order, std::move(table), 0, std::move(name), factors, std::move(iso));
}

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) throw GroupError("cyclic group order must be positive");
  if (n == 1) return FiniteGroup(1, {0}, 0, "1", std::vector<int>{}, std::vector<std::vector<int>>{{}});
  return abelian_group({n});
}

/// Permutations of {0,1,2} in lexicographic order; index 0 is the identity.
inline FiniteGroup symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  return FiniteGroup::from_rule(
      6,
      [&](int a, int b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        return index(c);
      },
      "S3");
}

/// r^a s^b at index a + 4b, with s r s = r^{-1}.
inline FiniteGroup dihedral_group4() {
  return FiniteGroup::from_rule(
      8,
      [](int x, int y) {
        const int a = x % 4, b = x / 4, c = y % 4, d = y / 4;
        const int rot = ((b ? a - c : a + c) % 4 + 4) % 4;
        return rot + 4 * ((b + d) % 2);
      },
      "D4");
}

/// Units 1, i, j, k at indices 0..3 and their negatives at 4..7.
inline FiniteGroup quaternion_group() {
  // unit products without sign: i*j = k etc.; sign table for 0..3
  static constexpr int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return FiniteGroup::from_rule(
      8,
      [](int x, int y) {
        const int a = x % 4, b = y % 4;
        const int sign = (x / 4 + y / 4 + unit_sign[a][b]) % 2;
        return unit_prod[a][b] + 4 * sign;
      },
      "Q8");
}

// ---------------------------------------------------------------------------
// Representations

struct GroupRep {
  FiniteGroup group;
  int degree = 0;
  std::vector<Mat> matrices;  // one per group element

  GroupRep() = default;
  GroupRep(FiniteGroup g, int deg, std::vector<Mat> mats) : group(std::move(g)), degree(deg), matrices(std::move(mats)) {
    validate();
  }

  const Mat& operator()(int g) const { return matrices[g]; }

  void validate() const {
    if (degree < 0) throw ShapeError("negative representation degree");
    if (static_cast<int>(matrices.size()) != group.order()) throw ShapeError("one matrix per group element expected");
    for (const auto& m : matrices)
      if (m.rows() != degree || m.cols() != degree) throw ShapeError("representation matrix has wrong shape");
    if (!(matrices[group.identity()] == Mat::identity(degree))) throw GroupError("rho(identity) is not the identity");
    for (int a = 0; a < group.order(); ++a)
      for (int b = 0; b < group.order(); ++b)
        if (!(matrices[a] * matrices[b] == matrices[group.mul(a, b)]))
          throw GroupError("representation is not multiplicative");
  }
};

inline GroupRep zero_representation(const FiniteGroup& g) {
  return GroupRep(g, 0, std::vector<Mat>(g.order(), Mat(0, 0)));
}

/// Direct sum of one-dimensional representations given by values +-1
/// (or any roots of unity, as integers -1/1 here).
inline GroupRep sign_representation(const FiniteGroup& g, const std::vector<std::vector<int>>& characters) {
  const int n = static_cast<int>(characters.size());
  std::vector<Mat> mats;
  for (int a = 0; a < g.order(); ++a) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = characters[i][a];
    mats.push_back(std::move(m));
  }
  return GroupRep(g, n, std::move(mats));
}

/// All homomorphisms G -> {+1, -1}, as value vectors, sorted with the
/// trivial character first (lexicographic on the -1 positions).
inline std::vector<std::vector<int>> sign_characters(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> span{g.identity()};
  for (int a = 0; a < g.order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = g.generated_by(gens);
  }
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
    std::vector<int> val(g.order(), 0);
    val[g.identity()] = 1;
    std::vector<int> queue{g.identity()};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int x = g.mul(queue[k], gens[i]);
        if (val[x] == 0) {
          val[x] = val[queue[k]] * ((mask >> i) & 1u ? -1 : 1);
          queue.push_back(x);
        }
      }
    bool hom = true;
    for (int a = 0; a < g.order() && hom; ++a)
      for (int b = 0; b < g.order() && hom; ++b) hom = val[g.mul(a, b)] == val[a] * val[b];
    if (hom) out.push_back(std::move(val));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](int p, int q) { return p > q; });
  });
  return out;
}

/// Every subgroup, as sorted element lists, ordered by (size, elements).
inline std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found{{g.identity()}};
  std::vector<std::vector<int>> frontier{{g.identity()}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier)
      for (int a = 0; a < g.order(); ++a) {
        if (std::binary_search(h.begin(), h.end(), a)) continue;
        std::vector<int> gens = h;
        gens.push_back(a);
        auto k = g.generated_by(gens);
        if (found.insert(k).second) next.push_back(std::move(k));
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Abelian subgroups

/// A subgroup isomorphic to Z_{n1} x ... x Z_{nr}: elements[r] is the product
/// of generator powers given by the mixed-radix digits of r.
struct AbelianSubgroup {
  std::vector<int> factors;
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  /// Exponent of the dual pairing: lcm of the factors.
  int exponent() const {
    int n = 1;
    for (int f : factors) n = std::lcm(n, f);
    return n;
  }
  std::vector<int> coords(int r) const { return detail::mixed_radix_digits(r, factors); }

  /// chi_s(elements[r]) = zeta_N^{pairing(s, r)} with N = exponent().
  int pairing(int s, int r) const {
    const auto a = coords(s);
    const auto b = coords(r);
    const int n = exponent();
    long e = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) e += static_cast<long>(a[i]) * b[i] * (n / factors[i]);
    return static_cast<int>(e % n);
  }

  static AbelianSubgroup trivial(const FiniteGroup& g) { return {{}, {g.identity()}}; }

  static AbelianSubgroup from_generators(const FiniteGroup& g, const std::vector<int>& gens) {
    AbelianSubgroup a;
    for (int x : gens) a.factors.push_back(g.element_order(x));
    for (int x : gens)
      for (int y : gens)
        if (g.mul(x, y) != g.mul(y, x)) throw NotAbelian("generators do not commute");
    int order = 1;
    for (int f : a.factors) order *= f;
    std::set<int> seen;
    for (int r = 0; r < order; ++r) {
      const auto digits = detail::mixed_radix_digits(r, a.factors);
      int x = g.identity();
      for (std::size_t i = 0; i < gens.size(); ++i) x = g.mul(x, g.power(gens[i], digits[i]));
      a.elements.push_back(x);
      seen.insert(x);
    }
    if (static_cast<int>(seen.size()) != order) throw GroupError("generators do not give a direct product");
    return a;
  }

  /// The whole group, using its declared invariant factors and iso_map.
  static AbelianSubgroup whole(const FiniteGroup& g) {
    if (!g.invariant_factors()) {
      if (!g.is_abelian()) throw NotAbelian("group is not abelian");
      std::vector<int> all(g.order());
      std::iota(all.begin(), all.end(), 0);
      return decompose(g, all);
    }
    AbelianSubgroup a;
    a.factors = *g.invariant_factors();
    a.elements.assign(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) a.elements[detail::mixed_radix_index((*g.iso_map())[x], a.factors)] = x;
    return a;
  }

  /// Finds a cyclic decomposition of an abelian subgroup given by its
  /// elements: the fewest generators, lexicographically first.
  static AbelianSubgroup decompose(const FiniteGroup& g, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    if (!g.is_subgroup(subset)) throw GroupError("subset is not a subgroup");
    for (int x : subset)
      for (int y : subset)
        if (g.mul(x, y) != g.mul(y, x)) throw NotAbelian("subgroup is not abelian");
    if (subset.size() == 1) return trivial(g);
    std::vector<int> nontrivial;
    for (int x : subset)
      if (x != g.identity()) nontrivial.push_back(x);
    std::optional<AbelianSubgroup> best;
    std::vector<int> gens;
    std::function<void(std::size_t, int)> search = [&](std::size_t start, int remaining) {
      if (best) return;
      if (remaining == 0) {
        int order = 1;
        for (int x : gens) order *= g.element_order(x);
        if (order != static_cast<int>(subset.size())) return;
        try {
          best = from_generators(g, gens);
        } catch (const GroupError&) {
        }
        return;
      }
      for (std::size_t i = start; i < nontrivial.size() && !best; ++i) {
        gens.push_back(nontrivial[i]);
        search(i + 1, remaining - 1);
        gens.pop_back();
      }
    };
    for (int r = 1; r <= 4 && !best; ++r) search(0, r);
    if (!best) throw GroupError("no cyclic decomposition with at most 4 generators");
    return *best;
  }
};

/// Attaches an iso_map for the given invariant factors to an abelian group:
/// the lexicographically first generators of the right orders.
inline FiniteGroup with_invariant_factors(const FiniteGroup& g, const std::vector<int>& factors) {
  if (!g.is_abelian()) throw NotAbelian("invariant factors given for a non-abelian group");
  std::vector<int> gens;
  std::optional<AbelianSubgroup> found;
  std::function<void()> search = [&] {
    if (found) return;
    if (gens.size() == factors.size()) {
      try {
        auto a = AbelianSubgroup::from_generators(g, gens);
        if (a.order() == g.order()) found = std::move(a);
      } catch (const GroupError&) {
      }
      return;
    }
    for (int x = 0; x < g.order() && !found; ++x) {
      if (g.element_order(x) != factors[gens.size()]) continue;
      gens.push_back(x);
      search();
      gens.pop_back();
    }
  };
  search();
  if (!found) throw GroupError("group is not a product of cyclic groups of the given orders");
  std::vector<std::vector<int>> iso(g.order());
  for (int r = 0; r < g.order(); ++r) iso[found->elements[r]] = detail::mixed_radix_digits(r, factors);
  return FiniteGroup(g.order(), g.table(), g.identity(), g.name(), factors, std::move(iso));
}

// ---------------------------------------------------------------------------
// Bicharacters

/// beta(s, t) = zeta_N^{exponents[s*m + t]} on the dual of an abelian group
/// with the given cyclic factors, N = lcm(factors), m = |A|.
struct Bicharacter {
  std::vector<int> factors;
  std::vector<int> exponents;

  int size() const {
    int m = 1;
    for (int f : factors) m *= f;
    return m;
  }
  int base() const {
    int n = 1;
    for (int f : factors) n = std::lcm(n, f);
    return n;
  }
  int exponent(int s, int t) const { return exponents[static_cast<std::size_t>(s) * size() + t]; }
  CycScalar value(int s, int t) const { return root_of_unity(base(), exponent(s, t)); }

  static Bicharacter trivial(std::vector<int> factors) {
    Bicharacter b{std::move(factors), {}};
    b.exponents.assign(static_cast<std::size_t>(b.size()) * b.size(), 0);
    return b;
  }

  /// beta(e_i, e_j) = zeta_N^{k(i,j)} on generators, extended bimultiplicatively.
  static Bicharacter from_generator_exponents(std::vector<int> factors, const std::vector<std::vector<int>>& k) {
    Bicharacter b{std::move(factors), {}};
    const int m = b.size(), n = b.base();
    b.exponents.resize(static_cast<std::size_t>(m) * m);
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        const auto x = detail::mixed_radix_digits(s, b.factors);
        const auto y = detail::mixed_radix_digits(t, b.factors);
        long e = 0;
        for (std::size_t i = 0; i < b.factors.size(); ++i)
          for (std::size_t j = 0; j < b.factors.size(); ++j) e += static_cast<long>(k[i][j]) * x[i] * y[j];
        b.exponents[static_cast<std::size_t>(s) * m + t] = static_cast<int>(((e % n) + n) % n);
      }
    return b;
  }

  int add_labels(int s, int t) const {
    const auto x = detail::mixed_radix_digits(s, factors);
    const auto y = detail::mixed_radix_digits(t, factors);
    std::vector<int> z(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) z[i] = (x[i] + y[i]) % factors[i];
    return detail::mixed_radix_index(z, factors);
  }

  bool is_bimultiplicative() const {
    const int m = size(), n = base();
    if (static_cast<int>(exponents.size()) != m * m) return false;
    auto e = [&](int s, int t) { return ((exponent(s, t) % n) + n) % n; };
    for (int s = 0; s < m; ++s)
      for (int s2 = 0; s2 < m; ++s2)
        for (int t = 0; t < m; ++t) {
          if (e(add_labels(s, s2), t) != (e(s, t) + e(s2, t)) % n) return false;
          if (e(t, add_labels(s, s2)) != (e(t, s) + e(t, s2)) % n) return false;
        }
    return true;
  }

  bool is_alternating() const {
    const int n = base();
    for (int s = 0; s < size(); ++s)
      if (((exponent(s, s) % n) + n) % n != 0) return false;
    return true;
  }

  /// The alternating form beta(s,t) / beta(t,s).
  Bicharacter skew() const {
    Bicharacter b{factors, exponents};
    const int m = size(), n = base();
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t)
        b.exponents[static_cast<std::size_t>(s) * m + t] = (((exponent(s, t) - exponent(t, s)) % n) + n) % n;
    return b;
  }

  /// A bicharacter whose skew form is this alternating form: keeps the
  /// generator exponents above the diagonal and zeroes the rest.
  Bicharacter polarization() const {
    if (!is_alternating()) throw BicharacterError("polarization needs an alternating bicharacter");
    const int r = static_cast<int>(factors.size());
    std::vector<std::vector<int>> k(r, std::vector<int>(r, 0));
    auto generator = [&](int i) {
      std::vector<int> digits(r, 0);
      digits[i] = 1;
      return detail::mixed_radix_index(digits, factors);
    };
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) k[i][j] = exponent(generator(i), generator(j));
    return from_generator_exponents(factors, k);
  }

  /// The skew form is nondegenerate, so J_21^{-1} J is a
  /// nondegenerate triangular structure on k[A].
  bool has_nondegenerate_skew() const { return is_bimultiplicative() && skew().is_nondegenerate(); }

  bool is_nondegenerate() const {
    const int n = base();
    for (int s = 1; s < size(); ++s) {
      bool trivial_row = true;
      for (int t = 0; t < size() && trivial_row; ++t) trivial_row = ((exponent(s, t) % n) + n) % n == 0;
      if (trivial_row) return false;
    }
    return true;
  }
};

/// Every nondegenerate alternating bicharacter on the dual of
/// Z_{n1} x ... x Z_{nr}, in lexicographic order of generator exponents.
inline std::vector<Bicharacter> alternating_nondegenerate_bicharacters(const std::vector<int>& factors) {
  const int r = static_cast<int>(factors.size());
  Bicharacter probe{factors, {}};
  const int n = probe.base();
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) slots.emplace_back(i, j);
  std::vector<Bicharacter> out;
  std::vector<std::vector<int>> k(r, std::vector<int>(r, 0));
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == slots.size()) {
      auto b = Bicharacter::from_generator_exponents(factors, k);
      if (b.is_nondegenerate()) out.push_back(std::move(b));
      return;
    }
    const auto [i, j] = slots[idx];
    const int step = n / std::gcd(factors[i], factors[j]);
    for (int e = 0; e < n; e += step) {
      k[i][j] = e;
      k[j][i] = (n - e) % n;
      rec(idx + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace trihopf
