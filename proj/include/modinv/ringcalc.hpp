#pragma once

// Degree-by-degree computations in invariant rings: dimensions by exact
// linear algebra, the relative trace from SL2 to GL2, and rank certificates
// for free bases and generating sets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modinv/gf.hpp"
#include "modinv/group.hpp"
#include "modinv/invariants.hpp"
#include "modinv/linalg.hpp"
#include "modinv/poly.hpp"

namespace modinv {

inline constexpr std::uint64_t kMonomialGuard = 5000;

inline std::uint64_t monomial_count(int d) {
  const std::uint64_t n = static_cast<std::uint64_t>(d);
  return (n + 1) * (n + 2) * (n + 3) / 6;
}

inline void check_degree_guard(int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  if (monomial_count(d) > kMonomialGuard)
    throw std::out_of_range("degree " + std::to_string(d) + " exceeds the guard (" + std::to_string(monomial_count(d)) +
                            " monomials > " + std::to_string(kMonomialGuard) + ")");
}

namespace detail {

using MonomialIndex = std::unordered_map<std::uint64_t, std::size_t>;

inline MonomialIndex index_of(const std::vector<Monomial>& monos) {
  MonomialIndex idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i].key(), i);
  return idx;
}

/// Matrix of g on span(monos), column j = image of monos[j].
inline MatrixFq action_matrix(LinearSubstitution& sub, const Field& f, const std::vector<Monomial>& monos,
                              const MonomialIndex& idx) {
  MatrixFq m(f, monos.size(), monos.size());
  for (std::size_t j = 0; j < monos.size(); ++j) {
    const Poly img = sub.apply(Poly::monomial(f, monos[j], f.one()));
    for (const auto& t : img.terms()) m.raw(idx.at(t.mono.key()), j) = t.coeff;
  }
  return m;
}

inline std::size_t fixed_dimension(const GroupId& g, const std::vector<Monomial>& monos) {
  if (monos.empty()) return 0;
  const auto idx = index_of(monos);
  const MatrixFq id = MatrixFq::identity(g.field, monos.size());
  MatrixFq stacked;
  for (const auto& gen : generators(g)) {
    auto sub = action_substitution(gen);
    stacked = stacked.stacked(action_matrix(sub, g.field, monos, idx) - id);
  }
  if (stacked.rows() == 0) return monos.size();
  return monos.size() - rank(std::move(stacked));
}

inline std::string cache_key(const GroupId& g, int d) {
  return group_kind_name(g.kind) + "|" + g.field.to_string() + "|" + std::to_string(d);
}

}  // namespace detail

/// dim of the degree-d invariants. The action preserves the (x, y) bidegree,
/// so the fixed space is computed on each bidegree block separately.
inline std::uint64_t invariant_dimension(const GroupId& g, int d) {
  check_degree_guard(d);
  static std::mutex mu;
  static std::map<std::string, std::uint64_t> cache;
  const auto key = detail::cache_key(g, d);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::uint64_t total = 0;
  for (int a = 0; a <= d; ++a) total += detail::fixed_dimension(g, monomials_of_bidegree(a, d - a));
  std::lock_guard lock(mu);
  cache.emplace(key, total);
  return total;
}

/// Same quantity from the fixed space of the full degree-d monomial space,
/// without using the bidegree splitting. Slower; kept as a cross-check.
inline std::uint64_t invariant_dimension_unsplit(const GroupId& g, int d) {
  check_degree_guard(d);
  const auto monos = monomials_of_degree(d);
  const auto idx = detail::index_of(monos);
  std::vector<MatrixFq> ops;
  for (const auto& gen : generators(g)) {
    auto sub = action_substitution(gen);
    ops.push_back(detail::action_matrix(sub, g.field, monos, idx));
  }
  if (ops.empty()) return monos.size();
  return fixed_space(ops).cols();
}

struct DimensionTable {
  GroupKind group;
  unsigned q = 0;
  std::vector<std::uint64_t> dims;

  friend bool operator==(const DimensionTable&, const DimensionTable&) = default;
};

inline DimensionTable dimension_table(const GroupId& g, int dmax) {
  check_degree_guard(dmax);
  DimensionTable t{g.kind, g.field.order(), {}};
  for (int d = 0; d <= dmax; ++d) t.dims.push_back(invariant_dimension(g, d));
  return t;
}

// ---------------------------------------------------------------------------
// Relative trace

/// -sum_{z in F_q^*} g_z(f) with g_z = diag(z, 1); projects SL2-invariants
/// onto GL2-invariants (1/[GL2:SL2] = 1/(q-1) = -1 in F_q).
inline Poly relative_trace(const Poly& f) {
  const Field& field = f.field();
  if (!is_invariant(f, GroupId{GroupKind::SL2, field}))
    throw std::invalid_argument("relative trace input is not SL2-invariant");
  Poly sum(field);
  for (const auto& g : coset_reps_gl2_over_sl2(field)) sum += act(g, f);
  return -sum;
}

struct TraceFormulaReport {
  unsigned q = 0;
  std::size_t checked = 0;
  std::size_t fixed = 0;   // cases where the formula predicts f itself
  std::size_t killed = 0;  // cases where it predicts 0
  std::optional<std::string> first_failure;

  bool pass() const { return !first_failure; }
};

/// Runs relative_trace over the three monomial families used for the GL2 basis
/// and compares with the predicted value: f itself when the d22s exponent
/// matches the d22 exponent (shifted by s for the h_s family) modulo q-1, else 0.
inline TraceFormulaReport verify_trace_formulas(const InvariantCatalog& cat) {
  const unsigned q = cat.q();
  TraceFormulaReport rep{q, 0, 0, 0, std::nullopt};
  ProductBuilder pb(cat);
  auto run = [&](const std::vector<Factor>& factors, bool expect_fixed) {
    if (rep.first_failure) return;
    const Poly f = pb.product(factors);
    const Poly t = relative_trace(f);
    ++rep.checked;
    (expect_fixed ? rep.fixed : rep.killed)++;
    const bool ok = expect_fixed ? t == f : t.is_zero();
    if (!ok) rep.first_failure = BasisEntry{factors, 0}.label() + (expect_fixed ? " not fixed" : " not killed");
  };
  const unsigned m = q - 1;
  for (unsigned a = 0; a + 2 <= q; ++a)
    for (unsigned b = 0; b + 2 <= q; ++b) {
      const bool same = (a % m) == (b % m);
      for (unsigned i = 0; i <= q - 1; ++i)
        for (unsigned j = 0; j <= q - 1; ++j) run({{"u1s", i}, {"u1", j}, {"d22s", a}, {"d22", b}}, same);
      for (unsigned i = 0; i + 2 <= q; ++i)
        for (unsigned j = 0; j + 2 <= q; ++j)
          for (unsigned k = 1; k <= q; ++k) run({{"u1s", i}, {"u1", j}, {"u0", k}, {"d22s", a}, {"d22", b}}, same);
      for (unsigned s = 1; s + 2 <= q; ++s)
        for (unsigned k = 0; k <= q - 1; ++k) run({{h_name(s), 1}, {"u0", k}, {"d22s", a}, {"d22", b}}, a % m == (b + s) % m);
    }
  return rep;
}

// ---------------------------------------------------------------------------
// hsop and free-basis certificates

/// Degrees of {d22, c21, d22s, c21s}, or of {d22^(q-1), c21, d22s^(q-1), c21s} for GL2.
inline std::vector<int> hsop_degrees(GroupKind g, unsigned q) {
  const int qi = static_cast<int>(q);
  switch (g) {
    case GroupKind::P2:
    case GroupKind::SL2:
    case GroupKind::SL2xSL2: return {qi + 1, qi * qi - qi, qi + 1, qi * qi - qi};
    case GroupKind::GL2:
    case GroupKind::GL2xGL2: return {qi * qi - 1, qi * qi - qi, qi * qi - 1, qi * qi - qi};
    case GroupKind::U2: break;
  }
  throw std::invalid_argument("no hsop recorded for group " + group_kind_name(g));
}

inline std::vector<Factor> hsop_factors(bool gl2, unsigned q) {
  const unsigned e = gl2 ? q - 1 : 1;
  return {{"d22", e}, {"c21", 1}, {"d22s", e}, {"c21s", 1}};
}

/// Group whose invariants the basis spans, and whether its hsop is the GL2 one.
inline std::pair<GroupKind, bool> basis_setting(BasisId b) {
  switch (b) {
    case BasisId::P: return {GroupKind::P2, false};
    case BasisId::S: return {GroupKind::SL2, false};
    case BasisId::G: return {GroupKind::SL2, true};
    case BasisId::D: return {GroupKind::GL2, true};
  }
  throw std::logic_error("bad basis id");
}

struct DegreeCheck {
  int degree = 0;
  std::uint64_t count = 0;
  std::uint64_t rank = 0;
  std::uint64_t dimension = 0;

  bool ok() const { return count == rank && rank == dimension; }
  friend bool operator==(const DegreeCheck&, const DegreeCheck&) = default;
};

struct FreeBasisReport {
  BasisId basis = BasisId::S;
  unsigned q = 0;
  GroupKind group = GroupKind::SL2;
  std::vector<int> hsop_degrees;
  std::vector<DegreeCheck> degrees;  // 0..dmax
  bool pass = false;

  friend bool operator==(const FreeBasisReport&, const FreeBasisReport&) = default;
};

namespace detail {

/// Exponent vectors e with sum e_i * w_i == target.
inline void weighted_compositions(const std::vector<int>& w, int target, std::vector<unsigned>& cur, std::size_t i,
                                  std::vector<std::vector<unsigned>>& out) {
  if (i == w.size()) {
    if (target == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e * w[i] <= target; ++e) {
    cur[i] = static_cast<unsigned>(e);
    weighted_compositions(w, target - e * w[i], cur, i + 1, out);
  }
  cur[i] = 0;
}

inline std::vector<std::vector<unsigned>> weighted_compositions(const std::vector<int>& w, int target) {
  std::vector<std::vector<unsigned>> out;
  if (target < 0) return out;
  std::vector<unsigned> cur(w.size(), 0);
  weighted_compositions(w, target, cur, 0, out);
  return out;
}

/// Rank of a set of bihomogeneous polynomials of one total degree: ranks of
/// the bidegree buckets add up because the buckets share no monomials.
inline std::uint64_t bihomogeneous_rank(const Field& f, const std::vector<Poly>& polys) {
  std::map<int, std::vector<const Poly*>> buckets;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    buckets[p.leading_monomial().x_degree()].push_back(&p);
  }
  std::uint64_t total = 0;
  for (const auto& [xdeg, ps] : buckets) {
    std::unordered_map<std::uint64_t, std::size_t> col;
    for (const auto* p : ps)
      for (const auto& t : p->terms()) col.emplace(t.mono.key(), col.size());
    MatrixFq m(f, ps.size(), col.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (const auto& t : ps[i]->terms()) {
        if (t.mono.x_degree() != xdeg) throw std::logic_error("polynomial is not bihomogeneous");
        m.raw(i, col.at(t.mono.key())) = t.coeff;
      }
    total += rank(std::move(m));
  }
  return total;
}

}  // namespace detail

/// Certifies through dmax that hsop-monomials times basis elements are
/// linearly independent and span: count = rank = invariant dimension per degree.
inline FreeBasisReport verify_free_basis(BasisId which, const InvariantCatalog& cat, int dmax) {
  check_degree_guard(dmax);
  const unsigned q = cat.q();
  const auto [group, gl2_hsop] = basis_setting(which);
  FreeBasisReport rep{which, q, group, hsop_degrees(gl2_hsop ? GroupKind::GL2 : GroupKind::SL2, q), {}, true};
  const auto hsop = hsop_factors(gl2_hsop, q);
  const GroupId gid{group, cat.field()};
  const BasisCatalog basis = basis_catalog(q, which);
  ProductBuilder pb(cat);

  std::map<int, std::vector<Poly>> basis_by_degree;
  for (const auto& e : basis.entries)
    if (e.degree <= dmax) basis_by_degree[e.degree].push_back(pb.build(e));

  for (int d = 0; d <= dmax; ++d) {
    std::vector<Poly> products;
    for (const auto& [bd, polys] : basis_by_degree) {
      if (bd > d) break;
      for (const auto& ex : detail::weighted_compositions(rep.hsop_degrees, d - bd)) {
        std::vector<Factor> fs;
        for (std::size_t i = 0; i < hsop.size(); ++i) fs.push_back({hsop[i].first, hsop[i].second * ex[i]});
        const Poly mono = pb.product(fs);
        for (const auto& b : polys) products.push_back(mono * b);
      }
    }
    DegreeCheck dc{d, products.size(), detail::bihomogeneous_rank(cat.field(), products), invariant_dimension(gid, d)};
    rep.pass = rep.pass && dc.ok();
    rep.degrees.push_back(dc);
  }
  return rep;
}

inline FreeBasisReport verify_free_basis(BasisId which, unsigned q, int dmax) {
  return verify_free_basis(which, InvariantCatalog::for_order(q), dmax);
}

// ---------------------------------------------------------------------------
// Generating sets and subalgebra membership

struct NamedGenerator {
  std::string label;
  Poly poly;
  int degree;
};

/// d22^(q-1), c21, d22s^(q-1), c21s, u1s, u0, u1.
inline std::vector<NamedGenerator> gl2_generators(const InvariantCatalog& cat) {
  const unsigned q = cat.q();
  const int qi = static_cast<int>(q);
  const std::string e = q - 1 > 1 ? "^" + std::to_string(q - 1) : "";
  return {
      {"d22" + e, cat.get("d22").pow(q - 1), qi * qi - 1},
      {"c21", cat.get("c21"), qi * qi - qi},
      {"d22s" + e, cat.get("d22s").pow(q - 1), qi * qi - 1},
      {"c21s", cat.get("c21s"), qi * qi - qi},
      {"u1s", cat.get("u1s"), qi + 1},
      {"u0", cat.get("u0"), 2},
      {"u1", cat.get("u1"), qi + 1},
  };
}

/// d22, c21, d22s, c21s, u1s, u0, u1, plus h1 when q > 2.
inline std::vector<NamedGenerator> sl2_generators(const InvariantCatalog& cat, bool with_h1 = true) {
  const int qi = static_cast<int>(cat.q());
  std::vector<NamedGenerator> out;
  for (const char* n : {"d22", "c21", "d22s", "c21s", "u1s", "u0", "u1"}) out.push_back({n, cat.get(n), cat.declared_degree(n)});
  if (with_h1 && cat.q() > 2) out.push_back({"h1", cat.h(1), qi * qi - qi});
  return out;
}

namespace detail {

/// All products of generator powers of total degree d.
inline std::vector<Poly> generator_monomials(const std::vector<NamedGenerator>& gens, int d,
                                             std::vector<std::vector<Poly>>& powers) {
  std::vector<int> w;
  for (const auto& g : gens) w.push_back(g.degree);
  std::vector<Poly> out;
  for (const auto& ex : weighted_compositions(w, d)) {
    Poly p = Poly::constant(gens.front().poly.field().one());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(p);
      while (cache.size() <= ex[i]) cache.push_back(cache.back() * gens[i].poly);
      if (ex[i]) p = p * cache[ex[i]];
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace detail

struct GeneratorReport {
  unsigned q = 0;
  GroupKind group = GroupKind::GL2;
  std::vector<std::string> generators;
  std::vector<DegreeCheck> degrees;  // count = number of generator monomials
  bool pass = false;
};

/// PASS iff for every d <= dmax the generator monomials of degree d span the
/// whole degree-d invariant space (rank == dimension).
inline GeneratorReport verify_generators(const std::vector<NamedGenerator>& gens, GroupKind group, const Field& f,
                                         int dmax) {
  check_degree_guard(dmax);
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  GeneratorReport rep{f.order(), group, {}, {}, true};
  for (const auto& g : gens) rep.generators.push_back(g.label);
  const GroupId gid{group, f};
  std::vector<std::vector<Poly>> powers(gens.size());
  for (int d = 0; d <= dmax; ++d) {
    const auto monos = detail::generator_monomials(gens, d, powers);
    DegreeCheck dc{d, monos.size(), detail::bihomogeneous_rank(f, monos), invariant_dimension(gid, d)};
    rep.pass = rep.pass && dc.rank == dc.dimension;
    rep.degrees.push_back(dc);
  }
  return rep;
}

/// Whether target (homogeneous) lies in the span of generator monomials of its degree.
inline bool in_subalgebra_span(const std::vector<NamedGenerator>& gens, const Poly& target) {
  const auto deg = target.degree();
  if (!deg) return true;
  if (!target.is_homogeneous()) throw std::invalid_argument("membership target must be homogeneous");
  std::vector<std::vector<Poly>> powers(gens.size());
  auto monos = detail::generator_monomials(gens, *deg, powers);
  const auto before = detail::bihomogeneous_rank(target.field(), monos);
  monos.push_back(target);
  return detail::bihomogeneous_rank(target.field(), monos) == before;
}

struct NonmembershipReport {
  unsigned q = 0;
  bool h1_in_span = true;
  bool c21_in_span = false;  // control, expected true
  bool h0_in_span = false;   // control, expected true

  bool pass() const { return !h1_in_span && c21_in_span && h0_in_span; }
};

/// h1 against the subalgebra generated by d22, c21, d22s, c21s, u1s, u0, u1.
inline NonmembershipReport subalgebra_nonmembership_h1(const InvariantCatalog& cat) {
  if (cat.q() < 3) throw std::invalid_argument("h1 is distinct from h0 and h_(q-1) only for q >= 3");
  const auto gens = sl2_generators(cat, false);
  return {cat.q(), in_subalgebra_span(gens, cat.h(1)), in_subalgebra_span(gens, cat.get("c21")),
          in_subalgebra_span(gens, cat.h(0))};
}

}  // namespace modinv
