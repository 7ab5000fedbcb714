// Acceptance run: one PASS/FAIL line per criterion with a wall-clock budget.
// Every check is exact (finite field and integer arithmetic); the only
// tolerance is the time budget pinned next to each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "modinv/modinv.hpp"

using namespace modinv;

namespace {

struct Criterion {
  const char* id;
  const char* what;
  double budget_seconds;
  std::function<bool(std::ostringstream&)> run;
};

std::vector<BigInt> sparse(std::initializer_list<std::pair<int, int>> terms) {
  std::vector<BigInt> out;
  for (auto [e, c] : terms) {
    if (out.size() <= static_cast<std::size_t>(e)) out.resize(e + 1);
    out[e] = c;
  }
  return out;
}

HilbertSeries basis_series(unsigned q, BasisId b) {
  const auto [group, gl2] = basis_setting(b);
  (void)gl2;
  return from_free_module(basis_catalog(q, b).degrees(), hsop_degrees(group, q));
}

bool series_matches_dims(unsigned q, const HilbertSeries& h, GroupKind g, int dmax, std::ostringstream& why) {
  const auto e = expand(h, dmax);
  const GroupId id{g, field_of_order(q)};
  for (int d = 0; d <= dmax; ++d) {
    const auto dim = invariant_dimension(id, d);
    if (e[d] != dim) {
      why << group_kind_name(g) << " q=" << q << " d=" << d << ": series " << e[d] << " vs " << dim;
      return false;
    }
  }
  return true;
}

bool identities(std::ostringstream& why) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto cat = InvariantCatalog::for_order(q);
    std::vector<IdentityResult> rs;
    for (auto t : all_identity_tags()) rs.push_back(verify_identity(cat, t));
    rs.push_back(verify_h_star_symmetry(cat));
    rs.push_back(verify_h_first_is_c21s(cat));
    rs.push_back(verify_h_last_is_c21(cat));
    for (const auto& r : rs)
      if (!r.pass) {
        why << "q=" << q << " " << r.tag << " witness " << r.witness.value_or("");
        return false;
      }
  }
  return true;
}

bool h_family(std::ostringstream& why) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto cat = InvariantCatalog::for_order(q);
    const GroupId sl2{GroupKind::SL2, cat.field()};
    for (unsigned s = 0; s < q; ++s) {
      const Poly h = build_h(cat.field(), s);  // throws NotDivisible if the division is inexact
      if (h.is_zero() || !h.is_homogeneous() || h.degree() != static_cast<int>(q * (q - 1))) {
        why << "q=" << q << " h" << s << " has the wrong shape";
        return false;
      }
      if (!is_invariant(h, sl2)) {
        why << "q=" << q << " h" << s << " not invariant under the generators";
        return false;
      }
      if (q <= 3 && !is_invariant(h, sl2, InvarianceMode::Exhaustive)) {
        why << "q=" << q << " h" << s << " not invariant under the whole group";
        return false;
      }
    }
  }
  return true;
}

bool closed_form_q3(std::ostringstream& why) {
  const auto parts = sl2_series_parts(3);
  const bool ok = parts.h1 == sparse({{0, 1}, {4, 2}, {8, 3}, {12, 2}, {16, 1}}) &&
                  parts.h2_total == sparse({{2, 1}, {4, 1}, {6, 3}, {8, 2}, {10, 3}, {12, 1}, {14, 1}}) &&
                  parts.h3 == sparse({{6, 1}, {8, 1}, {10, 1}}) &&
                  parts.series.denominator == std::vector<int>{4, 6, 4, 6} &&
                  series_equal(parts.series, basis_series(3, BasisId::S));
  const auto g = gorenstein_check(parts.series);
  if (!ok) why << "closed-form parts differ at q=3";
  if (g.exponent != 4) why << " gorenstein exponent " << g.exponent.value_or(-1);
  return ok && g.exponent == 4;
}

bool series_vs_dimensions(std::ostringstream& why) {
  return series_matches_dims(2, sl2_series_closed_form(2), GroupKind::SL2, 24, why) &&
         series_matches_dims(3, sl2_series_closed_form(3), GroupKind::SL2, 18, why) &&
         series_matches_dims(3, basis_series(3, BasisId::D), GroupKind::GL2, 18, why) &&
         series_matches_dims(2, basis_series(2, BasisId::P), GroupKind::P2, 16, why) &&
         series_matches_dims(3, basis_series(3, BasisId::P), GroupKind::P2, 16, why);
}

bool free_bases(std::ostringstream& why) {
  const std::vector<std::pair<BasisId, unsigned>> runs = {
      {BasisId::S, 2}, {BasisId::S, 3}, {BasisId::P, 2}, {BasisId::P, 3}, {BasisId::D, 3}};
  for (auto [b, q] : runs) {
    const auto rep = verify_free_basis(b, q, 12);
    if (!rep.pass) {
      why << basis_name(b) << " q=" << q;
      for (const auto& c : rep.degrees)
        if (!c.ok())
          why << " d=" << c.degree << " count=" << c.count << " rank=" << c.rank << " dim=" << c.dimension;
      return false;
    }
  }
  return true;
}

bool gorenstein(std::ostringstream& why) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto s = gorenstein_check(sl2_series_closed_form(q));
    const auto g = gorenstein_check(basis_series(q, BasisId::D));
    if (s.exponent != 4 || g.exponent != 4) {
      why << "q=" << q << " sl2 " << s.exponent.value_or(-1) << " gl2 " << g.exponent.value_or(-1);
      return false;
    }
  }
  return true;
}

bool trace(std::ostringstream& why) {
  const auto rep = verify_trace_formulas(InvariantCatalog::for_order(3));
  why << rep.checked << " cases, " << rep.fixed << " fixed, " << rep.killed << " killed";
  if (rep.first_failure) why << "; first failure " << *rep.first_failure;
  return rep.pass() && rep.checked > 0 && rep.fixed > 0 && rep.killed > 0;
}

bool generation(std::ostringstream& why) {
  for (unsigned q : {2u, 3u}) {
    const auto cat = InvariantCatalog::for_order(q);
    const auto rep = verify_generators(gl2_generators(cat), GroupKind::GL2, cat.field(), 12);
    if (!rep.pass) {
      why << "gl2 generators q=" << q;
      return false;
    }
  }
  const auto nm = subalgebra_nonmembership_h1(InvariantCatalog::for_order(3));
  why << "h1 in span: " << (nm.h1_in_span ? "yes" : "no") << ", h0 control: " << (nm.h0_in_span ? "yes" : "no");
  return nm.pass();
}

bool power_sums(std::ostringstream& why) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const Field f = field_of_order(q);
    for (std::uint64_t a = 1; a <= 3 * (q - 1); ++a) {
      const FieldElem expected = a % (q - 1) == 0 ? -f.one() : f.zero();
      if (power_sum(f, a) != expected) {
        why << "q=" << q << " a=" << a;
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"C1", "polynomial identities, q = 2..5", 30, identities},
      {"C2", "h_s exact and SL2-invariant, q = 2..5", 30, h_family},
      {"C3", "closed-form SL2 series parts at q = 3", 1, closed_form_q3},
      {"C4", "series expansions equal invariant dimensions", 600, series_vs_dimensions},
      {"C5", "free-module certificates up to degree 12", 600, free_bases},
      {"C6", "Gorenstein exponent 4 for SL2 and GL2, q = 2..5", 1, gorenstein},
      {"C7", "relative trace case formulas at q = 3", 120, trace},
      {"C8", "GL2 generators and h1 nonmembership", 600, generation},
      {"C9", "power sums of F_q^*", 1, power_sums},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream why;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      ok = false;
      why << " (over budget " << c.budget_seconds << " s)";
    }
    if (!ok) ++failures;
    std::printf("%s %s  %s  [%.2f s]%s%s\n", ok ? "PASS" : "FAIL", c.id, c.what, secs, why.str().empty() ? "" : "  ",
                why.str().c_str());
  }
  std::printf("%d/%zu criteria PASS\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
