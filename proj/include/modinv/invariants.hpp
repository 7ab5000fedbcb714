#pragma once

// Named invariants of a vector and a covector for 2x2 groups over F_q, the
// polynomial relations among them, and the free module bases built from them.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modinv/gf.hpp"
#include "modinv/poly.hpp"

namespace modinv {

struct DicksonInvariants {
  Poly d22, c21, d22s, c21s;
};

/// d22 = det[[x2, x2^q], [x1, x1^q]], c21 = det[[x2, x2^(q^2)], [x1, x1^(q^2)]] / d22,
/// and their images under the star involution, built from the y-determinants.
inline DicksonInvariants build_dickson(const Field& f) {
  const unsigned q = f.order();
  const Poly x1 = Poly::x1(f), x2 = Poly::x2(f), y1 = Poly::y1(f), y2 = Poly::y2(f);
  DicksonInvariants out;
  out.d22 = x2 * x1.pow(q) - x2.pow(q) * x1;
  out.c21 = exact_div_or_throw(x2 * x1.pow(q * q) - x2.pow(q * q) * x1, out.d22, "c21");
  out.d22s = y1 * y2.pow(q) - y1.pow(q) * y2;
  out.c21s = exact_div_or_throw(y1 * y2.pow(q * q) - y1.pow(q * q) * y2, out.d22s, "c21s");
  return out;
}

struct PhiAndU {
  Poly phi1, phi2, phi1s, phi2s, u0, u1, u1s;
};

inline PhiAndU build_phis_and_us(const Field& f) {
  const unsigned q = f.order();
  const Poly x1 = Poly::x1(f), x2 = Poly::x2(f), y1 = Poly::y1(f), y2 = Poly::y2(f);
  PhiAndU out;
  out.phi1 = x1;
  out.phi2 = x2.pow(q) - x2 * x1.pow(q - 1);
  out.phi1s = y2;
  out.phi2s = y1.pow(q) - y1 * y2.pow(q - 1);
  out.u0 = x1 * y1 + x2 * y2;
  out.u1 = x1.pow(q) * y1 + x2.pow(q) * y2;
  out.u1s = x1 * y1.pow(q) + x2 * y2.pow(q);
  return out;
}

/// h_s = (u1^(s+1) d22s^(q-s-1) + u1s^(q-s) d22^s) / u0^q, by exact division.
inline Poly build_h(const DicksonInvariants& dk, const PhiAndU& pu, unsigned q, unsigned s) {
  if (s >= q) throw std::invalid_argument("h_s needs 0 <= s <= q-1");
  const Poly num = pu.u1.pow(s + 1) * dk.d22s.pow(q - s - 1) + pu.u1s.pow(q - s) * dk.d22.pow(s);
  return exact_div_or_throw(num, pu.u0.pow(q), "h_" + std::to_string(s));
}

inline Poly build_h(const Field& f, unsigned s) {
  return build_h(build_dickson(f), build_phis_and_us(f), f.order(), s);
}

inline std::string h_name(unsigned s) { return "h" + std::to_string(s); }

/// Every named invariant for one field, with its declared degree.
class InvariantCatalog {
 public:
  struct Entry {
    Poly poly;
    int degree;
  };

  explicit InvariantCatalog(Field f) : field_(std::move(f)) {
    const int q = static_cast<int>(field_.order());
    dickson_ = build_dickson(field_);
    phis_ = build_phis_and_us(field_);
    add("d22", dickson_.d22, q + 1);
    add("c21", dickson_.c21, q * q - q);
    add("d22s", dickson_.d22s, q + 1);
    add("c21s", dickson_.c21s, q * q - q);
    add("phi1", phis_.phi1, 1);
    add("phi2", phis_.phi2, q);
    add("phi1s", phis_.phi1s, 1);
    add("phi2s", phis_.phi2s, q);
    add("u0", phis_.u0, 2);
    add("u1", phis_.u1, q + 1);
    add("u1s", phis_.u1s, q + 1);
    for (int s = 0; s < q; ++s)
      add(h_name(static_cast<unsigned>(s)), build_h(dickson_, phis_, static_cast<unsigned>(q), static_cast<unsigned>(s)), q * q - q);
  }

  static InvariantCatalog for_order(std::uint64_t q) { return InvariantCatalog(field_of_order(q)); }

  const Field& field() const { return field_; }
  unsigned q() const { return field_.order(); }

  const Poly& get(const std::string& name) const { return entry(name).poly; }
  int declared_degree(const std::string& name) const { return entry(name).degree; }
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  const Poly& h(unsigned s) const { return get(h_name(s)); }
  const std::vector<std::string>& names() const { return order_; }

  const DicksonInvariants& dickson() const { return dickson_; }
  const PhiAndU& phis() const { return phis_; }

 private:
  const Entry& entry(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw std::invalid_argument("unknown invariant '" + name + "'");
    return it->second;
  }
  void add(const std::string& name, Poly p, int deg) {
    entries_.emplace(name, Entry{std::move(p), deg});
    order_.push_back(name);
  }

  Field field_;
  DicksonInvariants dickson_;
  PhiAndU phis_;
  std::map<std::string, Entry> entries_;
  std::vector<std::string> order_;
};

// ---------------------------------------------------------------------------
// Identities

enum class IdentityTag {
  U0Hypersurface,
  PhiProduct,
  PhiProductStar,
  Phi1Power,
  Phi1PowerStar,
  Phi2Power,
  Phi2PowerStar,
  U0Power,
  U1Power,
  U1PowerStar,
  U1Phi,
  U1PhiStar,
  HShiftDown,
  HShiftUp,
  HFirst,
  HLast,
};

inline const std::vector<IdentityTag>& all_identity_tags() {
  static const std::vector<IdentityTag> tags = {
      IdentityTag::U0Hypersurface, IdentityTag::PhiProduct,  IdentityTag::PhiProductStar, IdentityTag::Phi1Power,
      IdentityTag::Phi1PowerStar,  IdentityTag::Phi2Power,   IdentityTag::Phi2PowerStar,  IdentityTag::U0Power,
      IdentityTag::U1Power,        IdentityTag::U1PowerStar, IdentityTag::U1Phi,          IdentityTag::U1PhiStar,
      IdentityTag::HShiftDown,     IdentityTag::HShiftUp,    IdentityTag::HFirst,         IdentityTag::HLast,
  };
  return tags;
}

struct IdentityInfo {
  const char* tag;
  const char* relation;
};

inline IdentityInfo identity_info(IdentityTag t) {
  switch (t) {
    case IdentityTag::U0Hypersurface: return {"u0-hypersurface", "u0^q = (phi1*phi1s)^(q-1)*u0 + phi1^q*phi2s + phi1s^q*phi2"};
    case IdentityTag::PhiProduct: return {"phi-product", "phi1*phi2 = -d22"};
    case IdentityTag::PhiProductStar: return {"phi-product-star", "phi1s*phi2s = -d22s"};
    case IdentityTag::Phi1Power: return {"phi1-power", "phi1^(q(q-1)+1) = phi1*c21 + d22*phi2^(q-2)"};
    case IdentityTag::Phi1PowerStar: return {"phi1-power-star", "phi1s^(q(q-1)+1) = phi1s*c21s + d22s*phi2s^(q-2)"};
    case IdentityTag::Phi2Power: return {"phi2-power", "phi2^(q-1) = -phi1^(q(q-1)) + c21"};
    case IdentityTag::Phi2PowerStar: return {"phi2-power-star", "phi2s^(q-1) = -phi1s^(q(q-1)) + c21s"};
    case IdentityTag::U0Power: return {"u0-power", "u0^(q+1) = u1*u1s - d22*d22s"};
    case IdentityTag::U1Power: return {"u1-power", "u1^q = c21*u0^q - d22^(q-1)*u1s"};
    case IdentityTag::U1PowerStar: return {"u1-power-star", "u1s^q = c21s*u0^q - d22s^(q-1)*u1"};
    case IdentityTag::U1Phi: return {"u1-phi", "u1 = phi1^(q-1)*u0 + phi1s*phi2"};
    case IdentityTag::U1PhiStar: return {"u1-phi-star", "u1s = phi1s^(q-1)*u0 + phi1*phi2s"};
    case IdentityTag::HShiftDown: return {"h-shift-down", "u1s*h_s = u0*u1^s*d22s^(q-s-1) + d22*h_(s-1), 1 <= s <= q-1"};
    case IdentityTag::HShiftUp: return {"h-shift-up", "u1*h_s = u0*u1s^(q-s-1)*d22^s + d22s*h_(s+1), 0 <= s <= q-2"};
    case IdentityTag::HFirst: return {"h-first", "u0*u1s^(q-1) = u1*h_0 - d22s*h_1"};
    case IdentityTag::HLast: return {"h-last", "u0*u1^(q-1) = u1s*h_(q-1) - d22*h_(q-2)"};
  }
  throw std::logic_error("bad identity tag");
}

inline std::string identity_name(IdentityTag t) { return identity_info(t).tag; }

inline IdentityTag parse_identity_tag(const std::string& s) {
  for (auto t : all_identity_tags())
    if (identity_name(t) == s) return t;
  throw std::invalid_argument("unknown identity tag '" + s + "'");
}

inline constexpr std::size_t kWitnessTerms = 10;

struct IdentityResult {
  unsigned q = 0;
  std::string tag;
  std::string relation;
  bool pass = false;
  std::optional<std::string> witness;  // lhs - rhs, truncated, only on failure

  friend bool operator==(const IdentityResult&, const IdentityResult&) = default;
};

namespace detail {

inline IdentityResult compare_sides(unsigned q, const std::string& tag, const std::string& relation, const Poly& lhs,
                                    const Poly& rhs, const std::string& where = {}) {
  IdentityResult r{q, tag, relation, true, std::nullopt};
  const Poly diff = lhs - rhs;
  if (!diff.is_zero()) {
    r.pass = false;
    r.witness = (where.empty() ? "" : where + ": ") + diff.to_string_truncated(kWitnessTerms);
  }
  return r;
}

}  // namespace detail

/// Builds both sides from the catalog; PASS iff lhs - rhs is the zero polynomial.
inline IdentityResult verify_identity(const InvariantCatalog& cat, IdentityTag tag) {
  const unsigned q = cat.q();
  const auto& dk = cat.dickson();
  const auto& pu = cat.phis();
  const Field& f = cat.field();
  const auto info = identity_info(tag);
  auto check = [&](const Poly& lhs, const Poly& rhs) { return detail::compare_sides(q, info.tag, info.relation, lhs, rhs); };
  const unsigned qq = q * (q - 1);
  switch (tag) {
    case IdentityTag::U0Hypersurface:
      return check(pu.u0.pow(q), (pu.phi1 * pu.phi1s).pow(q - 1) * pu.u0 + pu.phi1.pow(q) * pu.phi2s + pu.phi1s.pow(q) * pu.phi2);
    case IdentityTag::PhiProduct: return check(pu.phi1 * pu.phi2, -dk.d22);
    case IdentityTag::PhiProductStar: return check(pu.phi1s * pu.phi2s, -dk.d22s);
    case IdentityTag::Phi1Power: return check(pu.phi1.pow(qq + 1), pu.phi1 * dk.c21 + dk.d22 * pu.phi2.pow(q - 2));
    case IdentityTag::Phi1PowerStar:
      return check(pu.phi1s.pow(qq + 1), pu.phi1s * dk.c21s + dk.d22s * pu.phi2s.pow(q - 2));
    case IdentityTag::Phi2Power: return check(pu.phi2.pow(q - 1), dk.c21 - pu.phi1.pow(qq));
    case IdentityTag::Phi2PowerStar: return check(pu.phi2s.pow(q - 1), dk.c21s - pu.phi1s.pow(qq));
    case IdentityTag::U0Power: return check(pu.u0.pow(q + 1), pu.u1 * pu.u1s - dk.d22 * dk.d22s);
    case IdentityTag::U1Power: return check(pu.u1.pow(q), dk.c21 * pu.u0.pow(q) - dk.d22.pow(q - 1) * pu.u1s);
    case IdentityTag::U1PowerStar: return check(pu.u1s.pow(q), dk.c21s * pu.u0.pow(q) - dk.d22s.pow(q - 1) * pu.u1);
    case IdentityTag::U1Phi: return check(pu.u1, pu.phi1.pow(q - 1) * pu.u0 + pu.phi1s * pu.phi2);
    case IdentityTag::U1PhiStar: return check(pu.u1s, pu.phi1s.pow(q - 1) * pu.u0 + pu.phi1 * pu.phi2s);
    case IdentityTag::HShiftDown:
      for (unsigned s = 1; s <= q - 1; ++s) {
        auto r = detail::compare_sides(q, info.tag, info.relation, pu.u1s * cat.h(s),
                                       pu.u0 * pu.u1.pow(s) * dk.d22s.pow(q - s - 1) + dk.d22 * cat.h(s - 1),
                                       "s=" + std::to_string(s));
        if (!r.pass) return r;
      }
      return {q, info.tag, info.relation, true, std::nullopt};
    case IdentityTag::HShiftUp:
      for (unsigned s = 0; s + 2 <= q; ++s) {
        auto r = detail::compare_sides(q, info.tag, info.relation, pu.u1 * cat.h(s),
                                       pu.u0 * pu.u1s.pow(q - s - 1) * dk.d22.pow(s) + dk.d22s * cat.h(s + 1),
                                       "s=" + std::to_string(s));
        if (!r.pass) return r;
      }
      return {q, info.tag, info.relation, true, std::nullopt};
    case IdentityTag::HFirst: return check(pu.u0 * pu.u1s.pow(q - 1), pu.u1 * cat.h(0) - dk.d22s * cat.h(1));
    case IdentityTag::HLast: return check(pu.u0 * pu.u1.pow(q - 1), pu.u1s * cat.h(q - 1) - dk.d22 * cat.h(q - 2));
  }
  (void)f;
  throw std::logic_error("bad identity tag");
}

inline IdentityResult verify_identity(const InvariantCatalog& cat, const std::string& tag) {
  return verify_identity(cat, parse_identity_tag(tag));
}

/// star(h_s) == h_(q-1-s) for every s.
inline IdentityResult verify_h_star_symmetry(const InvariantCatalog& cat) {
  const unsigned q = cat.q();
  for (unsigned s = 0; s < q; ++s) {
    auto r = detail::compare_sides(q, "h-star-symmetry", "star(h_s) = h_(q-1-s)", cat.h(s).star(), cat.h(q - 1 - s),
                                   "s=" + std::to_string(s));
    if (!r.pass) return r;
  }
  return {q, "h-star-symmetry", "star(h_s) = h_(q-1-s)", true, std::nullopt};
}

inline IdentityResult verify_h_first_is_c21s(const InvariantCatalog& cat) {
  return detail::compare_sides(cat.q(), "h0-is-c21s", "h_0 = c21s", cat.h(0), cat.dickson().c21s);
}

inline IdentityResult verify_h_last_is_c21(const InvariantCatalog& cat) {
  return detail::compare_sides(cat.q(), "hlast-is-c21", "h_(q-1) = c21", cat.h(cat.q() - 1), cat.dickson().c21);
}

/// The rearranged form of h_s obtained by expanding (d22*d22s)^s through
/// u0^(q+1) = u1*u1s - d22*d22s, cross-multiplied so no division is needed:
/// h_s * u0^q * d22s^s = c21s*u0^q*u1^s + u1s^(q-s) * sum_{k<s} (-1)^(s-k) C(s,k) (u1*u1s)^k u0^((q+1)(s-k)).
inline IdentityResult verify_h_rearranged(const InvariantCatalog& cat) {
  const unsigned q = cat.q();
  const auto& dk = cat.dickson();
  const auto& pu = cat.phis();
  const Field& f = cat.field();
  const char* tag = "h-rearranged";
  const char* rel = "h_s*u0^q*d22s^s = c21s*u0^q*u1^s + u1s^(q-s)*sum_{k<s} (-1)^(s-k)*C(s,k)*(u1*u1s)^k*u0^((q+1)(s-k))";
  for (unsigned s = 0; s < q; ++s) {
    Poly sum(f);
    std::int64_t binom = 1;  // C(s, k)
    for (unsigned k = 0; k < s; ++k) {
      const std::int64_t sign = ((s - k) % 2 == 0) ? 1 : -1;
      sum += f.from_int(sign * binom) * ((pu.u1 * pu.u1s).pow(k) * pu.u0.pow((q + 1) * (s - k)));
      binom = binom * static_cast<std::int64_t>(s - k) / static_cast<std::int64_t>(k + 1);
    }
    const Poly lhs = cat.h(s) * pu.u0.pow(q) * dk.d22s.pow(s);
    const Poly rhs = dk.c21s * pu.u0.pow(q) * pu.u1.pow(s) + pu.u1s.pow(q - s) * sum;
    auto r = detail::compare_sides(q, tag, rel, lhs, rhs, "s=" + std::to_string(s));
    if (!r.pass) return r;
  }
  return {q, tag, rel, true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Free module bases

enum class BasisId { P, S, G, D };

inline std::string basis_name(BasisId b) {
  switch (b) {
    case BasisId::P: return "P";
    case BasisId::S: return "S";
    case BasisId::G: return "G";
    case BasisId::D: return "D";
  }
  return "?";
}

inline BasisId parse_basis_id(const std::string& s) {
  for (auto b : {BasisId::P, BasisId::S, BasisId::G, BasisId::D})
    if (basis_name(b) == s) return b;
  throw std::invalid_argument("unknown basis '" + s + "' (expected P, S, G or D)");
}

using Factor = std::pair<std::string, unsigned>;

/// A basis element as a product of powers of named catalog invariants.
struct BasisEntry {
  std::vector<Factor> factors;
  int degree = 0;

  std::string label() const {
    std::string out;
    for (const auto& [name, e] : factors) {
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += name;
      if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
  }
};

struct BasisCatalog {
  BasisId id;
  unsigned q = 0;
  std::vector<BasisEntry> entries;

  std::size_t size() const { return entries.size(); }
  std::vector<int> degrees() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.degree);
    return out;
  }
};

inline int factor_degree(const std::string& name, unsigned q) {
  const int qi = static_cast<int>(q);
  if (name == "phi1" || name == "phi1s") return 1;
  if (name == "phi2" || name == "phi2s") return qi;
  if (name == "u0") return 2;
  if (name == "u1" || name == "u1s" || name == "d22" || name == "d22s") return qi + 1;
  if (name == "c21" || name == "c21s" || name.rfind('h', 0) == 0) return qi * qi - qi;
  throw std::invalid_argument("unknown invariant '" + name + "'");
}

namespace detail {

inline BasisEntry make_entry(unsigned q, std::vector<Factor> factors) {
  BasisEntry e;
  for (const auto& [n, k] : factors) e.degree += factor_degree(n, q) * static_cast<int>(k);
  std::erase_if(factors, [](const Factor& fct) { return fct.second == 0; });
  e.factors = std::move(factors);
  return e;
}

inline std::vector<BasisEntry> s_basis(unsigned q) {
  std::vector<BasisEntry> out;
  for (unsigned i = 0; i <= q - 1; ++i)
    for (unsigned j = 0; j <= q - 1; ++j) out.push_back(make_entry(q, {{"u1s", i}, {"u1", j}}));
  for (unsigned i = 0; i + 2 <= q; ++i)
    for (unsigned j = 0; j + 2 <= q; ++j)
      for (unsigned k = 1; k <= q; ++k) out.push_back(make_entry(q, {{"u1s", i}, {"u1", j}, {"u0", k}}));
  for (unsigned s = 1; s + 2 <= q; ++s)
    for (unsigned k = 0; k <= q - 1; ++k) out.push_back(make_entry(q, {{h_name(s), 1}, {"u0", k}}));
  return out;
}

}  // namespace detail

/// Enumerates one of the four free bases by recipe; polynomials are built on demand.
inline BasisCatalog basis_catalog(unsigned q, BasisId which) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  BasisCatalog cat{which, q, {}};
  auto& out = cat.entries;
  const unsigned top = q * (q - 1);
  switch (which) {
    case BasisId::P:
      for (unsigned i = 0; i <= top; ++i)
        for (unsigned j = 0; j <= top; ++j)
          for (unsigned k = 0; k <= q - 1; ++k) out.push_back(detail::make_entry(q, {{"phi1", i}, {"phi1s", j}, {"u0", k}}));
      for (unsigned i = 0; i <= top; ++i)
        for (unsigned j = 1; j + 2 <= q; ++j)
          for (unsigned k = 0; k <= q - 1; ++k) out.push_back(detail::make_entry(q, {{"phi1", i}, {"phi2s", j}, {"u0", k}}));
      for (unsigned i = 0; i <= top; ++i)
        for (unsigned j = 1; j + 2 <= q; ++j)
          for (unsigned k = 0; k <= q - 1; ++k) out.push_back(detail::make_entry(q, {{"phi1s", i}, {"phi2", j}, {"u0", k}}));
      for (unsigned i = 1; i + 2 <= q; ++i)
        for (unsigned j = 1; j + 2 <= q; ++j)
          for (unsigned k = 0; k <= q - 1; ++k) out.push_back(detail::make_entry(q, {{"phi2", i}, {"phi2s", j}, {"u0", k}}));
      break;
    case BasisId::S: out = detail::s_basis(q); break;
    case BasisId::G: {
      const auto s = detail::s_basis(q);
      for (unsigned a = 0; a + 2 <= q; ++a)
        for (unsigned b = 0; b + 2 <= q; ++b)
          for (const auto& e : s) {
            auto factors = e.factors;
            factors.insert(factors.begin(), {{"d22s", a}, {"d22", b}});
            out.push_back(detail::make_entry(q, factors));
          }
      break;
    }
    case BasisId::D:
      for (unsigned a = 0; a + 2 <= q; ++a) {
        for (unsigned i = 0; i <= q - 1; ++i)
          for (unsigned j = 0; j <= q - 1; ++j)
            out.push_back(detail::make_entry(q, {{"u1s", i}, {"u1", j}, {"d22s", a}, {"d22", a}}));
        for (unsigned i = 0; i + 2 <= q; ++i)
          for (unsigned j = 0; j + 2 <= q; ++j)
            for (unsigned k = 1; k <= q; ++k)
              out.push_back(detail::make_entry(q, {{"u1s", i}, {"u1", j}, {"u0", k}, {"d22s", a}, {"d22", a}}));
      }
      // The d22s exponent is the residue of beta + s mod q-1: only those
      // products are fixed by the relative trace onto GL2.
      for (unsigned s = 1; s + 2 <= q; ++s)
        for (unsigned k = 0; k <= q - 1; ++k)
          for (unsigned b = 0; b + 2 <= q; ++b)
            out.push_back(detail::make_entry(q, {{h_name(s), 1}, {"u0", k}, {"d22s", (b + s) % (q - 1)}, {"d22", b}}));
      break;
  }
  return cat;
}

/// Materialises products of catalog invariants, caching powers.
class ProductBuilder {
 public:
  explicit ProductBuilder(const InvariantCatalog& cat) : cat_(cat) {}

  const Poly& power(const std::string& name, unsigned e) {
    auto& cache = powers_[name];
    if (cache.empty()) cache.push_back(Poly::constant(cat_.field().one()));
    while (cache.size() <= e) cache.push_back(cache.back() * cat_.get(name));
    return cache[e];
  }

  Poly product(const std::vector<Factor>& factors) {
    Poly out = Poly::constant(cat_.field().one());
    for (const auto& [name, e] : factors) out = out * power(name, e);
    return out;
  }

  Poly build(const BasisEntry& e) { return product(e.factors); }

 private:
  const InvariantCatalog& cat_;
  std::map<std::string, std::vector<Poly>> powers_;
};

}  // namespace modinv
