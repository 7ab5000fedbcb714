#pragma once

// Sparse polynomials in F_q[x1, x2, y1, y2] under graded reverse lex order
// with x1 > x2 > y1 > y2.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "modinv/gf.hpp"

namespace modinv {

enum class Var : int { x1 = 0, x2 = 1, y1 = 2, y2 = 3 };

inline constexpr std::array<const char*, 4> kVarNames = {"x1", "x2", "y1", "y2"};

struct Monomial {
  std::array<std::uint16_t, 4> exps{};

  static Monomial of(unsigned a, unsigned b, unsigned c, unsigned d) {
    return Monomial{{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c),
                     static_cast<std::uint16_t>(d)}};
  }

  int degree() const { return exps[0] + exps[1] + exps[2] + exps[3]; }
  int x_degree() const { return exps[0] + exps[1]; }
  int y_degree() const { return exps[2] + exps[3]; }

  // Monotone in grevlex: larger key <=> larger monomial. Bijective.
  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(degree()) << 48) | (static_cast<std::uint64_t>(0xFFFFu - exps[3]) << 32) |
           (static_cast<std::uint64_t>(0xFFFFu - exps[2]) << 16) | static_cast<std::uint64_t>(0xFFFFu - exps[1]);
  }

  static Monomial from_key(std::uint64_t k) {
    Monomial m;
    const auto deg = static_cast<unsigned>(k >> 48);
    m.exps[3] = static_cast<std::uint16_t>(0xFFFFu - ((k >> 32) & 0xFFFFu));
    m.exps[2] = static_cast<std::uint16_t>(0xFFFFu - ((k >> 16) & 0xFFFFu));
    m.exps[1] = static_cast<std::uint16_t>(0xFFFFu - (k & 0xFFFFu));
    m.exps[0] = static_cast<std::uint16_t>(deg - m.exps[1] - m.exps[2] - m.exps[3]);
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < 4; ++i) {
      const unsigned e = static_cast<unsigned>(exps[i]) + o.exps[i];
      if (e > 0x3FFF) throw std::overflow_error("monomial exponent overflow");
      m.exps[i] = static_cast<std::uint16_t>(e);
    }
    return m;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < 4; ++i)
      if (exps[i] > o.exps[i]) return false;
    return true;
  }

  /// o / *this; caller guarantees divides(o).
  Monomial cofactor(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < 4; ++i) m.exps[i] = static_cast<std::uint16_t>(o.exps[i] - exps[i]);
    return m;
  }

  /// Image under x1<->y2, x2<->y1.
  Monomial starred() const { return Monomial{{exps[3], exps[2], exps[1], exps[0]}}; }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < 4; ++i) {
      if (exps[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += kVarNames[i];
      if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.key() < b.key(); }
};

/// All monomials of total degree d, descending in the monomial order.
inline std::vector<Monomial> monomials_of_degree(int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c) out.push_back(Monomial::of(a, b, c, d - a - b - c));
  std::sort(out.begin(), out.end(), [](const Monomial& l, const Monomial& r) { return r < l; });
  return out;
}

/// Monomials with x-degree a and y-degree b, descending.
inline std::vector<Monomial> monomials_of_bidegree(int a, int b) {
  std::vector<Monomial> out;
  for (int i = a; i >= 0; --i)
    for (int j = b; j >= 0; --j) out.push_back(Monomial::of(i, a - i, j, b - j));
  std::sort(out.begin(), out.end(), [](const Monomial& l, const Monomial& r) { return r < l; });
  return out;
}

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;  // field code, never zero inside a Poly
  friend bool operator==(const Term&, const Term&) = default;
};

class Poly;

struct NotDivisible {
  Monomial remainder_lead;
  FieldElem coefficient;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : field_(std::move(f)) {}

  static Poly var(const Field& f, Var v) {
    Monomial m;
    m.exps[static_cast<int>(v)] = 1;
    return monomial(f, m, f.one());
  }
  static Poly x1(const Field& f) { return var(f, Var::x1); }
  static Poly x2(const Field& f) { return var(f, Var::x2); }
  static Poly y1(const Field& f) { return var(f, Var::y1); }
  static Poly y2(const Field& f) { return var(f, Var::y2); }

  static Poly constant(const FieldElem& c) { return monomial(c.field(), Monomial{}, c); }
  static Poly monomial(const Field& f, const Monomial& m, const FieldElem& c) {
    Poly p(f);
    if (!(c.field() == f)) throw std::invalid_argument("coefficient from a different field model");
    if (!c.is_zero()) p.terms_.push_back({m, c.code()});
    return p;
  }

  /// Canonicalises an arbitrary term list: merges duplicates, drops zeros, sorts.
  static Poly from_terms(const Field& f, const std::vector<std::pair<Monomial, FieldElem>>& terms) {
    std::unordered_map<std::uint64_t, std::uint32_t> acc;
    const auto& raw = f.raw();
    for (const auto& [m, c] : terms) {
      if (!(c.field() == f)) throw std::invalid_argument("coefficient from a different field model");
      auto& slot = acc[m.key()];
      slot = raw.add(slot, c.code());
    }
    return from_accumulator(f, acc);
  }

  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree, or nullopt for the zero polynomial.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().mono.degree();  // grevlex is degree-compatible
  }

  bool is_homogeneous() const {
    return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
  }

  Poly homogeneous_component(int d) const {
    Poly out(field_);
    for (const auto& t : terms_)
      if (t.mono.degree() == d) out.terms_.push_back(t);
    return out;
  }

  FieldElem coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& mm) { return mm < t.mono; });
    if (it != terms_.end() && it->mono == m) return field_.from_code(it->coeff);
    return field_.zero();
  }

  FieldElem leading_coefficient() const { return field_.from_code(terms_.at(0).coeff); }
  const Monomial& leading_monomial() const { return terms_.at(0).mono; }

  Poly operator+(const Poly& o) const { return merge(o, false); }
  Poly operator-(const Poly& o) const { return merge(o, true); }
  Poly operator-() const {
    Poly out(field_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff = field_.raw().neg(t.coeff);
    return out;
  }

  Poly operator*(const Poly& o) const {
    check(o);
    if (terms_.empty() || o.terms_.empty()) return Poly(field_);
    if (o.terms_.size() == 1) return mul_term(o.terms_[0]);
    if (terms_.size() == 1) return o.mul_term(terms_[0]);
    const auto& raw = field_.raw();
    std::unordered_map<std::uint64_t, std::uint32_t> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) {
        auto& slot = acc[(a.mono * b.mono).key()];
        slot = raw.add(slot, raw.mul(a.coeff, b.coeff));
      }
    return from_accumulator(field_, acc);
  }

  Poly scale(const FieldElem& c) const {
    if (!(c.field() == field_)) throw std::invalid_argument("scalar from a different field model");
    if (c.is_zero()) return Poly(field_);
    Poly out(field_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff = field_.raw().mul(t.coeff, c.code());
    return out;
  }

  Poly pow(unsigned e) const {
    Poly result = Poly::constant(field_.one());
    Poly base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Variable swap x1<->y2, x2<->y1.
  Poly star() const {
    Poly out(field_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono.starred(), t.coeff});
    std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& a, const Term& b) { return b.mono < a.mono; });
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      if (!out.empty()) out += " + ";
      const FieldElem c = field_.from_code(t.coeff);
      const bool constant = t.mono.degree() == 0;
      if (t.coeff != 1 || constant) {
        std::string cs = c.to_string();
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        out += cs;
        if (!constant) out += '*';
      }
      if (!constant) out += t.mono.to_string();
    }
    return out;
  }

  /// First `max_terms` terms followed by "+ ..." when truncated.
  std::string to_string_truncated(std::size_t max_terms) const {
    if (terms_.size() <= max_terms) return to_string();
    Poly head(field_);
    head.terms_.assign(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(max_terms));
    return head.to_string() + " + ... (" + std::to_string(terms_.size()) + " terms)";
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.terms_ == b.terms_; }

  // Internal construction from an accumulator keyed by Monomial::key().
  static Poly from_accumulator(const Field& f, const std::unordered_map<std::uint64_t, std::uint32_t>& acc) {
    std::vector<std::uint64_t> keys;
    keys.reserve(acc.size());
    for (const auto& [k, c] : acc)
      if (c != 0) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), std::greater<>());
    Poly out(f);
    out.terms_.reserve(keys.size());
    for (auto k : keys) out.terms_.push_back({Monomial::from_key(k), acc.at(k)});
    return out;
  }

  static Poly from_sorted_terms(const Field& f, std::vector<Term> terms) {
    Poly out(f);
    out.terms_ = std::move(terms);
    return out;
  }

 private:
  void check(const Poly& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("polynomials over different field models");
  }

  Poly mul_term(const Term& t) const {
    Poly out(field_);
    out.terms_.reserve(terms_.size());
    for (const auto& a : terms_) out.terms_.push_back({a.mono * t.mono, field_.raw().mul(a.coeff, t.coeff)});
    return out;  // multiplication by a monomial preserves the order
  }

  Poly merge(const Poly& o, bool subtract) const {
    check(o);
    const auto& raw = field_.raw();
    Poly out(field_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && o.terms_[j].mono < terms_[i].mono)) {
        out.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || terms_[i].mono < o.terms_[j].mono) {
        const auto c = subtract ? raw.neg(o.terms_[j].coeff) : o.terms_[j].coeff;
        out.terms_.push_back({o.terms_[j].mono, c});
        ++j;
      } else {
        const auto c = subtract ? raw.sub(terms_[i].coeff, o.terms_[j].coeff) : raw.add(terms_[i].coeff, o.terms_[j].coeff);
        if (c != 0) out.terms_.push_back({terms_[i].mono, c});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Field field_;
  std::vector<Term> terms_;
};

inline Poly operator*(const FieldElem& c, const Poly& p) { return p.scale(c); }

inline Poly p_add(const Poly& f, const Poly& g) { return f + g; }
inline Poly p_sub(const Poly& f, const Poly& g) { return f - g; }
inline Poly p_mul(const Poly& f, const Poly& g) { return f * g; }
inline Poly p_scale(const Poly& f, const FieldElem& c) { return f.scale(c); }
inline Poly p_pow(const Poly& f, unsigned e) { return f.pow(e); }
inline Poly star(const Poly& f) { return f.star(); }

/// Ring homomorphism x_i -> L_i for linear forms L_i. Keeps a power cache, so
/// reuse one instance when substituting into many polynomials.
class LinearSubstitution {
 public:
  LinearSubstitution(Field f, std::array<Poly, 4> images) : field_(std::move(f)), images_(std::move(images)) {
    for (const auto& img : images_) {
      if (!(img.field() == field_)) throw std::invalid_argument("substitution image over a different field model");
      for (const auto& t : img.terms())
        if (t.mono.degree() != 1) throw std::invalid_argument("substitution image is not a linear form");
    }
    for (int v = 0; v < 4; ++v) powers_[v].push_back(Poly::constant(field_.one()));
  }

  Poly apply(const Poly& f) {
    if (!(f.field() == field_)) throw std::invalid_argument("polynomial over a different field model");
    const auto& raw = field_.raw();
    std::unordered_map<std::uint64_t, std::uint32_t> acc;
    for (const auto& t : f.terms()) {
      Poly prod = power(0, t.mono.exps[0]);
      for (int v = 1; v < 4; ++v)
        if (t.mono.exps[v]) prod = prod * power(v, t.mono.exps[v]);
      for (const auto& pt : prod.terms()) {
        auto& slot = acc[pt.mono.key()];
        slot = raw.add(slot, raw.mul(pt.coeff, t.coeff));
      }
    }
    return Poly::from_accumulator(field_, acc);
  }

  const Poly& power(int v, unsigned e) {
    auto& cache = powers_[v];
    while (cache.size() <= e) cache.push_back(cache.back() * images_[v]);
    return cache[e];
  }

 private:
  Field field_;
  std::array<Poly, 4> images_;
  std::array<std::vector<Poly>, 4> powers_;
};

inline Poly substitute_linear(const Poly& f, const std::array<Poly, 4>& images) {
  LinearSubstitution sub(f.field(), images);
  return sub.apply(f);
}

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};

/// Single-divisor division: f = quotient*g + remainder, where no term of the
/// remainder is divisible by the leading monomial of g.
inline DivisionResult divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (!(f.field() == g.field())) throw std::invalid_argument("polynomials over different field models");
  const Field& field = f.field();
  const auto& raw = field.raw();
  const Term lead = g.terms().front();
  const std::uint32_t lead_inv = raw.inv(lead.coeff);

  std::map<std::uint64_t, std::uint32_t, std::greater<>> work;
  for (const auto& t : f.terms()) work.emplace(t.mono.key(), t.coeff);
  std::vector<Term> quotient, remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const Monomial m = Monomial::from_key(it->first);
    const std::uint32_t c = it->second;
    work.erase(it);
    if (!lead.mono.divides(m)) {
      remainder.push_back({m, c});
      continue;
    }
    const Monomial qm = lead.mono.cofactor(m);
    const std::uint32_t qc = raw.mul(c, lead_inv);
    quotient.push_back({qm, qc});
    for (std::size_t i = 1; i < g.terms().size(); ++i) {
      const auto& gt = g.terms()[i];
      const auto key = (qm * gt.mono).key();
      auto [slot, inserted] = work.try_emplace(key, 0);
      slot->second = raw.sub(slot->second, raw.mul(qc, gt.coeff));
      if (slot->second == 0) work.erase(slot);
    }
  }
  // Both lists were produced in strictly descending order.
  return {Poly::from_sorted_terms(field, std::move(quotient)), Poly::from_sorted_terms(field, std::move(remainder))};
}

using ExactDivResult = std::variant<Poly, NotDivisible>;

inline ExactDivResult exact_div(const Poly& f, const Poly& g) {
  auto r = divide(f, g);
  if (r.remainder.is_zero()) return std::move(r.quotient);
  return NotDivisible{r.remainder.leading_monomial(), r.remainder.leading_coefficient()};
}

/// exact_div that treats a nonzero remainder as an internal arithmetic failure.
inline Poly exact_div_or_throw(const Poly& f, const Poly& g, const std::string& context) {
  auto r = exact_div(f, g);
  if (auto* q = std::get_if<Poly>(&r)) return std::move(*q);
  const auto& nd = std::get<NotDivisible>(r);
  throw std::logic_error("exact division failed in " + context + ": remainder leads with " +
                         nd.coefficient.to_string() + "*" + nd.remainder_lead.to_string());
}

inline Poly homogeneous_component(const Poly& f, int d) { return f.homogeneous_component(d); }
inline bool is_homogeneous(const Poly& f) { return f.is_homogeneous(); }
inline std::optional<int> degree(const Poly& f) { return f.degree(); }

namespace detail {

class PolyParser {
 public:
  PolyParser(const Field& f, const std::string& s) : field_(f), s_(s) {}

  Poly parse() {
    skip();
    if (i_ >= s_.size()) fail("empty polynomial");
    std::vector<std::pair<Monomial, FieldElem>> terms;
    bool first = true;
    while (true) {
      skip();
      if (i_ >= s_.size()) break;
      bool negate = false;
      if (s_[i_] == '+' || s_[i_] == '-') {
        negate = s_[i_] == '-';
        ++i_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = term();
      terms.emplace_back(m, negate ? -c : c);
    }
    return Poly::from_terms(field_, terms);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + s_ + "' at offset " + std::to_string(i_) + ": " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  std::uint64_t number() {
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[i_++] - '0');
      if (v > (1ull << 40)) fail("number too large");
    }
    return v;
  }

  std::pair<Monomial, FieldElem> term() {
    Monomial m;
    FieldElem c = field_.one();
    while (true) {
      skip();
      if (i_ >= s_.size()) fail("expected a factor");
      const char ch = s_[i_];
      if (ch == '(') {
        const auto close = s_.find(')', i_);
        if (close == std::string::npos) fail("unbalanced parenthesis");
        c = c * parse_field_elem(field_, s_.substr(i_ + 1, close - i_ - 1));
        i_ = close + 1;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        c = c * field_.from_int(static_cast<std::int64_t>(number() % field_.characteristic()));
      } else if (ch == 'T') {
        if (field_.degree() == 1) fail("T is not defined over a prime field");
        ++i_;
        std::uint64_t e = 1;
        skip();
        if (i_ < s_.size() && s_[i_] == '^') {
          ++i_;
          e = number();
        }
        c = c * field_.generator().pow(static_cast<std::int64_t>(e));
      } else if ((ch == 'x' || ch == 'y') && i_ + 1 < s_.size() && (s_[i_ + 1] == '1' || s_[i_ + 1] == '2')) {
        const int v = (ch == 'x' ? 0 : 2) + (s_[i_ + 1] - '1');
        i_ += 2;
        std::uint64_t e = 1;
        skip();
        if (i_ < s_.size() && s_[i_] == '^') {
          ++i_;
          e = number();
        }
        Monomial f;
        f.exps[v] = static_cast<std::uint16_t>(e);
        m = m * f;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip();
      if (i_ < s_.size() && s_[i_] == '*') {
        ++i_;
        continue;
      }
      break;
    }
    return {m, c};
  }

  const Field& field_;
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses the canonical text form (also accepts '-' separators and any term order).
inline Poly parse_poly(const Field& f, const std::string& text) { return detail::PolyParser(f, text).parse(); }

}  // namespace modinv
