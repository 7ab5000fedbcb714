#pragma once

// Arithmetic in F_q, q = p^r, with elements stored as base-p packed codes.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modinv {

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, low degree first, no trailing zeros.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is small; Fermat.
  std::uint64_t r = 1, b = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over F_p (b nonzero).
inline PrimePoly poly_mod(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const PrimePoly& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PrimePoly f(k + 1);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < k; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      f[k] = 1;
      if (poly_mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  std::uint32_t q = 0;
  PrimePoly modulus;  // monic, degree r, low degree first
  std::uint32_t primitive = 0;
  std::vector<std::uint32_t> exp_table;  // length q-1
  std::vector<std::uint32_t> log_table;  // length q, log_table[0] unused
  std::vector<std::uint32_t> neg_table;
  std::vector<std::uint16_t> add_table;  // q*q, only when q is small

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  }

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    PrimePoly x(r), y(r);
    for (std::uint32_t i = 0; i < r; ++i) {
      x[i] = a % p;
      a /= p;
      y[i] = b % p;
      b /= p;
    }
    PrimePoly prod(2 * r, 0);
    for (std::uint32_t i = 0; i < r; ++i)
      for (std::uint32_t j = 0; j < r; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
    PrimePoly red = poly_mod(prod, modulus, p);
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < red.size(); ++i) {
      out += red[i] * scale;
      scale *= p;
    }
    return out;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (!add_table.empty()) return add_table[static_cast<std::size_t>(a) * q + b];
    return add_slow(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const { return neg_table[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_table[b]); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_table[a] + log_table[b];
    if (s >= q - 1) s -= q - 1;
    return exp_table[s];
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inversion of zero in F_q");
    const std::uint32_t l = log_table[a];
    return exp_table[l == 0 ? 0 : q - 1 - l];
  }
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t l = (static_cast<std::uint64_t>(log_table[a]) * (static_cast<std::uint64_t>(e) % (q - 1))) % (q - 1);
    return exp_table[l];
  }
  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    return static_cast<std::uint32_t>(m);
  }
};

inline std::uint32_t prime_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::shared_ptr<const FieldData> build_field(std::uint32_t p, PrimePoly modulus) {
  auto f = std::make_shared<FieldData>();
  f->p = p;
  f->r = static_cast<std::uint32_t>(modulus.size() - 1);
  f->q = 1;
  for (std::uint32_t i = 0; i < f->r; ++i) f->q *= p;
  f->modulus = std::move(modulus);
  const std::uint32_t q = f->q;

  auto mul_raw = [&](std::uint32_t a, std::uint32_t b) {
    return f->r == 1 ? prime_mul(a, b, p) : f->mul_slow(a, b);
  };

  f->neg_table.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t out = 0, scale = 1, v = a;
    for (std::uint32_t i = 0; i < f->r; ++i) {
      out += ((p - v % p) % p) * scale;
      v /= p;
      scale *= p;
    }
    f->neg_table[a] = out;
  }

  // Least element (in code order) of multiplicative order q-1.
  std::vector<std::uint32_t> powers;
  for (std::uint32_t g = 1; g < q; ++g) {
    powers.assign(1, 1);
    std::uint32_t x = g;
    while (x != 1) {
      powers.push_back(x);
      x = mul_raw(x, g);
    }
    if (powers.size() == q - 1) {
      f->primitive = g;
      break;
    }
  }
  f->exp_table = powers;
  f->log_table.assign(q, 0);
  for (std::uint32_t i = 0; i < powers.size(); ++i) f->log_table[powers[i]] = i;

  if (q <= 256) {
    f->add_table.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        f->add_table[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(f->add_slow(a, b));
  }
  return f;
}

}  // namespace detail

class FieldElem;

/// The field F_{p^r} realised as F_p[T]/(modulus). Cheap to copy; all copies
/// share one immutable table set.
class Field {
 public:
  Field() = default;

  /// Canonical model: the lexicographically least monic irreducible of degree
  /// r (coefficients compared low degree first). Results are cached.
  static Field make(std::uint32_t p, std::uint32_t r) {
    if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (r < 1) throw std::invalid_argument("field extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
      q *= p;
      if (q > kMaxFieldOrder) throw std::out_of_range("field order p^r exceeds 2^16");
    }
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldData>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({p, r});
    if (it != cache.end()) return Field(it->second);
    auto data = detail::build_field(p, canonical_modulus(p, r));
    cache.emplace(std::make_pair(p, r), data);
    return Field(data);
  }

  /// A non-canonical model with a caller-supplied monic irreducible modulus.
  static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic is not prime");
    detail::trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
    for (auto c : modulus)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!detail::is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible over F_p");
    std::uint64_t q = 1;
    for (std::size_t i = 1; i < modulus.size(); ++i) {
      q *= p;
      if (q > kMaxFieldOrder) throw std::out_of_range("field order p^r exceeds 2^16");
    }
    return Field(detail::build_field(p, std::move(modulus)));
  }

  static std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t r) {
    if (r == 1) return {0, 1};
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < r; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      // idx enumerates (c0, c1, ..., c_{r-1}) with c0 most significant.
      std::vector<std::uint32_t> m(r + 1);
      std::uint64_t v = idx;
      for (std::uint32_t i = r; i-- > 0;) {
        m[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      m[r] = 1;
      if (detail::is_irreducible(m, p)) return m;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  bool valid() const { return data_ != nullptr; }
  std::uint32_t characteristic() const { return data_->p; }
  std::uint32_t degree() const { return data_->r; }
  std::uint32_t order() const { return data_->q; }
  const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }
  const detail::FieldData& raw() const { return *data_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_code(std::uint32_t code) const;
  FieldElem from_coords(const std::vector<std::uint32_t>& coords) const;
  FieldElem generator() const;  ///< T, or 1 in a prime field
  FieldElem primitive_element() const;

  std::vector<FieldElem> elements() const;
  std::vector<FieldElem> nonzero_elements() const;

  /// "p^r/c0,c1,...,1" (modulus coefficients low degree first).
  std::string to_string() const {
    std::ostringstream os;
    os << data_->p << '^' << data_->r << '/';
    for (std::size_t i = 0; i < data_->modulus.size(); ++i) os << (i ? "," : "") << data_->modulus[i];
    return os.str();
  }

  friend bool operator==(const Field& a, const Field& b) {
    if (a.data_ == b.data_) return true;
    if (!a.data_ || !b.data_) return false;
    return a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus;
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

inline Field field_make(std::uint32_t p, std::uint32_t r) { return Field::make(p, r); }

/// Splits q = p^r; throws std::invalid_argument when q is not a prime power.
inline std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t r = 0;
  std::uint64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++r;
  }
  if (v != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), r};
}

inline Field field_of_order(std::uint64_t q) {
  auto [p, r] = split_prime_power(q);
  return Field::make(p, r);
}

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Field f, std::uint32_t code) : field_(std::move(f)), code_(code) {}

  const Field& field() const { return field_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  std::vector<std::uint32_t> coords() const {
    std::vector<std::uint32_t> c(field_.degree());
    std::uint32_t v = code_;
    for (auto& x : c) {
      x = v % field_.characteristic();
      v /= field_.characteristic();
    }
    return c;
  }

  FieldElem operator+(const FieldElem& o) const { return {same(o), field_.raw().add(code_, o.code_)}; }
  FieldElem operator-(const FieldElem& o) const { return {same(o), field_.raw().sub(code_, o.code_)}; }
  FieldElem operator*(const FieldElem& o) const { return {same(o), field_.raw().mul(code_, o.code_)}; }
  FieldElem operator/(const FieldElem& o) const { return *this * o.inv(); }
  FieldElem operator-() const { return {field_, field_.raw().neg(code_)}; }
  FieldElem inv() const { return {field_, field_.raw().inv(code_)}; }
  FieldElem pow(std::int64_t e) const { return {field_, field_.raw().pow(code_, e)}; }

  /// Multiplicative order; throws for zero.
  std::uint32_t multiplicative_order() const {
    if (code_ == 0) throw std::domain_error("zero has no multiplicative order");
    std::uint32_t n = 1;
    for (std::uint32_t x = code_; x != 1; x = field_.raw().mul(x, code_)) ++n;
    return n;
  }

  /// "c0+c1*T+..." with zero terms dropped; a plain residue when r = 1.
  std::string to_string() const {
    if (field_.degree() == 1) return std::to_string(code_);
    if (code_ == 0) return "0";
    auto c = coords();
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += '+';
      if (i == 0) {
        out += std::to_string(c[i]);
        continue;
      }
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += "T";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.code_ == b.code_ && a.field_ == b.field_; }

 private:
  const Field& same(const FieldElem& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("field elements from different field models");
    return field_;
  }

  Field field_;
  std::uint32_t code_ = 0;
};

inline FieldElem Field::zero() const { return {*this, 0}; }
inline FieldElem Field::one() const { return {*this, 1}; }
inline FieldElem Field::from_int(std::int64_t v) const { return {*this, data_->from_int(v)}; }
inline FieldElem Field::from_code(std::uint32_t code) const {
  if (code >= data_->q) throw std::out_of_range("field element code out of range");
  return {*this, code};
}
inline FieldElem Field::from_coords(const std::vector<std::uint32_t>& coords) const {
  if (coords.size() > data_->r) throw std::invalid_argument("too many coordinates for field element");
  std::uint32_t code = 0, scale = 1;
  for (auto c : coords) {
    if (c >= data_->p) throw std::invalid_argument("coordinate out of range");
    code += c * scale;
    scale *= data_->p;
  }
  return {*this, code};
}
inline FieldElem Field::generator() const { return {*this, data_->r == 1 ? 1u : data_->p}; }
inline FieldElem Field::primitive_element() const { return {*this, data_->primitive}; }

inline std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out;
  out.reserve(data_->q);
  for (std::uint32_t c = 0; c < data_->q; ++c) out.emplace_back(*this, c);
  return out;
}

inline std::vector<FieldElem> Field::nonzero_elements() const {
  auto all = elements();
  all.erase(all.begin());
  return all;
}

inline std::vector<FieldElem> enumerate(const Field& f) { return f.elements(); }
inline std::vector<FieldElem> enumerate_nonzero(const Field& f) { return f.nonzero_elements(); }

/// Sum of z^a over the nonzero elements. For a = 0 this is (q-1)*1.
inline FieldElem power_sum(const Field& f, std::uint64_t a) {
  FieldElem acc = f.zero();
  for (const auto& z : f.nonzero_elements()) acc = acc + z.pow(static_cast<std::int64_t>(a));
  return acc;
}

/// Parses a field element: a residue, or a sum of terms c, c*T, T^k, c*T^k.
/// Powers of T at or above the extension degree are reduced by the modulus.
inline FieldElem parse_field_elem(const Field& f, const std::string& text) {
  FieldElem acc = f.zero();
  const std::uint32_t p = f.characteristic();
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto number = [&]() -> std::uint64_t {
    skip();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("expected a number in field element '" + text + "'");
    std::uint64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
    return v;
  };
  bool any = false;
  while (true) {
    skip();
    if (i >= text.size()) break;
    if (any) {
      if (text[i] != '+') throw std::invalid_argument("expected '+' in field element '" + text + "'");
      ++i;
      skip();
    }
    std::uint64_t c = 1;
    std::uint32_t power = 0;
    if (i < text.size() && text[i] == 'T') {
      // bare T
    } else {
      c = number();
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
        if (i >= text.size() || text[i] != 'T') throw std::invalid_argument("expected T in field element");
      } else {
        acc = acc + f.from_int(static_cast<std::int64_t>(c % p));
        any = true;
        continue;
      }
    }
    ++i;  // T
    power = 1;
    skip();
    if (i < text.size() && text[i] == '^') {
      ++i;
      power = static_cast<std::uint32_t>(number());
    }
    if (f.degree() == 1) throw std::invalid_argument("T is not defined over a prime field: '" + text + "'");
    acc = acc + f.from_int(static_cast<std::int64_t>(c % p)) * f.generator().pow(power);
    any = true;
  }
  if (!any) throw std::invalid_argument("empty field element");
  return acc;
}

}  // namespace modinv
