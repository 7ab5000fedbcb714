#pragma once

// 2x2 matrix groups over F_q acting on F_q[x1, x2, y1, y2]: x contragrediently,
// y through the matrix itself.

#include <array>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "modinv/gf.hpp"
#include "modinv/poly.hpp"

namespace modinv {

/// [[a, b], [c, d]].
struct Mat2 {
  FieldElem a, b, c, d;

  static Mat2 make(FieldElem a, FieldElem b, FieldElem c, FieldElem d) {
    Mat2 m{std::move(a), std::move(b), std::move(c), std::move(d)};
    if (m.det().is_zero()) throw std::invalid_argument("singular matrix " + m.to_string());
    return m;
  }
  static Mat2 identity(const Field& f) { return {f.one(), f.zero(), f.zero(), f.one()}; }
  static Mat2 upper(const FieldElem& lambda) {
    const Field& f = lambda.field();
    return {f.one(), lambda, f.zero(), f.one()};
  }
  static Mat2 lower(const FieldElem& lambda) {
    const Field& f = lambda.field();
    return {f.one(), f.zero(), lambda, f.one()};
  }
  static Mat2 diagonal(const FieldElem& x, const FieldElem& y) {
    const Field& f = x.field();
    return make(x, f.zero(), f.zero(), y);
  }

  const Field& field() const { return a.field(); }
  FieldElem det() const { return a * d - b * c; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 inverse() const {
    const FieldElem k = det().inv();
    return {k * d, -(k * b), -(k * c), k * a};
  }
  Mat2 transpose() const { return {a, c, b, d}; }

  std::array<std::uint32_t, 4> codes() const { return {a.code(), b.code(), c.code(), d.code()}; }

  std::string to_string() const {
    return "[[" + a.to_string() + "," + b.to_string() + "],[" + c.to_string() + "," + d.to_string() + "]]";
  }

  friend bool operator==(const Mat2& l, const Mat2& r) { return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d; }
};

/// A pair (A, B) acting by the contragredient of A on (x1, x2) and by B on (y1, y2).
struct ActionSpec {
  Mat2 x_matrix;
  Mat2 y_matrix;

  static ActionSpec diagonal(const Mat2& m) { return {m, m}; }
  static ActionSpec identity(const Field& f) { return diagonal(Mat2::identity(f)); }

  const Field& field() const { return x_matrix.field(); }
  bool is_diagonal() const { return x_matrix == y_matrix; }

  ActionSpec operator*(const ActionSpec& o) const { return {x_matrix * o.x_matrix, y_matrix * o.y_matrix}; }

  std::array<std::uint32_t, 8> codes() const {
    auto x = x_matrix.codes();
    auto y = y_matrix.codes();
    return {x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3]};
  }

  std::string to_string() const {
    if (is_diagonal()) return x_matrix.to_string();
    return "(" + x_matrix.to_string() + "," + y_matrix.to_string() + ")";
  }

  friend bool operator==(const ActionSpec& l, const ActionSpec& r) {
    return l.x_matrix == r.x_matrix && l.y_matrix == r.y_matrix;
  }
};

/// Images of (x1, x2, y1, y2) under g.
inline std::array<Poly, 4> action_images(const ActionSpec& g) {
  const Field& f = g.field();
  const Mat2& mx = g.x_matrix;
  const Mat2& my = g.y_matrix;
  const FieldElem dinv = mx.det().inv();
  const Poly x1 = Poly::x1(f), x2 = Poly::x2(f), y1 = Poly::y1(f), y2 = Poly::y2(f);
  return {
      (dinv * mx.d) * x1 - (dinv * mx.c) * x2,
      (dinv * mx.a) * x2 - (dinv * mx.b) * x1,
      my.a * y1 + my.b * y2,
      my.c * y1 + my.d * y2,
  };
}

inline LinearSubstitution action_substitution(const ActionSpec& g) {
  if (g.x_matrix.det().is_zero() || g.y_matrix.det().is_zero()) throw std::invalid_argument("singular matrix in action");
  return LinearSubstitution(g.field(), action_images(g));
}

/// The induced algebra automorphism. Note act(g, act(h, f)) == act(h * g, f).
inline Poly act(const ActionSpec& g, const Poly& f) {
  auto sub = action_substitution(g);
  return sub.apply(f);
}

enum class GroupKind { P2, U2, SL2, GL2, SL2xSL2, GL2xGL2 };

inline std::string group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::P2: return "p2";
    case GroupKind::U2: return "u2";
    case GroupKind::SL2: return "sl2";
    case GroupKind::GL2: return "gl2";
    case GroupKind::SL2xSL2: return "sl2xsl2";
    case GroupKind::GL2xGL2: return "gl2xgl2";
  }
  return "?";
}

inline GroupKind parse_group_kind(const std::string& s) {
  for (auto k : {GroupKind::P2, GroupKind::U2, GroupKind::SL2, GroupKind::GL2, GroupKind::SL2xSL2, GroupKind::GL2xGL2})
    if (group_kind_name(k) == s) return k;
  throw std::invalid_argument("unknown group '" + s + "'");
}

inline constexpr std::uint64_t kGroupEnumerationGuard = 10'000'000;

struct GroupId {
  GroupKind kind;
  Field field;

  bool is_product() const { return kind == GroupKind::SL2xSL2 || kind == GroupKind::GL2xGL2; }

  std::uint64_t order() const {
    const std::uint64_t q = field.order();
    switch (kind) {
      case GroupKind::P2: return q;
      case GroupKind::U2: return q * (q - 1);
      case GroupKind::SL2: return q * (q * q - 1);
      case GroupKind::GL2: return (q * q - 1) * (q * q - q);
      case GroupKind::SL2xSL2: return q * (q * q - 1) * q * (q * q - 1);
      case GroupKind::GL2xGL2: return (q * q - 1) * (q * q - q) * (q * q - 1) * (q * q - q);
    }
    return 0;
  }

  std::string name() const { return group_kind_name(kind) + "(F_" + std::to_string(field.order()) + ")"; }
};

namespace detail {

inline bool in_block_group(GroupKind kind, const Mat2& m) {
  const Field& f = m.field();
  switch (kind) {
    case GroupKind::P2: return m.a == f.one() && m.d == f.one() && m.c.is_zero();
    case GroupKind::U2: return m.c.is_zero() && m.det() == f.one();
    case GroupKind::SL2: return m.det() == f.one();
    case GroupKind::GL2: return !m.det().is_zero();
    default: break;
  }
  throw std::logic_error("not a single-block group");
}

inline GroupKind block_kind(GroupKind k) {
  if (k == GroupKind::SL2xSL2) return GroupKind::SL2;
  if (k == GroupKind::GL2xGL2) return GroupKind::GL2;
  return k;
}

inline std::vector<Mat2> enumerate_block(GroupKind kind, const Field& f) {
  std::vector<Mat2> out;
  const auto els = f.elements();
  for (const auto& a : els)
    for (const auto& b : els)
      for (const auto& c : els)
        for (const auto& d : els) {
          Mat2 m{a, b, c, d};
          if (in_block_group(kind, m)) out.push_back(m);
        }
  return out;
}

/// F_p-basis {1, T, ..., T^(r-1)} of F_q.
inline std::vector<FieldElem> prime_basis(const Field& f) {
  std::vector<FieldElem> out;
  FieldElem t = f.one();
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    out.push_back(t);
    t = t * f.generator();
  }
  return out;
}

inline std::vector<Mat2> block_generators(GroupKind kind, const Field& f) {
  std::vector<Mat2> out;
  const auto basis = prime_basis(f);
  for (const auto& l : basis) out.push_back(Mat2::upper(l));
  const FieldElem g = f.primitive_element();
  switch (kind) {
    case GroupKind::P2: break;
    case GroupKind::U2:
      if (f.order() > 2) out.push_back(Mat2::diagonal(g, g.inv()));
      break;
    case GroupKind::SL2:
      for (const auto& l : basis) out.push_back(Mat2::lower(l));
      break;
    case GroupKind::GL2:
      for (const auto& l : basis) out.push_back(Mat2::lower(l));
      if (f.order() > 2) out.push_back(Mat2::diagonal(g, f.one()));
      break;
    default: throw std::logic_error("not a single-block group");
  }
  return out;
}

}  // namespace detail

/// All elements, deterministic order.
inline std::vector<ActionSpec> enumerate_group(const GroupId& id) {
  if (id.order() > kGroupEnumerationGuard)
    throw std::out_of_range("group " + id.name() + " too large to enumerate (" + std::to_string(id.order()) + ")");
  const auto block = detail::enumerate_block(detail::block_kind(id.kind), id.field);
  std::vector<ActionSpec> out;
  if (!id.is_product()) {
    out.reserve(block.size());
    for (const auto& m : block) out.push_back(ActionSpec::diagonal(m));
    return out;
  }
  out.reserve(block.size() * block.size());
  for (const auto& a : block)
    for (const auto& b : block) out.push_back({a, b});
  return out;
}

inline std::vector<ActionSpec> generators(const GroupId& id) {
  const auto block = detail::block_generators(detail::block_kind(id.kind), id.field);
  std::vector<ActionSpec> out;
  if (!id.is_product()) {
    for (const auto& m : block) out.push_back(ActionSpec::diagonal(m));
    return out;
  }
  const Mat2 one = Mat2::identity(id.field);
  for (const auto& m : block) out.push_back({m, one});
  for (const auto& m : block) out.push_back({one, m});
  return out;
}

/// Subgroup generated by gens (breadth-first closure under right multiplication).
inline std::vector<ActionSpec> closure(const std::vector<ActionSpec>& gens, std::uint64_t limit = kGroupEnumerationGuard) {
  if (gens.empty()) return {};
  std::set<std::array<std::uint32_t, 8>> seen;
  std::vector<ActionSpec> out;
  std::deque<ActionSpec> todo;
  const ActionSpec e = ActionSpec::identity(gens.front().field());
  seen.insert(e.codes());
  todo.push_back(e);
  while (!todo.empty()) {
    ActionSpec cur = todo.front();
    todo.pop_front();
    out.push_back(cur);
    for (const auto& g : gens) {
      ActionSpec next = cur * g;
      if (seen.insert(next.codes()).second) {
        if (seen.size() > limit) throw std::out_of_range("closure exceeds the enumeration guard");
        todo.push_back(std::move(next));
      }
    }
  }
  return out;
}

/// diag(z, 1) for z in F_q^*, one per coset of SL2 in GL2.
inline std::vector<ActionSpec> coset_reps_gl2_over_sl2(const Field& f) {
  std::vector<ActionSpec> out;
  for (const auto& z : f.nonzero_elements()) out.push_back(ActionSpec::diagonal(Mat2::diagonal(z, f.one())));
  return out;
}

enum class InvarianceMode { Generators, Exhaustive };

inline bool is_invariant(const Poly& f, const GroupId& id, InvarianceMode mode = InvarianceMode::Generators) {
  if (!(f.field() == id.field)) throw std::invalid_argument("polynomial and group over different fields");
  const auto elems = mode == InvarianceMode::Generators ? generators(id) : enumerate_group(id);
  for (const auto& g : elems)
    if (!(act(g, f) == f)) return false;
  return true;
}

}  // namespace modinv
