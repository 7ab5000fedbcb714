#pragma once

// Hilbert series of free modules over a polynomial hsop, kept as
// numerator / prod(1 - t^d_i) without cancellation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace modinv {

using BigInt = boost::multiprecision::cpp_int;

struct HilbertSeries {
  std::vector<BigInt> numerator;  // dense, index = exponent
  std::vector<int> denominator;   // factors (1 - t^d)

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

namespace detail {

inline void trim(std::vector<BigInt>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// prod over ds of (1 - t^d).
inline std::vector<BigInt> denominator_poly(const std::vector<int>& ds) {
  std::vector<BigInt> out{1};
  for (int d : ds) {
    std::vector<BigInt> f(static_cast<std::size_t>(d) + 1);
    f[0] = 1;
    f[static_cast<std::size_t>(d)] -= 1;
    out = poly_mul(out, f);
  }
  return out;
}

inline void add_term(std::vector<BigInt>& p, std::size_t e, const BigInt& c) {
  if (p.size() <= e) p.resize(e + 1);
  p[e] += c;
}

inline void check_denominator(const std::vector<int>& ds) {
  for (int d : ds)
    if (d <= 0) throw std::invalid_argument("denominator degrees must be positive");
}

}  // namespace detail

/// sum_j t^(e_j) / prod_i (1 - t^(d_i)).
inline HilbertSeries from_free_module(const std::vector<int>& basis_degrees, const std::vector<int>& hsop_degrees) {
  if (hsop_degrees.empty()) throw std::invalid_argument("hsop degree multiset must be nonempty");
  detail::check_denominator(hsop_degrees);
  HilbertSeries h;
  for (int e : basis_degrees) {
    if (e < 0) throw std::invalid_argument("negative basis degree");
    detail::add_term(h.numerator, static_cast<std::size_t>(e), 1);
  }
  h.denominator = hsop_degrees;
  return h;
}

/// The three numerator pieces of the SL2 series and their assembly.
struct Sl2SeriesParts {
  std::vector<BigInt> h1;        // 1 + 2t^(q+1) + ... + q t^((q-1)(q+1)) + ... + t^((2q-2)(q+1))
  std::vector<BigInt> h2_total;  // sum over k = 1..q of the shifted triangular patterns
  std::vector<BigInt> h3;        // (q-2) t^(q^2-q+2k), k = 0..q-1
  HilbertSeries series;
};

/// Closed-form Hilbert series of the SL2 invariants of a vector and a covector,
/// over (1 - t^(q+1))^2 (1 - t^(q^2-q))^2.
///
/// The middle family is a triangular coefficient run 1, 2, ..., q-1, ..., 2, 1
/// placed on exponents 2k + j(q+1), j = 0..2q-4, once for each k = 1..q.
inline Sl2SeriesParts sl2_series_parts(unsigned q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  const std::size_t Q = q;
  Sl2SeriesParts out;
  for (std::size_t m = 0; m <= 2 * Q - 2; ++m) detail::add_term(out.h1, m * (Q + 1), std::min(m + 1, 2 * Q - 1 - m));
  for (std::size_t k = 1; k <= Q; ++k)
    for (std::size_t j = 0; j + 4 <= 2 * Q; ++j)
      detail::add_term(out.h2_total, 2 * k + j * (Q + 1), std::min(j + 1, 2 * Q - 3 - j));
  if (q > 2)
    for (std::size_t k = 0; k < Q; ++k) detail::add_term(out.h3, Q * Q - Q + 2 * k, Q - 2);
  auto& num = out.series.numerator;
  for (const auto* part : {&out.h1, &out.h2_total, &out.h3})
    for (std::size_t e = 0; e < part->size(); ++e)
      if ((*part)[e] != 0) detail::add_term(num, e, (*part)[e]);
  const int a = static_cast<int>(q) + 1, b = static_cast<int>(q * q - q);
  out.series.denominator = {a, b, a, b};
  return out;
}

inline HilbertSeries sl2_series_closed_form(unsigned q) { return sl2_series_parts(q).series; }

/// Power-series coefficients of degrees 0..dmax.
inline std::vector<BigInt> expand(const HilbertSeries& h, int dmax) {
  if (dmax < 0) throw std::invalid_argument("dmax must be nonnegative");
  detail::check_denominator(h.denominator);
  const std::size_t n = static_cast<std::size_t>(dmax) + 1;
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < std::min(n, h.numerator.size()); ++i) c[i] = h.numerator[i];
  // Multiply by 1/(1 - t^d) = running sum with stride d.
  for (int d : h.denominator)
    for (std::size_t i = static_cast<std::size_t>(d); i < n; ++i) c[i] += c[i - static_cast<std::size_t>(d)];
  return c;
}

/// Equality as rational functions, by cross-multiplication.
inline bool series_equal(const HilbertSeries& a, const HilbertSeries& b) {
  auto num_a = a.numerator, num_b = b.numerator;
  detail::trim(num_a);
  detail::trim(num_b);
  return detail::poly_mul(num_a, detail::denominator_poly(b.denominator)) ==
         detail::poly_mul(num_b, detail::denominator_poly(a.denominator));
}

struct NotGorensteinSymmetric {
  std::size_t low_exponent, high_exponent;
  BigInt low_coefficient, high_coefficient;
  int sign;  // required ratio high/low, (-1)^m

  friend bool operator==(const NotGorensteinSymmetric&, const NotGorensteinSymmetric&) = default;
};

struct GorensteinResult {
  std::optional<int> exponent;  // i with H(1/t) = t^i H(t)
  std::optional<NotGorensteinSymmetric> asymmetry;

  bool symmetric() const { return exponent.has_value(); }
};

/// Since 1 - t^-d = -t^-d (1 - t^d), H(1/t) = t^i H(t) exactly when the
/// numerator c satisfies c[lo+hi-j] = (-1)^m c[j]; then i = sum(d) - (lo + hi).
inline GorensteinResult gorenstein_check(const HilbertSeries& h) {
  auto num = h.numerator;
  detail::trim(num);
  if (num.empty()) throw std::invalid_argument("zero numerator has no Gorenstein exponent");
  std::size_t lo = 0;
  while (num[lo] == 0) ++lo;
  const std::size_t hi = num.size() - 1;
  const int sign = h.denominator.size() % 2 == 0 ? 1 : -1;
  for (std::size_t j = lo; j <= hi; ++j) {
    const std::size_t mirror = lo + hi - j;
    if (num[mirror] != sign * num[j]) {
      return {std::nullopt, NotGorensteinSymmetric{std::min(j, mirror), std::max(j, mirror), num[std::min(j, mirror)],
                                                   num[std::max(j, mirror)], sign}};
    }
  }
  const int total = std::accumulate(h.denominator.begin(), h.denominator.end(), 0);
  return {total - static_cast<int>(lo + hi), std::nullopt};
}

inline int numerator_degree(const HilbertSeries& h) {
  auto num = h.numerator;
  detail::trim(num);
  if (num.empty()) throw std::invalid_argument("zero numerator");
  return static_cast<int>(num.size()) - 1;
}

inline std::string to_string(const HilbertSeries& h) {
  std::string num;
  for (std::size_t e = 0; e < h.numerator.size(); ++e) {
    const BigInt& c = h.numerator[e];
    if (c == 0) continue;
    if (!num.empty()) num += c < 0 ? " - " : " + ";
    else if (c < 0) num += "-";
    const BigInt a = c < 0 ? BigInt(-c) : c;
    const bool show = a != 1 || e == 0;
    if (show) num += a.str();
    if (e > 0) num += (show ? "*t" : "t") + (e > 1 ? "^" + std::to_string(e) : std::string());
  }
  if (num.empty()) num = "0";
  std::string den;
  for (int d : h.denominator) den += "(1 - t" + (d > 1 ? "^" + std::to_string(d) : std::string()) + ")";
  return "(" + num + ") / " + (den.empty() ? "1" : den);
}

}  // namespace modinv
