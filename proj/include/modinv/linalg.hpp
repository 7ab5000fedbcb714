#pragma once

// Dense exact linear algebra over F_q.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modinv/gf.hpp"

namespace modinv {

class MatrixFq {
 public:
  MatrixFq() = default;
  MatrixFq(Field f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static MatrixFq identity(const Field& f, std::size_t n) {
    MatrixFq m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = 1;
    return m;
  }

  static MatrixFq from_rows(const Field& f, const std::vector<std::vector<FieldElem>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    MatrixFq m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  static MatrixFq from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<FieldElem>> els;
    for (const auto& r : rows) {
      els.emplace_back();
      for (auto v : r) els.back().push_back(f.from_int(v));
    }
    return from_rows(f, els);
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& raw(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t raw(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  FieldElem at(std::size_t i, std::size_t j) const { return field_.from_code(raw(i, j)); }
  void set(std::size_t i, std::size_t j, const FieldElem& v) {
    if (!(v.field() == field_)) throw std::invalid_argument("matrix entry from a different field model");
    raw(i, j) = v.code();
  }

  std::vector<FieldElem> column(std::size_t j) const {
    std::vector<FieldElem> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
  }

  MatrixFq operator*(const MatrixFq& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    const auto& f = field_.raw();
    MatrixFq out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto a = raw(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out.raw(i, j) = f.add(out.raw(i, j), f.mul(a, o.raw(k, j)));
      }
    return out;
  }

  MatrixFq operator-(const MatrixFq& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in matrix difference");
    MatrixFq out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.raw().sub(data_[i], o.data_[i]);
    return out;
  }

  bool is_zero() const {
    for (auto v : data_)
      if (v) return false;
    return true;
  }

  /// Rows of `bottom` appended below this matrix.
  MatrixFq stacked(const MatrixFq& bottom) const {
    if (rows_ && bottom.cols_ != cols_) throw std::invalid_argument("dimension mismatch when stacking");
    MatrixFq out(rows_ ? field_ : bottom.field_, rows_ + bottom.rows_, bottom.cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
  }

  friend bool operator==(const MatrixFq& a, const MatrixFq& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && (a.data_.empty() || a.field_ == b.field_);
  }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
};

struct RrefResult {
  MatrixFq reduced;
  std::vector<std::size_t> pivots;
};

namespace detail {

// Gauss-Jordan in place; returns pivot columns. With `full` false only the
// rows below each pivot are cleared (enough for rank).
inline std::vector<std::size_t> eliminate(MatrixFq& m, bool full) {
  const auto& f = m.field().raw();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.raw(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.raw(piv, j), m.raw(r, j));
    const auto inv = f.inv(m.raw(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.raw(r, j) = f.mul(m.raw(r, j), inv);
    for (std::size_t i = full ? 0 : r + 1; i < m.rows(); ++i) {
      if (i == r) continue;
      const auto factor = m.raw(i, c);
      if (factor == 0) continue;
      const auto nf = f.neg(factor);
      for (std::size_t j = c; j < m.cols(); ++j) {
        const auto v = m.raw(r, j);
        if (v) m.raw(i, j) = f.add(m.raw(i, j), f.mul(nf, v));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline RrefResult rref(MatrixFq m) {
  auto piv = detail::eliminate(m, true);
  return {std::move(m), std::move(piv)};
}

inline std::size_t rank(MatrixFq m) { return detail::eliminate(m, false).size(); }

/// Basis of {v : M v = 0}, one basis vector per column.
inline MatrixFq nullspace(const MatrixFq& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  MatrixFq basis(m.field(), m.cols(), free.size());
  const auto& f = m.field().raw();
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis.raw(free[k], k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.raw(pivots[i], k) = f.neg(r.raw(i, free[k]));
  }
  return basis;
}

/// Some x with M x = b, or nullopt when the system is inconsistent.
inline std::optional<std::vector<FieldElem>> solve(const MatrixFq& m, const std::vector<FieldElem>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
  MatrixFq aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.raw(i, j) = m.raw(i, j);
    aug.set(i, m.cols(), b[i]);
  }
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<FieldElem> x(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, m.cols());
  return x;
}

/// Basis (columns) of the common fixed space of the given n x n operators.
inline MatrixFq fixed_space(const std::vector<MatrixFq>& ops) {
  if (ops.empty()) throw std::invalid_argument("fixed_space needs at least one operator");
  const std::size_t n = ops.front().rows();
  const MatrixFq id = MatrixFq::identity(ops.front().field(), n);
  MatrixFq stacked;
  for (const auto& op : ops) {
    if (op.rows() != n || op.cols() != n) throw std::invalid_argument("fixed_space operators must be square of equal size");
    stacked = stacked.stacked(op - id);
  }
  return nullspace(stacked);
}

}  // namespace modinv
