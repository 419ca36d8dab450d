#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices and oriented vectors over a built-in semifield.
 *
 * A d×n Matrix acts on row vectors from the left (u -> uA, the left image)
 * and on column vectors from the right (w -> Aw, the right image). Row and
 * column vectors are distinct types so products cannot be misoriented.
 */

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semicert/element.hpp"

namespace semicert {

enum class Orientation { row, column };

template <Orientation O>
class Vector {
 public:
  Vector(Tag tag, std::vector<Element> entries) : tag_(tag), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
      if (e.tag() != tag_) throw error(errc::tag_mismatch, "vector entry carrier differs from vector tag");
    }
  }
  Vector(Tag tag, std::size_t length, const Element& fill) : Vector(tag, std::vector<Element>(length, fill)) {}

  static Vector zeros(Tag tag, std::size_t length) { return Vector(tag, length, Element::zero(tag)); }
  static Vector ones(Tag tag, std::size_t length) { return Vector(tag, length, Element::one(tag)); }
  static Vector unit(Tag tag, std::size_t length, std::size_t index) {
    std::vector<Element> e(length, Element::zero(tag));
    e.at(index) = Element::one(tag);
    return Vector(tag, std::move(e));
  }

  Tag tag() const noexcept { return tag_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Element& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Element> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  Tag tag_;
  std::vector<Element> entries_;
};

using RowVec = Vector<Orientation::row>;
using ColVec = Vector<Orientation::column>;

template <Orientation O>
std::ostream& operator<<(std::ostream& os, const Vector<O>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os;
}

template <Orientation O>
std::string to_string(const Vector<O>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += to_string(v[i]);
  }
  return out;
}

/// Pointwise sum of two same-length vectors.
template <Orientation O>
Vector<O> add(const Vector<O>& x, const Vector<O>& y) {
  if (x.size() != y.size()) throw error(errc::dimension_mismatch, "vector lengths differ");
  std::vector<Element> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(add(x[i], y[i]));
  return Vector<O>(x.tag(), std::move(out));
}

/// Carrier sum of a (possibly empty) run of elements.
inline Element sum(Tag tag, std::span<const Element> values) {
  Element acc = Element::zero(tag);
  for (const auto& e : values) acc = add(acc, e);
  return acc;
}

class Matrix {
 public:
  /// Row-major entries; rows >= 1, cols may be 0.
  Matrix(Tag tag, std::size_t rows, std::size_t cols, std::vector<Element> entries)
      : tag_(tag), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0) throw error(errc::dimension_mismatch, "a matrix needs at least one row");
    if (entries_.size() != rows_ * cols_) throw error(errc::dimension_mismatch, "entry count differs from rows*cols");
    for (const auto& e : entries_) {
      if (e.tag() != tag_) throw error(errc::tag_mismatch, "matrix entry carrier differs from matrix tag");
    }
  }

  static Matrix zeros(Tag tag, std::size_t rows, std::size_t cols) {
    return Matrix(tag, rows, cols, std::vector<Element>(rows * cols, Element::zero(tag)));
  }

  static Matrix identity(Tag tag, std::size_t n) {
    std::vector<Element> e(n * n, Element::zero(tag));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Element::one(tag);
    return Matrix(tag, n, n, std::move(e));
  }

  static Matrix diagonal(Tag tag, std::span<const Element> diag) {
    const std::size_t n = diag.size();
    std::vector<Element> e(n * n, Element::zero(tag));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
    return Matrix(tag, n, n, std::move(e));
  }

  static Matrix from_rows(Tag tag, const std::vector<std::vector<Element>>& rows) {
    if (rows.empty()) throw error(errc::dimension_mismatch, "a matrix needs at least one row");
    const std::size_t n = rows.front().size();
    std::vector<Element> e;
    e.reserve(rows.size() * n);
    for (const auto& r : rows) {
      if (r.size() != n) throw error(errc::dimension_mismatch, "ragged rows");
      e.insert(e.end(), r.begin(), r.end());
    }
    return Matrix(tag, rows.size(), n, std::move(e));
  }

  Tag tag() const noexcept { return tag_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const Element> entries() const noexcept { return entries_; }

  RowVec row(std::size_t i) const {
    return RowVec(tag_, std::vector<Element>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                             entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
  }
  ColVec column(std::size_t j) const {
    std::vector<Element> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return ColVec(tag_, std::move(c));
  }

  Element row_sum(std::size_t i) const { return sum(tag_, row(i).entries()); }
  Element column_sum(std::size_t j) const { return sum(tag_, column(j).entries()); }

  bool column_is_zero(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!(*this)(i, j).is_zero()) return false;
    }
    return true;
  }
  bool row_is_zero(std::size_t i) const { return row(i).is_zero(); }
  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  /// Sub-matrix with the given rows and columns, in the given order. An
  /// empty row selection is not representable and throws.
  Matrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    std::vector<Element> e;
    e.reserve(row_idx.size() * col_idx.size());
    for (auto i : row_idx) {
      for (auto j : col_idx) e.push_back((*this)(i, j));
    }
    return Matrix(tag_, row_idx.size(), col_idx.size(), std::move(e));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Tag tag_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? "; " : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
  }
  return os << "]";
}

/// Bracketed form `[[a,b],[c,d]]` used in reports.
inline std::string to_bracket_string(const Matrix& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += to_string(a(i, j));
    }
    out += ']';
  }
  return out + "]";
}

template <Orientation O>
std::string to_bracket_string(const Vector<O>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out + "]";
}

// ---- products ---------------------------------------------------------------

namespace detail {

inline void require_tags(Tag a, Tag b) {
  if (a != b) throw error(errc::tag_mismatch, std::string(to_string(a)) + " vs " + std::string(to_string(b)));
}

inline void require_dims(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw error(errc::dimension_mismatch,
                std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace detail

/// (XY)_i^j = Σ_k X_i^k · Y_k^j in carrier arithmetic.
inline Matrix mat_mul(const Matrix& x, const Matrix& y) {
  detail::require_tags(x.tag(), y.tag());
  detail::require_dims(x.cols(), y.rows(), "inner dimension");
  std::vector<Element> e;
  e.reserve(x.rows() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < y.cols(); ++j) {
      Element acc = Element::zero(x.tag());
      for (std::size_t k = 0; k < x.cols(); ++k) acc = add(acc, mul(x(i, k), y(k, j)));
      e.push_back(std::move(acc));
    }
  }
  return Matrix(x.tag(), x.rows(), y.cols(), std::move(e));
}

inline RowVec mat_mul(const RowVec& u, const Matrix& a) {
  detail::require_tags(u.tag(), a.tag());
  detail::require_dims(u.size(), a.rows(), "row vector length vs matrix rows");
  std::vector<Element> out;
  out.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Element acc = Element::zero(a.tag());
    for (std::size_t i = 0; i < a.rows(); ++i) acc = add(acc, mul(u[i], a(i, j)));
    out.push_back(std::move(acc));
  }
  return RowVec(a.tag(), std::move(out));
}

inline ColVec mat_mul(const Matrix& a, const ColVec& w) {
  detail::require_tags(a.tag(), w.tag());
  detail::require_dims(a.cols(), w.size(), "matrix cols vs column vector length");
  std::vector<Element> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Element acc = Element::zero(a.tag());
    for (std::size_t j = 0; j < a.cols(); ++j) acc = add(acc, mul(a(i, j), w[j]));
    out.push_back(std::move(acc));
  }
  return ColVec(a.tag(), std::move(out));
}

inline Element mat_mul(const RowVec& u, const ColVec& w) {
  detail::require_tags(u.tag(), w.tag());
  detail::require_dims(u.size(), w.size(), "inner product lengths");
  Element acc = Element::zero(u.tag());
  for (std::size_t i = 0; i < u.size(); ++i) acc = add(acc, mul(u[i], w[i]));
  return acc;
}

inline Matrix operator*(const Matrix& x, const Matrix& y) { return mat_mul(x, y); }
inline RowVec operator*(const RowVec& u, const Matrix& a) { return mat_mul(u, a); }
inline ColVec operator*(const Matrix& a, const ColVec& w) { return mat_mul(a, w); }
inline Element operator*(const RowVec& u, const ColVec& w) { return mat_mul(u, w); }

// ---- stochasticity ------------------------------------------------------------

inline bool is_column_stochastic(const Matrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!a.column_sum(j).is_one()) return false;
  }
  return true;
}

inline bool is_row_stochastic(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a.row_sum(i).is_one()) return false;
  }
  return true;
}

// ---- monomial matrices -----------------------------------------------------

/// Inverse of a monomial matrix (exactly one nonzero per row and column).
/// Throws not_applicable for anything else.
inline Matrix invert_monomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw error(errc::not_applicable, "monomial matrices are square");
  const std::size_t n = m.rows();
  std::vector<Element> e(n * n, Element::zero(m.tag()));
  std::vector<bool> column_used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      if (++hits > 1 || column_used[j]) throw error(errc::not_applicable, "matrix is not monomial");
      column_used[j] = true;
      e[j * n + i] = inv(m(i, j));
    }
    if (hits == 0) throw error(errc::not_applicable, "matrix is not monomial");
  }
  return Matrix(m.tag(), n, n, std::move(e));
}

}  // namespace semicert
