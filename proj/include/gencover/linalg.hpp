#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "gencover/gf.hpp"

namespace gencover {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Elem>> rows);
  /// Matrix whose columns are the given vectors (each of length `rows`).
  static Matrix from_columns(FieldPtr field, std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  const FieldPtr& field() const noexcept { return field_; }
  const Field& f() const noexcept { return *field_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  const std::vector<Elem>& data() const noexcept { return data_; }

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> idx) const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix remove_column(std::size_t c) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_field(a.field_, b.field_) &&
           a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, std::span<const Elem> v);
/// Horizontal concatenation [a | b].
Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix rref;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination. Columns are scanned left to right; each pivot is
/// the lowest-index row with a nonzero entry, scaled to a leading 1.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Coefficients c with basis_cols * c = target, or nullopt. Free variables are
/// set to 0. An empty basis spans {0}.
std::optional<Vec> in_span(const Matrix& basis_cols, std::span<const Elem> target);

/// Rows form a basis of {x : m x = 0}.
Matrix null_space(const Matrix& m);

/// Uniform i.i.d. entries drawn with Rng(seed), row-major.
Matrix random_matrix(std::size_t rows, std::size_t cols, FieldPtr field, std::uint64_t seed);

/// Row-space basis kept in reduced echelon form; supports incremental
/// insertion and membership queries.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, std::size_t dim);

  /// Reduces v in place against the basis.
  void reduce(Vec& v) const;
  bool contains(std::span<const Elem> v) const;
  /// Returns true if v was independent (and is now part of the basis).
  bool insert(std::span<const Elem> v);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }

 private:
  FieldPtr field_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Enumeration helpers.

/// Visits every r-subset of {0..n-1} in lexicographic order. The callback
/// returns false to stop early; the function returns false if stopped.
bool for_each_combination(std::size_t n, std::size_t r,
                          const std::function<bool(std::span<const std::size_t>)>& visit);

/// Visits one representative (the unique RREF basis, as a t x dim matrix) of
/// every t-dimensional subspace of F_q^dim. Order: pivot sets lexicographic,
/// then free entries in odometer order.
bool for_each_subspace(const FieldPtr& field, std::size_t dim, std::size_t t,
                       const std::function<bool(const Matrix&)>& visit);

/// Visits every vector of F_q^len in odometer order (first coordinate fastest).
bool for_each_vector(const FieldPtr& field, std::size_t len,
                     const std::function<bool(std::span<const Elem>)>& visit);

/// Number of t-dimensional subspaces of F_q^dim, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t dim, std::size_t t, std::uint64_t q);
/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
/// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

// ---------------------------------------------------------------------------
// The bijection F_q^{t x n} <-> F_{q^t}^n with basis 1, x, ..., x^{t-1}.

/// Column j of v becomes the element whose base-p digits are that column.
/// Requires a prime field for v and ext = Field::create(p, v.rows()).
Vec xi_map(const Matrix& v, const FieldPtr& ext);
Matrix xi_inv(std::span<const Elem> w, const FieldPtr& ext, const FieldPtr& base);

}  // namespace gencover
