#include "gencover/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gencover/random.hpp"

namespace gencover {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw Error(Errc::DimensionMismatch, "entry count does not match shape");
  for (Elem e : data_)
    if (!field_->contains(e))
      throw Error(Errc::DomainError, std::to_string(e) + " is not an element of " + field_->name());
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows) {
  std::vector<Elem> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(Errc::DimensionMismatch, "ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Elem>> rows) {
  std::vector<Vec> v;
  for (const auto& r : rows) v.emplace_back(r);
  const std::size_t cols = v.empty() ? 0 : v.front().size();
  return from_rows(std::move(field), cols, v);
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(std::move(field), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(Errc::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
      if (!m.f().contains(cols[j][i]))
        throw Error(Errc::DomainError, "entry outside the field");
      m(i, j) = cols[j][i];
    }
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw Error(Errc::PositionOutOfRange, "column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, idx[j]);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) throw Error(Errc::PositionOutOfRange, "row index out of range");
    std::copy(row(idx[i]).begin(), row(idx[i]).end(), out.row(i).begin());
  }
  return out;
}

Matrix Matrix::remove_column(std::size_t c) const {
  if (c >= cols_) throw Error(Errc::PositionOutOfRange, "column index out of range");
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols_; ++j)
    if (j != c) keep.push_back(j);
  return select_columns(keep);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "matrix product");
  if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "matrix product shapes");
  const Field& f = a.f();
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
    }
  return out;
}

Vec operator*(const Matrix& a, std::span<const Elem> v) {
  if (a.cols() != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector shapes");
  const Field& f = a.f();
  Vec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "hconcat");
  if (a.rows() != b.rows()) throw Error(Errc::DimensionMismatch, "hconcat row counts differ");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), out.row(i).begin());
    std::copy(b.row(i).begin(), b.row(i).end(), out.row(i).begin() + a.cols());
  }
  return out;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "vconcat");
  if (a.cols() != b.cols()) throw Error(Errc::DimensionMismatch, "vconcat column counts differ");
  std::vector<Elem> data = a.data();
  data.insert(data.end(), b.data().begin(), b.data().end());
  return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  const Field& f = m.f();
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < r.cols() && prow < r.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < r.rows() && r(sel, c) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != prow)
      std::swap_ranges(r.row(sel).begin(), r.row(sel).end(), r.row(prow).begin());
    const Elem scale = f.inv(r(prow, c));
    for (auto& e : r.row(prow)) e = f.mul(e, scale);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == prow) continue;
      const Elem factor = r(i, c);
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t j = c; j < r.cols(); ++j) r(i, j) = f.add(r(i, j), f.mul(nf, r(prow, j)));
    }
    pivots.push_back(c);
    ++prow;
  }
  const std::size_t rk = pivots.size();
  return {std::move(r), rk, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vec> in_span(const Matrix& basis_cols, std::span<const Elem> target) {
  if (basis_cols.rows() != target.size())
    throw Error(Errc::DimensionMismatch, "target length differs from basis vector length");
  const std::size_t n = basis_cols.cols();
  if (n == 0) {
    if (std::all_of(target.begin(), target.end(), [](Elem e) { return e == 0; })) return Vec{};
    return std::nullopt;
  }
  Matrix aug(basis_cols.field(), basis_cols.rows(), n + 1);
  for (std::size_t i = 0; i < aug.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = basis_cols(i, j);
    aug(i, n) = target[i];
  }
  const auto res = rref(aug);
  if (!res.pivot_cols.empty() && res.pivot_cols.back() == n) return std::nullopt;
  Vec coeff(n, 0);
  for (std::size_t i = 0; i < res.rank; ++i) coeff[res.pivot_cols[i]] = res.rref(i, n);
  return coeff;
}

Matrix null_space(const Matrix& m) {
  const auto res = rref(m);
  const Field& f = m.f();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < res.rank; ++i) v[res.pivot_cols[i]] = f.neg(res.rref(i, free));
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(m.field(), m.cols(), basis);
}

Matrix random_matrix(std::size_t rows, std::size_t cols, FieldPtr field, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Elem> data(rows * cols);
  for (auto& e : data) e = static_cast<Elem>(rng.uniform(field->order()));
  return Matrix(std::move(field), rows, cols, std::move(data));
}

EchelonBasis::EchelonBasis(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

void EchelonBasis::reduce(Vec& v) const {
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem factor = v[pivots_[i]];
    if (factor == 0) continue;
    const Elem nf = f.neg(factor);
    const Vec& r = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j)
      if (r[j] != 0) v[j] = f.add(v[j], f.mul(nf, r[j]));
  }
}

bool EchelonBasis::contains(std::span<const Elem> v) const {
  Vec w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool EchelonBasis::insert(std::span<const Elem> v) {
  if (v.size() != dim_) throw Error(Errc::DimensionMismatch, "vector length differs from basis");
  Vec w(v.begin(), v.end());
  reduce(w);
  std::size_t piv = 0;
  while (piv < dim_ && w[piv] == 0) ++piv;
  if (piv == dim_) return false;
  const Field& f = *field_;
  const Elem scale = f.inv(w[piv]);
  for (auto& e : w) e = f.mul(e, scale);
  // Keep the basis fully reduced so reduce() is a single pass.
  for (auto& r : rows_) {
    const Elem factor = r[piv];
    if (factor == 0) continue;
    const Elem nf = f.neg(factor);
    for (std::size_t j = 0; j < dim_; ++j)
      if (w[j] != 0) r[j] = f.add(r[j], f.mul(nf, w[j]));
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

bool for_each_combination(std::size_t n, std::size_t r,
                          const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool for_each_vector(const FieldPtr& field, std::size_t len,
                     const std::function<bool(std::span<const Elem>)>& visit) {
  const Elem q = field->order();
  Vec v(len, 0);
  while (true) {
    if (!visit(v)) return false;
    std::size_t i = 0;
    while (i < len && ++v[i] == q) v[i++] = 0;
    if (i == len) return true;
  }
}

bool for_each_subspace(const FieldPtr& field, std::size_t dim, std::size_t t,
                       const std::function<bool(const Matrix&)>& visit) {
  if (t > dim) return true;
  const Elem q = field->order();
  return for_each_combination(dim, t, [&](std::span<const std::size_t> piv) {
    // Free slots: row i, column j > piv[i] that is not a pivot column.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    std::vector<bool> is_pivot(dim, false);
    for (auto c : piv) is_pivot[c] = true;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = piv[i] + 1; j < dim; ++j)
        if (!is_pivot[j]) free.emplace_back(i, j);
    Matrix m(field, t, dim);
    for (std::size_t i = 0; i < t; ++i) m(i, piv[i]) = 1;
    while (true) {
      if (!visit(m)) return false;
      std::size_t s = 0;
      while (s < free.size()) {
        auto& e = m(free[s].first, free[s].second);
        if (++e < q) break;
        e = 0;
        ++s;
      }
      if (s == free.size()) return true;
    }
  });
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r == kSat) return kSat;
  }
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Multiplicative formula with 128-bit intermediates.
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > kSat) return kSat;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t gaussian_binomial(std::size_t dim, std::size_t t, std::uint64_t q) {
  if (t > dim) return 0;
  // Count RREF representatives: sum over pivot sets of q^(free slots).
  std::uint64_t total = 0;
  for_each_combination(dim, t, [&](std::span<const std::size_t> piv) {
    std::uint64_t free = 0;
    for (std::size_t i = 0; i < t; ++i) free += (dim - 1 - piv[i]) - (t - 1 - i);
    const std::uint64_t c = saturating_pow(q, free);
    total = (c > kSat - total) ? kSat : total + c;
    return total != kSat;
  });
  return total;
}

Vec xi_map(const Matrix& v, const FieldPtr& ext) {
  const Field& base = v.f();
  if (!base.is_prime()) throw Error(Errc::NonPrimeBaseField, "xi_map needs a prime base field");
  if (ext->characteristic() != base.characteristic())
    throw Error(Errc::FieldMismatch, "extension characteristic differs from base");
  if (ext->degree() != v.rows())
    throw Error(Errc::DimensionMismatch, "extension degree must equal the number of rows");
  const Elem p = base.characteristic();
  Vec out(v.cols(), 0);
  for (std::size_t j = 0; j < v.cols(); ++j) {
    Elem e = 0;
    for (std::size_t i = v.rows(); i-- > 0;) e = e * p + v(i, j);
    out[j] = e;
  }
  return out;
}

Matrix xi_inv(std::span<const Elem> w, const FieldPtr& ext, const FieldPtr& base) {
  if (!base->is_prime()) throw Error(Errc::NonPrimeBaseField, "xi_inv needs a prime base field");
  if (ext->characteristic() != base->characteristic())
    throw Error(Errc::FieldMismatch, "extension characteristic differs from base");
  const std::size_t t = ext->degree();
  const Elem p = base->characteristic();
  Matrix out(base, t, w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!ext->contains(w[j])) throw Error(Errc::FieldMismatch, "entry outside the extension field");
    Elem e = w[j];
    for (std::size_t i = 0; i < t; ++i) {
      out(i, j) = e % p;
      e /= p;
    }
  }
  return out;
}

}  // namespace gencover
