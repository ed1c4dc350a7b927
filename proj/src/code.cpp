#include "gencover/code.hpp"

#include <algorithm>
#include <string>

namespace gencover {

namespace {

// Parity-check matrix of the row space of a full-rank G, via the standard
// form [I | A] -> [-A^T | I] with the column permutation undone.
Matrix parity_from_generator(const Matrix& G) {
  const auto res = rref(G);
  const Field& f = G.f();
  const std::size_t n = G.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : res.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix H(G.field(), free_cols.size(), n);
  for (std::size_t r = 0; r < free_cols.size(); ++r) {
    H(r, free_cols[r]) = 1;
    for (std::size_t i = 0; i < res.rank; ++i)
      H(r, res.pivot_cols[i]) = f.neg(res.rref(i, free_cols[r]));
  }
  return H;
}

Matrix nonzero_rows(const RrefResult& res) {
  std::vector<std::size_t> idx(res.rank);
  for (std::size_t i = 0; i < res.rank; ++i) idx[i] = i;
  return res.rref.select_rows(idx);
}

}  // namespace

LinearCode::LinearCode(Matrix G, Matrix H, bool rank_dropped)
    : G_(std::move(G)),
      H_(std::move(H)),
      n_(G_.cols()),
      k_(G_.rows()),
      rank_dropped_(rank_dropped) {}

LinearCode LinearCode::from_generator(const Matrix& G) {
  if (G.rows() == 0 || G.cols() == 0) throw Error(Errc::EmptyMatrix, "generator matrix is empty");
  // Keep the original rows that extend the span, in order.
  EchelonBasis basis(G.field(), G.cols());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < G.rows(); ++i)
    if (basis.insert(G.row(i))) keep.push_back(i);
  const bool dropped = keep.size() < G.rows();
  if (keep.empty()) {
    LinearCode z = zero_code(G.field(), G.cols());
    z.rank_dropped_ = true;
    return z;
  }
  Matrix Gk = dropped ? G.select_rows(keep) : G;
  Matrix H = parity_from_generator(Gk);
  return LinearCode(std::move(Gk), std::move(H), dropped);
}

LinearCode LinearCode::from_parity_check(const Matrix& H) {
  if (H.cols() == 0) throw Error(Errc::EmptyMatrix, "parity-check matrix has no columns");
  const auto res = rref(H);
  Matrix Hk = (res.rank == H.rows()) ? H : nonzero_rows(res);
  Matrix G = null_space(H);
  if (G.rows() == 0) return zero_code(H.field(), H.cols());
  return LinearCode(std::move(G), std::move(Hk), false);
}

LinearCode LinearCode::zero_code(FieldPtr field, std::size_t n) {
  Matrix G(field, 0, n);
  Matrix H = Matrix::identity(field, n);
  return LinearCode(std::move(G), std::move(H), false);
}

Vec LinearCode::encode(std::span<const Elem> message) const {
  if (message.size() != k_) throw Error(Errc::DimensionMismatch, "message length must equal k");
  const Field& f = *field();
  Vec out(n_, 0);
  for (std::size_t i = 0; i < k_; ++i) {
    if (message[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) out[j] = f.add(out[j], f.mul(message[i], G_(i, j)));
  }
  return out;
}

Vec LinearCode::syndrome(std::span<const Elem> word) const { return H_ * word; }

bool LinearCode::contains(std::span<const Elem> word) const {
  const Vec s = syndrome(word);
  return std::all_of(s.begin(), s.end(), [](Elem e) { return e == 0; });
}

std::vector<Vec> LinearCode::codewords(std::uint64_t cap) const {
  const std::uint64_t count = saturating_pow(field()->order(), k_);
  if (count > cap)
    throw Error(Errc::SearchTooLarge, "q^k = " + std::to_string(count) + " codewords exceed cap");
  std::vector<Vec> out;
  out.reserve(count);
  for_each_vector(field(), k_, [&](std::span<const Elem> u) {
    out.push_back(encode(u));
    return true;
  });
  return out;
}

bool LinearCode::same_code(const LinearCode& other) const {
  if (!same_field(field(), other.field()) || n_ != other.n_ || k_ != other.k_) return false;
  if (k_ == 0) return true;
  return rref(G_).rref == rref(other.G_).rref;
}

LinearCode hamming_code(std::size_t m, std::uint32_t q) {
  if (m < 2) throw Error(Errc::DegreeOutOfRange, "Hamming codes need redundancy m >= 2");
  auto field = Field::create(q, 1);
  const std::uint64_t total = saturating_pow(q, m);
  if (total > (std::uint64_t{1} << 24)) throw Error(Errc::SearchTooLarge, "q^m too large");
  std::vector<Vec> cols;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Vec v(m);
    std::uint64_t x = idx;
    for (std::size_t i = m; i-- > 0;) {
      v[i] = static_cast<Elem>(x % q);
      x /= q;
    }
    const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (*lead == 1) cols.push_back(std::move(v));
  }
  return LinearCode::from_parity_check(Matrix::from_columns(field, m, cols));
}

LinearCode lift(const LinearCode& code, std::size_t t) {
  const Field& base = *code.field();
  if (!base.is_prime()) throw Error(Errc::NonPrimeBaseField, "lifting needs a prime base field");
  if (t < 1) throw Error(Errc::TOutOfRange, "t must be at least 1");
  if (t == 1) return code;
  auto ext = Field::create(base.characteristic(), static_cast<unsigned>(t));
  if (code.degenerate()) return LinearCode::zero_code(ext, code.n());
  // Prime-field elements embed as constant polynomials: same integer encoding.
  const Matrix& G = code.generator();
  return LinearCode::from_generator(Matrix(ext, G.rows(), G.cols(), G.data()));
}

LinearCode puncture(const LinearCode& code, std::size_t position) {
  if (position >= code.n()) throw Error(Errc::PositionOutOfRange, "puncture position out of range");
  if (code.n() < 2) throw Error(Errc::PositionOutOfRange, "puncturing would leave length 0");
  if (code.degenerate()) return LinearCode::zero_code(code.field(), code.n() - 1);
  return LinearCode::from_generator(code.generator().remove_column(position));
}

LinearCode extend(const LinearCode& code) {
  const Field& f = *code.field();
  const Matrix& G = code.generator();
  if (code.degenerate()) return LinearCode::zero_code(code.field(), code.n() + 1);
  Matrix ext(code.field(), G.rows(), G.cols() + 1);
  for (std::size_t i = 0; i < G.rows(); ++i) {
    Elem sum = 0;
    for (std::size_t j = 0; j < G.cols(); ++j) {
      ext(i, j) = G(i, j);
      sum = f.add(sum, G(i, j));
    }
    ext(i, G.cols()) = f.neg(sum);
  }
  return LinearCode::from_generator(ext);
}

LinearCode shorten(const LinearCode& code, std::size_t position) {
  if (position >= code.n()) throw Error(Errc::PositionOutOfRange, "shorten position out of range");
  if (code.n() < 2) throw Error(Errc::PositionOutOfRange, "shortening would leave length 0");
  return LinearCode::from_parity_check(code.parity_check().remove_column(position));
}

LinearCode u_uplusv(const LinearCode& c1, const LinearCode& c2) {
  require_same_field(c1.field(), c2.field(), "u_uplusv");
  if (c1.n() != c2.n()) throw Error(Errc::LengthMismatch, "(u, u+v) needs equal lengths");
  const std::size_t n = c1.n();
  const Matrix& G1 = c1.generator();
  const Matrix& G2 = c2.generator();
  if (c1.k() + c2.k() == 0) return LinearCode::zero_code(c1.field(), 2 * n);
  Matrix G(c1.field(), c1.k() + c2.k(), 2 * n);
  for (std::size_t i = 0; i < c1.k(); ++i)
    for (std::size_t j = 0; j < n; ++j) G(i, j) = G(i, n + j) = G1(i, j);
  for (std::size_t i = 0; i < c2.k(); ++i)
    for (std::size_t j = 0; j < n; ++j) G(c1.k() + i, n + j) = G2(i, j);
  return LinearCode::from_generator(G);
}

LinearCode direct_sum(const LinearCode& c1, const LinearCode& c2) {
  require_same_field(c1.field(), c2.field(), "direct_sum");
  const std::size_t n1 = c1.n(), n2 = c2.n();
  if (c1.k() + c2.k() == 0) return LinearCode::zero_code(c1.field(), n1 + n2);
  Matrix G(c1.field(), c1.k() + c2.k(), n1 + n2);
  for (std::size_t i = 0; i < c1.k(); ++i)
    for (std::size_t j = 0; j < n1; ++j) G(i, j) = c1.generator()(i, j);
  for (std::size_t i = 0; i < c2.k(); ++i)
    for (std::size_t j = 0; j < n2; ++j) G(c1.k() + i, n1 + j) = c2.generator()(i, j);
  return LinearCode::from_generator(G);
}

}  // namespace gencover
