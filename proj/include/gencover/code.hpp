#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gencover/linalg.hpp"

namespace gencover {

/**
 * An [n, k] linear code over a finite field, held as a full-rank generator
 * matrix G (k x n) together with a full-rank parity-check matrix H
 * ((n-k) x n) satisfying G H^T = 0.
 *
 * k = 0 is allowed and marks a degenerate (zero) code; G is then 0 x n and H
 * is the identity. Such codes arise from shortening or puncturing small codes.
 */
class LinearCode {
 public:
  /// Rank-deficient input is reduced to a maximal independent subset of its
  /// rows and flagged via rank_dropped(). Throws EmptyMatrix for 0 rows/cols.
  static LinearCode from_generator(const Matrix& G);

  /// The code {x : H x = 0}. A full-rank H is kept verbatim; otherwise its
  /// nonzero reduced rows are used.
  static LinearCode from_parity_check(const Matrix& H);

  static LinearCode zero_code(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return G_.field(); }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t redundancy() const noexcept { return n_ - k_; }
  const Matrix& generator() const noexcept { return G_; }
  const Matrix& parity_check() const noexcept { return H_; }
  bool rank_dropped() const noexcept { return rank_dropped_; }
  bool degenerate() const noexcept { return k_ == 0; }

  Vec encode(std::span<const Elem> message) const;
  Vec syndrome(std::span<const Elem> word) const;
  bool contains(std::span<const Elem> word) const;

  /// All q^k codewords, message index order. Throws SearchTooLarge past cap.
  std::vector<Vec> codewords(std::uint64_t cap = std::uint64_t{1} << 24) const;

  /// Equality as sets of codewords (row-space comparison).
  bool same_code(const LinearCode& other) const;

 private:
  LinearCode(Matrix G, Matrix H, bool rank_dropped);

  Matrix G_;
  Matrix H_;
  std::size_t n_;
  std::size_t k_;
  bool rank_dropped_;
};

/// q-ary Hamming code with redundancy m over the prime field F_q. Columns of H
/// are the projective points of F_q^m (leading nonzero entry 1) in
/// lexicographic order, first coordinate most significant.
LinearCode hamming_code(std::size_t m, std::uint32_t q);

/// The code generated by the same G over F_{q^t}. Requires a prime base field.
LinearCode lift(const LinearCode& code, std::size_t t);

/// Deletes coordinate `position`; the dimension may drop (see rank_dropped()).
LinearCode puncture(const LinearCode& code, std::size_t position);

/// Appends the coordinate -sum(c_i): generator [G | -G 1^T].
LinearCode extend(const LinearCode& code);

/// Deletes column `position` of H, which keeps exactly the codewords that
/// vanish at `position` and drops that coordinate.
LinearCode shorten(const LinearCode& code, std::size_t position);

/// (u, u + v) construction, generator [[G1, G1], [0, G2]].
LinearCode u_uplusv(const LinearCode& c1, const LinearCode& c2);

LinearCode direct_sum(const LinearCode& c1, const LinearCode& c2);

}  // namespace gencover
