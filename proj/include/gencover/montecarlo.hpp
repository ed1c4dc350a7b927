#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gencover/linalg.hpp"
#include "gencover/radii.hpp"

namespace gencover {

struct MCSummary {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double success_fraction = 0;
  double mean_xv = 0;
  double exact_expectation = 0;
  double ebound_low = 0;
  double ebound_high = 0;
};

/// Expected number of full-rank pairs u in F_2^{2 x k} with uG within
/// block distance r of a fixed 2 x n matrix, over a uniform binary G:
///   (2^k - 1)(2^k - 2) V / 2^{2n},  V the binary t = 2 ball volume.
double exact_expectation_xv(std::size_t n, std::size_t k, std::size_t r);

struct XvBracket {
  double low;
  double high;
};

/// V 2^{2k-1-2n} and V 2^{2k-2n}.
XvBracket xv_bracket(std::size_t n, std::size_t k, std::size_t r);

/// Mean over `trials` random k x n binary G of the count of full-rank u with
/// d(v, uG) <= r. v is 2 x n over GF(2); k <= 8.
double empirical_xv(std::size_t n, std::size_t k, std::size_t r, const Matrix& v,
                    std::size_t trials, std::uint64_t seed);

struct CosetAverage {
  BigInt lhs_scaled;  // sum_v |S ∩ (S + v)|
  BigInt rhs_scaled;  // |S|^2
  std::uint64_t space = 0;

  bool equal() const { return lhs_scaled == rhs_scaled; }
};

/// Both sides of the coset-average identity multiplied by q^{tn}, by full
/// enumeration of v. Duplicates in S are ignored. Requires q^{tn} <= 2^20.
CosetAverage coset_avg_check(const std::vector<Matrix>& S, const FieldPtr& field, std::size_t t,
                             std::size_t n);

/// Fraction of `trials` random [n, k] binary codes with R_2 <= floor(rho n).
/// Generator matrices are redrawn until they have rank k.
MCSummary estimate_r2_success(std::size_t n, std::size_t k, double rho, std::size_t trials,
                              std::uint64_t seed, const SearchLimits& limits = {});

}  // namespace gencover
