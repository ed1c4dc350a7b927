#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gencover/code.hpp"

namespace gencover {

using BigInt = boost::multiprecision::cpp_int;

/// How R_t is computed.
///  - Lifted:    covering radius of the same G over F_{q^t}, by coset-leader BFS.
///  - SpanCover: max over syndrome sets S of the fewest columns of H spanning S.
///  - BallCover: smallest r whose t-balls around C^t cover F_q^{t x n}.
enum class Method { Lifted, SpanCover, BallCover };

const char* method_name(Method m) noexcept;
std::optional<Method> parse_method(const std::string& name);

struct SearchLimits {
  /// Largest state space (syndromes, matrix-space points, subsets or
  /// subspaces) any single enumeration may touch.
  std::uint64_t state_cap = std::uint64_t{1} << 26;
};

// ---------------------------------------------------------------------------
// Block metric.

/// Number of nonzero columns.
std::size_t t_weight(const Matrix& v);
std::size_t t_distance(const Matrix& u, const Matrix& v);

/// sum_{i=0}^{r} C(n, i) (q^t - 1)^i. Throws RadiusOutOfRange unless r <= n.
BigInt ball_volume(std::size_t t, std::size_t r, std::size_t n, std::uint64_t q);

// ---------------------------------------------------------------------------
// Classical covering radius.

struct CoveringResult {
  std::size_t radius = 0;
  /// Smallest-index syndrome at maximal coset-leader weight.
  Vec deep_hole;
  /// Number of syndromes (cosets) per coset-leader weight 0..radius.
  std::vector<std::uint64_t> coset_weights;
};

/// Layered breadth-first search over F_Q^{n-k}: layer w+1 holds the syndromes
/// reachable from layer w by adding a * h_j and not seen before. Throws
/// SyndromeSpaceTooLarge when Q^{n-k} exceeds the cap.
CoveringResult covering_radius(const LinearCode& code, const SearchLimits& limits = {});

// ---------------------------------------------------------------------------
// Generalized covering radii.

struct RadiusEntry {
  std::size_t t = 0;
  std::size_t value = 0;
  Method method = Method::Lifted;
  /// Returned without search because t >= n - k.
  bool trivial = false;
  /// Syndromes (over the base field) attaining the maximum.
  std::vector<Vec> witness_syndromes;
  /// A minimal column set I with witness_syndromes inside span(H_I).
  std::vector<std::size_t> witness_columns;
};

struct RadiiReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint32_t q = 0;
  Method method = Method::Lifted;
  std::vector<RadiusEntry> entries;

  std::vector<std::size_t> values() const;
};

struct SpanCoverOptions {
  /// Restrict the outer maximum to bases of min(t, n-k)-dimensional
  /// subspaces. When false every t-subset of F_q^{n-k} is enumerated.
  bool independent_only = true;
};

RadiusEntry generalized_radius(const LinearCode& code, std::size_t t, Method method,
                               const SearchLimits& limits = {},
                               const SpanCoverOptions& options = {});

/// Span-cover evaluation on an explicit parity-check matrix (full row rank).
RadiusEntry span_cover_radius(const Matrix& H, std::size_t t, const SearchLimits& limits = {},
                              const SpanCoverOptions& options = {});

/// R_1..R_{t_max}. For t >= n-k the value n-k is returned without search.
/// Throws PropertyViolation if the computed sequence is not nondecreasing.
RadiiReport radii_hierarchy(const LinearCode& code, std::size_t t_max, Method method,
                            const SearchLimits& limits = {});

/// Recomputes R_1..R_{t_max} by span cover on A H for `trials` random
/// invertible A; true iff every value matches the one from H.
bool check_parity_invariance(const LinearCode& code, std::size_t t_max, std::size_t trials,
                             std::uint64_t seed, const SearchLimits& limits = {});

}  // namespace gencover
