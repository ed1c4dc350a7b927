#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gencover/linalg.hpp"

namespace gencover {

enum class PlanMethod { Exact, Greedy };

const char* plan_method_name(PlanMethod m) noexcept;

/// A set of parity-check columns I together with coefficients expressing
/// every requested syndrome over H_I:
///   syndrome[i] = sum_j coefficients(i, j) * h_{columns[j]}.
/// Rows of `coefficients` follow the input order of the syndromes, including
/// duplicates and zero syndromes.
struct BatchPlan {
  std::vector<std::size_t> columns;
  Matrix coefficients;
  PlanMethod method;

  std::size_t size() const noexcept { return columns.size(); }
};

struct PlanLimits {
  /// Maximum number of column subsets the exact search may examine.
  std::uint64_t subset_cap = std::uint64_t{1} << 26;
};

/// Smallest column set whose span holds every syndrome. Sizes are tried from
/// the rank of the syndrome batch upward; subsets in lexicographic order.
/// Throws Infeasible when some syndrome is outside the column space of H and
/// SearchTooLarge when the subset budget runs out.
BatchPlan plan_exact(const Matrix& H, const std::vector<Vec>& syndromes,
                     const PlanLimits& limits = {});

/// Greedy heuristic: repeatedly add the column that minimizes
/// rank([H_I | S]) - rank(H_I), lowest index on ties, until that deficiency
/// reaches 0. No approximation guarantee.
BatchPlan plan_greedy(const Matrix& H, const std::vector<Vec>& syndromes);

/// Recomputes each syndrome from the plan; false on any mismatch, malformed
/// shape, or out-of-range column.
bool verify_plan(const Matrix& H, const std::vector<Vec>& syndromes, const BatchPlan& plan);

/// True iff every vector in `targets` lies in the span of the columns of H
/// indexed by `columns`.
bool columns_span(const Matrix& H, std::span<const std::size_t> columns,
                  const std::vector<Vec>& targets);

}  // namespace gencover
