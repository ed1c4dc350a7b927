#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gencover/code.hpp"

namespace gencover {

struct WeightLimits {
  /// Largest q^k (for subcode search) or q^{tn} (for packing checks) allowed.
  std::uint64_t state_cap = std::uint64_t{1} << 22;
};

struct WeightHierarchy {
  std::vector<std::size_t> d;      // d_1..d_k
  std::vector<std::size_t> delta;  // floor((d_t - 1) / 2)
};

/// Smallest support of a t-dimensional subcode, by enumerating every
/// t-dimensional subspace of the message space once (RREF representatives).
std::size_t generalized_weight(const LinearCode& code, std::size_t t,
                               const WeightLimits& limits = {});

std::size_t packing_radius(const LinearCode& code, std::size_t t, const WeightLimits& limits = {});

WeightHierarchy weight_hierarchy(const LinearCode& code, const WeightLimits& limits = {});

/// True iff t-balls of radius r around any c, c' in C^t with rank(c - c') = t
/// are disjoint.
bool verify_packing(const LinearCode& code, std::size_t t, std::size_t r,
                    const WeightLimits& limits = {});

}  // namespace gencover
