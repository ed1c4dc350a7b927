#include "gencover/weights.hpp"

#include <algorithm>

#include "gencover/radii.hpp"

namespace gencover {

namespace {

void check_t(const LinearCode& code, std::size_t t) {
  if (t < 1 || t > code.k())
    throw Error(Errc::TOutOfRange, "t must lie in [1, k] = [1, " + std::to_string(code.k()) + "]");
}

}  // namespace

std::size_t generalized_weight(const LinearCode& code, std::size_t t, const WeightLimits& limits) {
  check_t(code, t);
  const std::uint64_t q = code.field()->order();
  if (saturating_pow(q, code.k()) > limits.state_cap)
    throw Error(Errc::SearchTooLarge, "q^k exceeds the subcode search cap");
  std::size_t best = code.n();
  for_each_subspace(code.field(), code.k(), t, [&](const Matrix& U) {
    best = std::min(best, t_weight(U * code.generator()));
    return best > t;
  });
  return best;
}

std::size_t packing_radius(const LinearCode& code, std::size_t t, const WeightLimits& limits) {
  return (generalized_weight(code, t, limits) - 1) / 2;
}

WeightHierarchy weight_hierarchy(const LinearCode& code, const WeightLimits& limits) {
  WeightHierarchy h;
  for (std::size_t t = 1; t <= code.k(); ++t) {
    h.d.push_back(generalized_weight(code, t, limits));
    h.delta.push_back((h.d.back() - 1) / 2);
  }
  return h;
}

bool verify_packing(const LinearCode& code, std::size_t t, std::size_t r,
                    const WeightLimits& limits) {
  if (t < 1) throw Error(Errc::TOutOfRange, "t must be at least 1");
  const std::uint64_t q = code.field()->order();
  const std::size_t n = code.n();
  const std::uint64_t Q = saturating_pow(q, t);
  if (saturating_pow(Q, n) > limits.state_cap)
    throw Error(Errc::SearchTooLarge, "q^{tn} exceeds the packing check cap");

  // Elements of C^t as column codes in [0, q^t)^n.
  const auto words = code.codewords(limits.state_cap);
  const std::uint64_t tuples = saturating_pow(words.size(), t);
  if (tuples > limits.state_cap)
    throw Error(Errc::SearchTooLarge, "|C|^t exceeds the packing check cap");
  std::vector<std::vector<std::uint32_t>> cols(tuples, std::vector<std::uint32_t>(n));
  std::vector<Matrix> mats;
  mats.reserve(tuples);
  for (std::uint64_t T = 0; T < tuples; ++T) {
    Matrix m(code.field(), t, n);
    std::uint64_t rest = T;
    for (std::size_t i = 0; i < t; ++i) {
      const auto& w = words[rest % words.size()];
      rest /= words.size();
      std::copy(w.begin(), w.end(), m.row(i).begin());
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t v = 0;
      for (std::size_t i = t; i-- > 0;) v = v * q + m(i, j);
      cols[T][j] = static_cast<std::uint32_t>(v);
    }
    mats.push_back(std::move(m));
  }

  auto distance = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < n; ++j) d += a[j] != b[j];
    return d;
  };

  // Points of the ball of radius r around `centre`, as column codes: choose up
  // to r positions and give each a different value.
  auto ball_meets = [&](const std::vector<std::uint32_t>& centre,
                        const std::vector<std::uint32_t>& other) {
    std::vector<std::uint32_t> point = centre;
    bool hit = false;
    for (std::size_t w = 0; w <= std::min(r, n) && !hit; ++w)
      for_each_combination(n, w, [&](std::span<const std::size_t> pos) {
        std::vector<std::uint32_t> shift(w, 1);
        while (true) {
          for (std::size_t i = 0; i < w; ++i)
            point[pos[i]] = static_cast<std::uint32_t>((centre[pos[i]] + shift[i]) % Q);
          if (distance(point, other) <= r) {
            hit = true;
            return false;
          }
          std::size_t i = 0;
          while (i < w && ++shift[i] == Q) shift[i++] = 1;
          if (i == w) break;
        }
        for (auto j : pos) point[j] = centre[j];
        return true;
      });
    return hit;
  };

  const Field& f = *code.field();
  for (std::uint64_t a = 0; a < tuples; ++a)
    for (std::uint64_t b = a + 1; b < tuples; ++b) {
      if (distance(cols[a], cols[b]) > 2 * r) continue;
      Matrix diff(code.field(), t, n);
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < n; ++j) diff(i, j) = f.sub(mats[a](i, j), mats[b](i, j));
      if (rank(diff) < t) continue;
      if (ball_meets(cols[a], cols[b])) return false;
    }
  return true;
}

}  // namespace gencover
