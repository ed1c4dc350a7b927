#include "gencover/montecarlo.hpp"

#include <bit>
#include <cmath>

#include "gencover/random.hpp"

namespace gencover {

namespace {

void check_nkr(std::size_t n, std::size_t k, std::size_t r) {
  if (k < 2 || k > n) throw Error(Errc::DomainError, "need 2 <= k <= n");
  if (r > n) throw Error(Errc::RadiusOutOfRange, "need r <= n");
  if (n > 500) throw Error(Errc::DomainError, "n too large for double evaluation");
}

double to_double(const BigInt& x) { return x.convert_to<double>(); }

}  // namespace

double exact_expectation_xv(std::size_t n, std::size_t k, std::size_t r) {
  check_nkr(n, k, r);
  const BigInt V = ball_volume(2, r, n, 2);
  const double pairs = (std::ldexp(1.0, static_cast<int>(k)) - 1) * (std::ldexp(1.0, static_cast<int>(k)) - 2);
  return pairs * std::ldexp(to_double(V), -2 * static_cast<int>(n));
}

XvBracket xv_bracket(std::size_t n, std::size_t k, std::size_t r) {
  check_nkr(n, k, r);
  const double V = to_double(ball_volume(2, r, n, 2));
  const int e = 2 * static_cast<int>(k) - 2 * static_cast<int>(n);
  return {std::ldexp(V, e - 1), std::ldexp(V, e)};
}

double empirical_xv(std::size_t n, std::size_t k, std::size_t r, const Matrix& v,
                    std::size_t trials, std::uint64_t seed) {
  check_nkr(n, k, r);
  if (k > 8) throw Error(Errc::SearchTooLarge, "empirical X_v needs k <= 8");
  if (n > 63) throw Error(Errc::DomainError, "empirical X_v needs n <= 63");
  if (trials < 1) throw Error(Errc::DomainError, "trials must be at least 1");
  if (v.f().order() != 2 || v.rows() != 2 || v.cols() != n)
    throw Error(Errc::DimensionMismatch, "v must be a binary 2 x n matrix");

  std::uint64_t v0 = 0, v1 = 0;
  for (std::size_t j = 0; j < n; ++j) {
    v0 |= std::uint64_t{v(0, j)} << j;
    v1 |= std::uint64_t{v(1, j)} << j;
  }
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::size_t words = std::size_t{1} << k;
  std::vector<std::uint64_t> code(words);
  std::uint64_t total = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    std::vector<std::uint64_t> rows(k);
    for (auto& row : rows) row = rng.next() & mask;
    // Codeword of message m, built by Gray-code style accumulation.
    code[0] = 0;
    for (std::size_t m = 1; m < words; ++m) {
      const auto low = static_cast<std::size_t>(std::countr_zero(m));
      code[m] = code[m & (m - 1)] ^ rows[low];
    }
    // Full-rank u: rows a, b nonzero and distinct.
    for (std::size_t a = 1; a < words; ++a) {
      const std::uint64_t da = code[a] ^ v0;
      for (std::size_t b = 1; b < words; ++b) {
        if (b == a) continue;
        const std::uint64_t differing = da | (code[b] ^ v1);
        if (static_cast<std::size_t>(std::popcount(differing)) <= r) ++total;
      }
    }
  }
  return static_cast<double>(total) / static_cast<double>(trials);
}

CosetAverage coset_avg_check(const std::vector<Matrix>& S, const FieldPtr& field, std::size_t t,
                             std::size_t n) {
  const std::uint64_t q = field->order();
  const std::uint64_t space = saturating_pow(q, t * n);
  if (space > (std::uint64_t{1} << 20))
    throw Error(Errc::SearchTooLarge, "q^{tn} exceeds 2^20");

  // Matrices indexed by their entries read row-major as base-q digits.
  auto index_of = [&](const Matrix& m) {
    if (m.rows() != t || m.cols() != n) throw Error(Errc::DimensionMismatch, "S has a wrong shape");
    require_same_field(m.field(), field, "coset_avg_check");
    std::uint64_t idx = 0;
    for (Elem e : m.data()) idx = idx * q + e;
    return idx;
  };
  const std::size_t len = t * n;
  auto digits = [&](std::uint64_t idx) {
    Vec d(len);
    for (std::size_t i = len; i-- > 0;) {
      d[i] = static_cast<Elem>(idx % q);
      idx /= q;
    }
    return d;
  };
  auto add = [&](const Vec& a, const Vec& b) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < len; ++i) idx = idx * q + field->add(a[i], b[i]);
    return idx;
  };

  std::vector<bool> member(space, false);
  std::vector<Vec> elems;
  for (const auto& m : S) {
    const auto idx = index_of(m);
    if (!member[idx]) {
      member[idx] = true;
      elems.push_back(digits(idx));
    }
  }

  CosetAverage out;
  out.space = space;
  std::uint64_t lhs = 0;
  for (std::uint64_t v = 0; v < space; ++v) {
    const Vec dv = digits(v);
    for (const auto& s : elems) lhs += member[add(s, dv)];
  }
  out.lhs_scaled = lhs;
  out.rhs_scaled = BigInt(elems.size()) * elems.size();
  return out;
}

MCSummary estimate_r2_success(std::size_t n, std::size_t k, double rho, std::size_t trials,
                              std::uint64_t seed, const SearchLimits& limits) {
  if (k < 1 || k > n) throw Error(Errc::DomainError, "need 1 <= k <= n");
  if (!(rho >= 0 && rho <= 1)) throw Error(Errc::DomainError, "rho must lie in [0, 1]");
  if (trials < 1) throw Error(Errc::DomainError, "trials must be at least 1");
  const auto field = Field::create(2);
  const auto threshold = static_cast<std::size_t>(std::floor(rho * static_cast<double>(n) + 1e-9));

  MCSummary out;
  out.trials = trials;
  out.seed = seed;
  std::size_t successes = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = derive_seed(seed, trial);
    Matrix G(field, k, n);
    for (std::uint64_t draw = 0;; ++draw) {
      G = random_matrix(k, n, field, derive_seed(trial_seed, draw));
      if (rank(G) == k) break;
    }
    const auto code = LinearCode::from_generator(G);
    const std::size_t r2 =
        code.redundancy() <= 2 ? code.redundancy()
                               : generalized_radius(code, 2, Method::Lifted, limits).value;
    successes += r2 <= threshold;
  }
  out.success_fraction = static_cast<double>(successes) / static_cast<double>(trials);
  if (k >= 2) {
    const auto r = std::min(threshold, n);
    out.exact_expectation = exact_expectation_xv(n, k, r);
    const auto b = xv_bracket(n, k, r);
    out.ebound_low = b.low;
    out.ebound_high = b.high;
  }
  return out;
}

}  // namespace gencover
