#include <doctest.h>

#include "gencover/planner.hpp"
#include "gencover/radii.hpp"
#include "oracles.hpp"

using namespace gencover;

namespace {

const FieldPtr F2 = Field::create(2);
const FieldPtr F3 = Field::create(3);

LinearCode rep3() { return LinearCode::from_generator(Matrix::from_rows(F2, {{1, 1, 1}})); }

LinearCode random_code(std::uint64_t seed, const FieldPtr& F, std::size_t n, std::size_t k) {
  return LinearCode::from_generator(random_matrix(k, n, F, seed));
}

void check_witness(const LinearCode& c, const RadiusEntry& e) {
  const Matrix& H = c.parity_check();
  if (H.rows() == 0) return;
  CHECK(e.witness_columns.size() == e.value);
  CHECK(columns_span(H, e.witness_columns, e.witness_syndromes));
  CHECK(oracle::min_cover(H, e.witness_syndromes) == e.value);
}

}  // namespace

TEST_CASE("block metric") {
  CHECK(t_weight(Matrix(F2, 2, 3)) == 0);
  const Matrix v = Matrix::from_rows(F2, {{1, 0, 0}, {0, 0, 1}});
  CHECK(t_weight(v) == 2);
  CHECK(t_distance(v, v) == 0);
  CHECK(t_distance(v, Matrix(F2, 2, 3)) == 2);
  try {
    t_distance(v, Matrix(F2, 3, 2));
    FAIL("shape mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionMismatch);
  }
}

TEST_CASE("ball volume equals brute-force counting") {
  CHECK(ball_volume(3, 0, 5, 2) == 1);
  CHECK(ball_volume(1, 4, 4, 3) == 81);
  CHECK(ball_volume(2, 1, 3, 2) == 10);
  CHECK(ball_volume(2, 1, 4, 2) == 13);
  for (std::uint32_t q : {2u, 3u})
    for (std::size_t t = 1; t <= 2; ++t)
      for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::uint64_t> by_weight(n + 1, 0);
        const auto F = Field::create(q);
        for (const auto& flat : oracle::all_vectors(*F, t * n))
          ++by_weight[t_weight(Matrix(F, t, n, flat))];
        std::uint64_t cumulative = 0;
        for (std::size_t r = 0; r <= n; ++r) {
          cumulative += by_weight[r];
          CHECK(ball_volume(t, r, n, q) == cumulative);
        }
      }
  // Exact beyond 64 bits.
  CHECK(ball_volume(8, 40, 40, 2) == BigInt(1) << 320);
  try {
    ball_volume(1, 5, 4, 2);
    FAIL("radius above n");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RadiusOutOfRange);
  }
}

TEST_CASE("classical covering radius by syndrome BFS") {
  CHECK(covering_radius(LinearCode::from_generator(Matrix::identity(F2, 4))).radius == 0);
  CHECK(covering_radius(hamming_code(3, 2)).radius == 1);
  CHECK(covering_radius(rep3()).radius == 1);
  CHECK(covering_radius(LinearCode::zero_code(F3, 3)).radius == 3);

  const auto h = covering_radius(hamming_code(3, 2));
  CHECK(h.coset_weights == std::vector<std::uint64_t>{1, 7});

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto F = seed % 3 == 0 ? F3 : F2;
    const auto c = random_code(seed, F, 4 + seed % 3, 1 + seed % 3);
    const auto cr = covering_radius(c);
    CHECK(cr.radius == oracle::covering_radius(c));
    std::uint64_t total = 0;
    for (auto w : cr.coset_weights) total += w;
    CHECK(total == saturating_pow(F->order(), c.redundancy()));
    if (c.redundancy() > 0) CHECK(oracle::min_cover(c.parity_check(), {cr.deep_hole}) == cr.radius);
  }
}

TEST_CASE("BFS over odd characteristic extension fields") {
  // Ternary codes lifted to GF(9) and GF(27) exercise the chunked adder.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = random_code(seed, F3, 5, 2);
    for (std::size_t t = 2; t <= 3; ++t)
      CHECK(generalized_radius(c, t, Method::Lifted).value ==
            generalized_radius(c, t, Method::SpanCover).value);
  }
  const auto c5 = LinearCode::from_generator(Matrix::from_rows(Field::create(5), {{1, 2, 3, 4}}));
  CHECK(generalized_radius(c5, 2, Method::Lifted).value == oracle::radius_by_definition(c5, 2));
}

TEST_CASE("paper examples for every method") {
  const auto h = hamming_code(3, 2);
  const auto s = shorten(h, 6);
  for (Method m : {Method::Lifted, Method::SpanCover, Method::BallCover}) {
    CAPTURE(method_name(m));
    for (std::size_t t = 1; t <= 2; ++t) {
      const auto e = generalized_radius(h, t, m);
      CHECK(e.value == t);
      check_witness(h, e);
    }
    CHECK(generalized_radius(s, 2, m).value == 2);
    CHECK(generalized_radius(rep3(), 2, m).value == 2);
  }
}

TEST_CASE("all methods match the definition on tiny codes") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const bool ternary = seed % 5 == 0;
    const auto F = ternary ? F3 : F2;
    const std::size_t n = ternary ? 4 : 3 + seed % 4;
    const auto c = random_code(seed, F, n, 1 + seed % 2);
    for (std::size_t t = 1; t <= 2; ++t) {
      const std::size_t truth = oracle::radius_by_definition(c, t);
      for (Method m : {Method::Lifted, Method::SpanCover, Method::BallCover}) {
        CAPTURE(seed);
        CAPTURE(method_name(m));
        const auto e = generalized_radius(c, t, m);
        CHECK(e.value == truth);
        check_witness(c, e);
      }
      CHECK(generalized_radius(c, t, Method::SpanCover, {}, {false}).value == truth);
    }
  }
}

TEST_CASE("hierarchies") {
  const auto h = hamming_code(3, 2);
  const auto rep = radii_hierarchy(h, 3, Method::Lifted);
  CHECK(rep.values() == std::vector<std::size_t>{1, 2, 3});
  CHECK(rep.entries[2].trivial);
  CHECK_FALSE(rep.entries[1].trivial);
  CHECK(rep.n == 7);
  CHECK(rep.k == 4);
  CHECK(rep.q == 2);
  for (const auto& e : rep.entries) check_witness(h, e);

  CHECK(radii_hierarchy(shorten(h, 6), 3, Method::SpanCover).values() ==
        std::vector<std::size_t>{2, 2, 3});
  const auto beyond = radii_hierarchy(rep3(), 4, Method::BallCover).values();
  CHECK(beyond == std::vector<std::size_t>{1, 2, 2, 2});
  CHECK(parse_method("span") == Method::SpanCover);
  CHECK_FALSE(parse_method("bogus"));
}

TEST_CASE("method preconditions and caps") {
  const auto F4 = Field::create(2, 2);
  const auto c4 = LinearCode::from_generator(Matrix::from_rows(F4, {{1, 2, 3}}));
  CHECK(generalized_radius(c4, 1, Method::Lifted).value == oracle::covering_radius(c4));
  try {
    generalized_radius(c4, 2, Method::Lifted);
    FAIL("lifting over GF(4)");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MethodInfeasible);
  }
  const auto h = hamming_code(4, 2);
  try {
    covering_radius(h, SearchLimits{8});
    FAIL("cap");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SyndromeSpaceTooLarge);
  }
  try {
    generalized_radius(h, 2, Method::BallCover);
    FAIL("ball cover of a length-15 code");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MethodInfeasible);
    CHECK(e.is_capacity());
  }
  CHECK_THROWS_AS(generalized_radius(h, 0, Method::Lifted), Error);
}

TEST_CASE("radii do not depend on the parity-check matrix chosen") {
  CHECK(check_parity_invariance(hamming_code(3, 2), 2, 20, 7));
  const auto parity = LinearCode::from_generator(Matrix::from_rows(F2, {{1, 0, 1}, {0, 1, 1}}));
  CHECK(check_parity_invariance(parity, 2, 20, 11));
  CHECK(check_parity_invariance(random_code(3, F3, 5, 2), 2, 5, 3));
}
