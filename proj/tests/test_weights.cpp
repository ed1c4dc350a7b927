#include <doctest.h>

#include "gencover/radii.hpp"
#include "gencover/weights.hpp"
#include "oracles.hpp"

using namespace gencover;

namespace {

const FieldPtr F2 = Field::create(2);

LinearCode code_of(std::initializer_list<std::initializer_list<Elem>> rows) {
  return LinearCode::from_generator(Matrix::from_rows(F2, rows));
}

}  // namespace

TEST_CASE("weight hierarchy examples") {
  const auto h = hamming_code(3, 2);
  CHECK(generalized_weight(h, 1) == 3);
  CHECK(generalized_weight(h, 2) == 5);
  CHECK(packing_radius(h, 1) == 1);
  CHECK(packing_radius(h, 2) == 2);
  const auto full = LinearCode::from_generator(Matrix::identity(F2, 5));
  for (std::size_t t = 1; t <= 5; ++t) CHECK(generalized_weight(full, t) == t);
  CHECK(packing_radius(full, 1) == 0);

  const auto w = weight_hierarchy(h);
  CHECK(w.d == std::vector<std::size_t>{3, 5, 6, 7});
  CHECK(w.delta == std::vector<std::size_t>{1, 2, 2, 3});
}

TEST_CASE("subspace enumeration matches naive tuple enumeration") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto F = seed % 3 == 0 ? Field::create(3) : F2;
    const auto c = LinearCode::from_generator(random_matrix(1 + seed % 3, 6, F, seed));
    for (std::size_t t = 1; t <= c.k(); ++t) CHECK(generalized_weight(c, t) == oracle::generalized_weight(c, t));
  }
}

TEST_CASE("weights strictly increase and d_1 is the minimum distance") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = LinearCode::from_generator(random_matrix(1 + seed % 4, 4 + seed % 5, F2, seed));
    const auto w = weight_hierarchy(c);
    for (std::size_t i = 1; i < w.d.size(); ++i) CHECK(w.d[i - 1] < w.d[i]);
    std::size_t dmin = c.n();
    for (const auto& x : oracle::codewords(c))
      if (x != Vec(c.n(), 0)) dmin = std::min(dmin, oracle::hamming_distance(x, Vec(c.n(), 0)));
    CHECK(w.d[0] == dmin);
  }
}

TEST_CASE("packing lemma in both directions") {
  const auto c42 = code_of({{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(generalized_weight(c42, 2) == 4);
  CHECK(verify_packing(c42, 2, 1));
  CHECK_FALSE(verify_packing(c42, 2, 2));

  const auto rep = code_of({{1, 1, 1}});
  CHECK(verify_packing(rep, 1, 1));
  CHECK_FALSE(verify_packing(rep, 1, 2));

  for (const auto& c : {code_of({{1, 0, 1, 1}, {0, 1, 1, 0}}), code_of({{1, 1, 1, 0, 0}, {0, 0, 1, 1, 1}}),
                        code_of({{1, 0, 0, 1, 1}, {0, 1, 1, 1, 0}})})
    for (std::size_t t = 1; t <= 2; ++t) {
      const std::size_t delta = packing_radius(c, t);
      CHECK(verify_packing(c, t, delta));
      CHECK_FALSE(verify_packing(c, t, delta + 1));
    }
}

TEST_CASE("weight errors") {
  const auto h = hamming_code(3, 2);
  try {
    generalized_weight(h, 5);
    FAIL("t above k");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TOutOfRange);
  }
  CHECK_THROWS_AS(generalized_weight(h, 0), Error);
  try {
    generalized_weight(h, 1, WeightLimits{4});
    FAIL("cap");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SearchTooLarge);
  }
  CHECK_THROWS_AS(verify_packing(h, 2, 1, WeightLimits{100}), Error);
}
