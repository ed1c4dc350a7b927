#include <doctest.h>

#include "gencover/planner.hpp"
#include "gencover/radii.hpp"
#include "oracles.hpp"

using namespace gencover;

namespace {

const FieldPtr F2 = Field::create(2);

std::vector<Vec> nonzero_syndromes(const Matrix& H) {
  auto all = oracle::all_vectors(H.f(), H.rows());
  all.erase(all.begin());
  return all;
}

}  // namespace

TEST_CASE("zero and unit batches") {
  const Matrix H = hamming_code(3, 2).parity_check();
  const auto zero = plan_exact(H, {Vec{0, 0, 0}});
  CHECK(zero.size() == 0);
  CHECK(zero.coefficients.rows() == 1);
  CHECK(verify_plan(H, {Vec{0, 0, 0}}, zero));
  CHECK(plan_greedy(H, {Vec{0, 0, 0}}).size() == 0);

  const auto g = plan_greedy(H, {Vec{1, 0, 0}, Vec{0, 1, 0}});
  CHECK(g.size() == 2);
  CHECK(g.method == PlanMethod::Greedy);

  const Matrix I3 = Matrix::identity(F2, 3);
  const auto p = plan_exact(I3, {Vec{1, 1, 0}});
  CHECK(p.columns == std::vector<std::size_t>{0, 1});
  CHECK(p.coefficients == Matrix::from_rows(F2, {{1, 1}}));
}

TEST_CASE("every pair of Hamming syndromes needs at most R_2 columns") {
  const Matrix H = hamming_code(3, 2).parity_check();
  const auto syn = nonzero_syndromes(H);
  std::size_t largest = 0;
  for (std::size_t a = 0; a < syn.size(); ++a)
    for (std::size_t b = a + 1; b < syn.size(); ++b) {
      const std::vector<Vec> batch{syn[a], syn[b]};
      const auto p = plan_exact(H, batch);
      CHECK(verify_plan(H, batch, p));
      CHECK(p.size() == oracle::min_cover(H, batch));
      largest = std::max(largest, p.size());
    }
  CHECK(largest == 2);
}

TEST_CASE("exact plans are minimal and greedy never beats them") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto F = seed % 4 == 0 ? Field::create(3) : F2;
    const auto code = LinearCode::from_generator(random_matrix(2, 6, F, seed));
    const Matrix& H = code.parity_check();
    std::vector<Vec> batch;
    for (std::size_t i = 0; i < 1 + seed % 3; ++i)
      batch.push_back(random_matrix(1, H.rows(), F, seed * 31 + i).data());
    const auto e = plan_exact(H, batch);
    const auto g = plan_greedy(H, batch);
    CHECK(verify_plan(H, batch, e));
    CHECK(verify_plan(H, batch, g));
    CHECK(e.size() == oracle::min_cover(H, batch));
    CHECK(g.size() >= e.size());
    // Adding a syndrome never shrinks the plan.
    auto more = batch;
    more.push_back(random_matrix(1, H.rows(), F, seed + 1000).data());
    CHECK(plan_exact(H, more).size() >= e.size());
  }
}

TEST_CASE("plans realize the radius on tiny codes") {
  const auto c = shorten(hamming_code(3, 2), 6);
  const Matrix& H = c.parity_check();
  const auto syn = nonzero_syndromes(H);
  for (std::size_t t = 1; t <= 2; ++t) {
    const std::size_t R = generalized_radius(c, t, Method::Lifted).value;
    std::size_t largest = 0;
    for_each_combination(syn.size(), t, [&](std::span<const std::size_t> pick) {
      std::vector<Vec> batch;
      for (auto i : pick) batch.push_back(syn[i]);
      largest = std::max(largest, plan_exact(H, batch).size());
      return true;
    });
    CHECK(largest == R);
  }
}

TEST_CASE("duplicates keep their rows") {
  const Matrix H = hamming_code(3, 2).parity_check();
  const std::vector<Vec> batch{Vec{1, 1, 0}, Vec{0, 0, 0}, Vec{1, 1, 0}};
  const auto p = plan_exact(H, batch);
  CHECK(p.size() == 1);
  CHECK(p.coefficients.rows() == 3);
  CHECK(verify_plan(H, batch, p));
}

TEST_CASE("verification rejects broken plans") {
  const Matrix H = hamming_code(3, 2).parity_check();
  const std::vector<Vec> batch{Vec{1, 0, 1}, Vec{0, 1, 1}};
  auto p = plan_exact(H, batch);
  CHECK(verify_plan(H, batch, p));
  auto flipped = p;
  flipped.coefficients(0, 0) ^= 1;
  CHECK_FALSE(verify_plan(H, batch, flipped));
  BatchPlan empty{{}, Matrix(F2, 2, 0), PlanMethod::Exact};
  CHECK_FALSE(verify_plan(H, batch, empty));
  auto out_of_range = p;
  out_of_range.columns.back() = 99;
  CHECK_FALSE(verify_plan(H, batch, out_of_range));
}

TEST_CASE("planner errors") {
  // Rank-deficient H leaves part of the syndrome space uncovered.
  const Matrix H = Matrix::from_rows(F2, {{1, 1, 0}, {0, 0, 0}});
  try {
    plan_exact(H, {Vec{0, 1}});
    FAIL("uncoverable syndrome");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Infeasible);
  }
  CHECK_THROWS_AS(plan_greedy(H, {Vec{0, 1}}), Error);
  CHECK_THROWS_AS(plan_exact(H, {}), Error);
  CHECK_THROWS_AS(plan_exact(H, {Vec{1, 0, 0}}), Error);
  const Matrix big = hamming_code(5, 2).parity_check();
  try {
    plan_exact(big, {Vec{1, 0, 0, 0, 0}, Vec{0, 1, 0, 0, 0}, Vec{0, 0, 1, 0, 0}}, PlanLimits{10});
    FAIL("subset cap");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SearchTooLarge);
  }
}
