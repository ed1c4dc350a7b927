#include <doctest.h>

#include <cmath>
#include <sstream>

#include "gencover/bounds.hpp"
#include "gencover/error.hpp"

using namespace gencover;
using doctest::Approx;

TEST_CASE("entropy") {
  CHECK(entropy(2, 0.5) == Approx(1.0));
  CHECK(entropy(3, 0) == 0.0);
  CHECK(entropy(2, 1) == 0.0);
  CHECK(entropy(4, 0.75) == Approx(1.0));
  CHECK(entropy(2, 0.11) == Approx(-0.11 * std::log2(0.11) - 0.89 * std::log2(0.89)));
  CHECK_THROWS_AS(entropy(2, 1.5), Error);
  CHECK_THROWS_AS(entropy(1, 0.5), Error);
}

TEST_CASE("entropy is concave, symmetric only in the binary case") {
  for (double q : {2.0, 3.0, 4.0})
    for (int i = 1; i < 99; ++i) {
      const double a = (i - 1) / 99.0, b = (i + 1) / 99.0;
      CHECK(entropy(q, (a + b) / 2) >= (entropy(q, a) + entropy(q, b)) / 2 - 1e-12);
    }
  for (int i = 0; i <= 100; ++i) CHECK(entropy(2, i / 100.0) == Approx(entropy(2, 1 - i / 100.0)));
  CHECK(entropy(3, 0.2) != Approx(entropy(3, 0.8)));
}

TEST_CASE("rate bounds") {
  CHECK(lower_bound_rate(2, 2, 0) == 1.0);
  CHECK(lower_bound_rate(2, 2, 0.75) == 0.0);
  CHECK(lower_bound_rate(2, 2, 0.9) == 0.0);
  CHECK(lower_bound_rate(1, 2, 0.25) == Approx(0.1887).epsilon(1e-3));
  CHECK(naive_upper(2, 2, 0) == 1.0);
  CHECK(naive_upper(2, 2, 0.5) == Approx(0.1887).epsilon(1e-3));
  CHECK(naive_upper(2, 2, 1) == Approx(0.0));
  CHECK_THROWS_AS(naive_upper(1, 2, 0.5), Error);
  CHECK_THROWS_AS(lower_bound_rate(2, 2, -0.1), Error);
}

TEST_CASE("s and f closed forms") {
  CHECK(s_func(0) == 0.0);
  CHECK(s_func(0.75) == Approx(0.5));
  CHECK(s_func(0.5) == Approx((5 - std::sqrt(5.0)) / 10));
  CHECK(f_closed(0) == Approx(0.0));
  CHECK(f_closed(0.75) == 3.0);
  CHECK(f_closed(1) == 3.0);
  CHECK(std::abs(f_closed(0.74) - f_closed(0.75)) < 0.02);
  for (int i = 1; i <= 75; ++i) CHECK(f_closed(i / 100.0) >= f_closed((i - 1) / 100.0) - 1e-12);
}

TEST_CASE("grid maximization confirms the closed form") {
  for (double rho : {0.1, 0.3, 0.5, 0.7}) {
    CAPTURE(rho);
    const auto g = f_grid(rho, 0.005);
    CHECK(std::abs(g.value - f_closed(rho)) < 1e-3);
    CHECK(std::abs(g.f1 - g.f2) < 2e-3);
  }
  const double rho = 0.5, s = s_func(rho);
  const auto g = f_grid(rho, 0.005);
  CHECK(g.argmax_f1[0] == Approx(rho).epsilon(0.01));
  CHECK(g.argmax_f1[1] == Approx(rho - s).epsilon(0.02));
  // The third coordinate is bounded by rho - alpha + beta = rho - s here.
  CHECK(g.argmax_f1[2] == Approx(rho - s).epsilon(0.02));
  CHECK(g.argmax_f2[0] == Approx(s).epsilon(0.02));
  CHECK(g.argmax_f2[1] == Approx(rho - s).epsilon(0.02));
  CHECK_THROWS_AS(f_grid(0.5, 0.05), Error);
}

TEST_CASE("main upper bound") {
  CHECK(main_upper(0.75) == 0.0);
  CHECK(main_upper(0.9) == 0.0);
  CHECK(main_upper(0) == Approx(1.0));
  CHECK(main_upper(0.5) == Approx(0.11).epsilon(0.1));
  for (int i = 0; i <= 100; ++i) CHECK(main_upper(i / 100.0) >= lower_bound_rate(2, 2, i / 100.0));
}

TEST_CASE("crossover of the two upper bounds") {
  const double x = crossover(1e-6);
  CHECK(x >= 0.135);
  CHECK(x <= 0.155);
  CHECK(naive_upper(2, 2, 0.10) < main_upper(0.10));
  CHECK(naive_upper(2, 2, 0.30) > main_upper(0.30));
}

TEST_CASE("curves and CSV") {
  const auto quarter = emit_curve(0, 1, 0.25);
  REQUIRE(quarter.size() == 5);
  CHECK(quarter[3].rho == 0.75);
  CHECK(quarter[3].f == 3.0);
  CHECK(quarter[3].main_upper == 0.0);
  CHECK(quarter[3].lower == 0.0);
  const auto fine = emit_curve(0, 1, 0.01);
  CHECK(fine.size() == 101);
  CHECK(fine.back().rho == 1.0);
  for (const auto& p : fine) CHECK(p.lower <= p.main_upper);
  CHECK_THROWS_AS(emit_curve(0.5, 0.5, 0.1), Error);
  CHECK_THROWS_AS(emit_curve(0, 1, 0), Error);

  std::ostringstream out;
  write_csv(out, emit_curve(0.5, 0.75, 0.25));
  CHECK(out.str() ==
        "rho,f,lower,naive_upper,main_upper\n"
        "0.500000,2.694242,0.103759,0.188722,0.109279\n"
        "0.750000,3.000000,0.000000,0.045566,0.000000\n");
}
