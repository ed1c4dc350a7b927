#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace gencover {

/// q-ary entropy with 0 log 0 = 0. Throws DomainError unless 0 <= x <= 1, q >= 2.
double entropy(double q, double x);

/// max(0, 1 - H_{q^t}(rho)): the ball-covering lower bound on the rate.
double lower_bound_rate(std::size_t t, std::uint64_t q, double rho);

/// 1 - H_q(rho / t), t >= 2.
double naive_upper(std::size_t t, std::uint64_t q, double rho);

double s_func(double rho);

/// Closed form of f(rho); 3 on [3/4, 1].
double f_closed(double rho);

struct FGridResult {
  double value = 0;  // max(f1, f2)
  double f1 = 0;
  double f2 = 0;
  std::array<double, 3> argmax_f1{};  // (alpha, beta, gamma)
  std::array<double, 2> argmax_f2{};  // (alpha, beta)
};

/// Grid maximization of both exponents over their constraint domains, with
/// alpha * H_2(beta / alpha) taken as 0 at alpha = 0. Requires step <= 0.01.
FGridResult f_grid(double rho, double step);

/// Rate upper bound for binary codes and t = 2, clamped to [0, 1].
double main_upper(double rho);

/// The rho in (0, 1/2) where naive_upper(2, 2, .) and main_upper cross,
/// found by bisection. Throws NoSignChange if the ends agree in sign.
double crossover(double tolerance = 1e-6);

struct BoundCurvePoint {
  double rho;
  double f;
  double lower;
  double naive_upper;
  double main_upper;
};

/// Points rho_min + i * step for i = 0, 1, ... while <= rho_max (inclusive,
/// with a 1e-9 slack on the last point).
std::vector<BoundCurvePoint> emit_curve(double rho_min, double rho_max, double step);

/// Header `rho,f,lower,naive_upper,main_upper`, six decimals, LF endings.
void write_csv(std::ostream& out, const std::vector<BoundCurvePoint>& points);

}  // namespace gencover
