#include "gencover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "gencover/error.hpp"

namespace gencover {

namespace {

double xlogx(double x) { return x <= 0 ? 0.0 : x * std::log(x); }

double h2(double x) { return entropy(2, std::clamp(x, 0.0, 1.0)); }

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void check_rho(double rho) {
  if (!(rho >= 0 && rho <= 1)) throw Error(Errc::DomainError, "rho must lie in [0, 1]");
}

// Integer-indexed grid on [0, hi] that always contains hi.
std::vector<double> grid(double hi, double step) {
  std::vector<double> out;
  if (hi <= 0) return {0.0};
  const auto steps = static_cast<std::size_t>(std::floor(hi / step + 1e-9));
  for (std::size_t i = 0; i <= steps; ++i) out.push_back(std::min(hi, i * step));
  if (hi - out.back() > 1e-12) out.push_back(hi);
  return out;
}

double f1_point(double a, double b, double c) {
  const double inner = a > 0 ? a * h2(b / a) : 0.0;
  const double rest = 1 - a + b;
  const double tail = rest > 0 ? rest * h2(c / rest) : 0.0;
  return h2(a) + inner + 2 * (a - b) + tail;
}

double f2_point(double a, double b) {
  const double rest = 1 - a;
  const double tail = rest > 0 ? 2 * rest * h2(b / rest) : 0.0;
  return h2(a) + tail + 2 * a;
}

}  // namespace

double entropy(double q, double x) {
  if (!(q >= 2)) throw Error(Errc::DomainError, "entropy needs q >= 2");
  if (!(x >= 0 && x <= 1)) throw Error(Errc::DomainError, "entropy argument must lie in [0, 1]");
  const double lq = std::log(q);
  return (x * std::log(q - 1) - xlogx(x) - xlogx(1 - x)) / lq;
}

double lower_bound_rate(std::size_t t, std::uint64_t q, double rho) {
  check_rho(rho);
  if (t < 1 || q < 2) throw Error(Errc::DomainError, "need t >= 1 and q >= 2");
  const double Q = std::pow(static_cast<double>(q), static_cast<double>(t));
  if (rho >= 1 - 1 / Q) return 0.0;
  return clamp01(1 - entropy(Q, rho));
}

double naive_upper(std::size_t t, std::uint64_t q, double rho) {
  check_rho(rho);
  if (t < 2 || q < 2) throw Error(Errc::DomainError, "naive bound needs t >= 2 and q >= 2");
  return 1 - entropy(static_cast<double>(q), rho / static_cast<double>(t));
}

double s_func(double rho) {
  return (1 + 8 * rho - std::sqrt(std::max(0.0, 1 + 16 * rho - 16 * rho * rho))) / 10;
}

double f_closed(double rho) {
  check_rho(rho);
  if (rho >= 0.75) return 3.0;
  const double s = s_func(rho);
  return h2(s) + 2 * s + 2 * (1 - s) * h2((rho - s) / (1 - s));
}

FGridResult f_grid(double rho, double step) {
  check_rho(rho);
  if (!(step > 0 && step <= 0.01)) throw Error(Errc::DomainError, "grid step must lie in (0, 0.01]");
  FGridResult r;
  r.f1 = -1;
  for (double a : grid(rho, step))
    for (double b : grid(a, step))
      for (double c : grid(rho - a + b, step)) {
        const double v = f1_point(a, b, c);
        if (v > r.f1) {
          r.f1 = v;
          r.argmax_f1 = {a, b, c};
        }
      }
  r.f2 = -1;
  for (double a : grid(rho, step))
    for (double b : grid(rho - a, step)) {
      const double v = f2_point(a, b);
      if (v > r.f2) {
        r.f2 = v;
        r.argmax_f2 = {a, b};
      }
    }
  r.value = std::max(r.f1, r.f2);
  return r;
}

double main_upper(double rho) {
  check_rho(rho);
  if (rho >= 0.75) return 0.0;
  return clamp01(1 - (4 * entropy(4, rho) - f_closed(rho)));
}

double crossover(double tolerance) {
  if (!(tolerance >= 1e-9)) throw Error(Errc::DomainError, "tolerance too small");
  auto gap = [](double rho) { return naive_upper(2, 2, rho) - main_upper(rho); };
  double lo = 1e-6, hi = 0.5;
  double glo = gap(lo);
  const double ghi = gap(hi);
  if ((glo < 0) == (ghi < 0)) throw Error(Errc::NoSignChange, "bounds do not cross on (0, 1/2)");
  while (hi - lo > tolerance) {
    const double mid = (lo + hi) / 2;
    const double g = gap(mid);
    if ((g < 0) == (glo < 0)) {
      lo = mid;
      glo = g;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

std::vector<BoundCurvePoint> emit_curve(double rho_min, double rho_max, double step) {
  if (!(rho_min >= 0 && rho_min < rho_max && rho_max <= 1 && step > 0))
    throw Error(Errc::DomainError, "need 0 <= rho_min < rho_max <= 1 and step > 0");
  std::vector<BoundCurvePoint> out;
  for (std::size_t i = 0;; ++i) {
    double rho = rho_min + static_cast<double>(i) * step;
    if (rho > rho_max + 1e-9) break;
    rho = std::min(rho, rho_max);
    out.push_back({rho, f_closed(rho), lower_bound_rate(2, 2, rho), naive_upper(2, 2, rho),
                   main_upper(rho)});
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<BoundCurvePoint>& points) {
  out << "rho,f,lower,naive_upper,main_upper\n";
  char buf[160];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f,%.6f\n", p.rho, p.f, p.lower,
                  p.naive_upper, p.main_upper);
    out << buf;
  }
}

}  // namespace gencover
