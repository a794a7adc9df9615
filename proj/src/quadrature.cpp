#include "gpgame/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "gpgame/distributions.hpp"

namespace gpgame {
namespace {

// 15-point Kronrod abscissae on [-1, 1] (positive half) and weights, with the
// embedded 7-point Gauss weights on the odd-indexed abscissae.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018, 0.14065325971552592,
    0.16900472663926790, 0.19035057806478540, 0.20443294007529889, 0.20948214108472783};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_center = f(center);
  double resk = kWgk[7] * f_center;
  double resg = kWg[3] * f_center;
  for (int j = 0; j < 7; ++j) {
    const double x = half * kXgk[j];
    const double pair = f(center - x) + f(center + x);
    resk += kWgk[j] * pair;
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const double value = resk * half;
  const double error = std::fabs((resk - resg) * half);
  return Panel{a, b, value, error};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol, int max_intervals) {
  if (!(b > a)) raise(ErrorCode::domain_error, "integration needs b > a");
  std::priority_queue<Panel> queue;
  Panel first = evaluate_panel(f, a, b);
  double total_value = first.value;
  double total_error = first.error;
  queue.push(first);
  int intervals = 1;
  while (total_error > std::max(abs_tol, rel_tol * std::fabs(total_value))) {
    if (intervals >= max_intervals) {
      raise(ErrorCode::quadrature_failure,
            "tolerance not met after " + std::to_string(intervals) + " intervals");
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++intervals;
    if (std::isnan(total_value) || std::isnan(total_error)) {
      raise(ErrorCode::quadrature_failure, "integrand produced NaN");
    }
  }
  return QuadratureResult{total_value, total_error, intervals};
}

double gamma_tail_cutoff(int shape, double rate, double tail_eps) {
  if (shape < 1 || !(rate > 0.0) || !(tail_eps > 0.0)) {
    raise(ErrorCode::domain_error, "gamma_tail_cutoff needs shape >= 1, rate > 0, eps > 0");
  }
  // P(Gamma(shape, rate) > x) = P(Poisson(rate x) <= shape - 1).
  const auto tail = [&](double x) { return poisson_cdf(shape - 1, rate * x); };
  double hi = 1.0;
  while (tail(hi) > tail_eps) {
    hi *= 2.0;
    if (hi > 1e18) raise(ErrorCode::quadrature_failure, "gamma tail cutoff diverged");
  }
  double lo = hi * 0.5;
  for (int iter = 0; iter < 80 && (hi - lo) > 1e-9 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (tail(mid) > tail_eps ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace gpgame
