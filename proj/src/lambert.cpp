#include "oddwedge/lambert.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oddwedge {

namespace {

constexpr double kDomainSlack = 1e-12;

double branch_point() { return -std::exp(-1.0); }

// Halley step for f(w) = w e^w - u; f''/f' = (w+2)/(w+1).
double halley(double u, double w) {
  for (int it = 0; it < 50; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - u;
    const double fp = ew * (w + 1.0);
    const double denom = fp - f * (w + 2.0) / (2.0 * (w + 1.0));
    const double dw = f / denom;
    w -= dw;
    if (std::abs(dw) < 1e-15 * (1.0 + std::abs(w))) break;
  }
  return w;
}

double residual_of(double w, double u) { return std::abs(w * std::exp(w) - u); }

// Safeguarded fallback: bisection on a bracket where w e^w - u changes sign,
// finished with Newton.
double bisect_solve(double u, double lo, double hi) {
  auto f = [u](double w) { return w * std::exp(w) - u; };
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm <= 0.0) == (flo <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double w = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double ew = std::exp(w);
    w -= (w * ew - u) / (ew * (w + 1.0));
  }
  return w;
}

}  // namespace

LambertSolution w_principal(double u) {
  const double bp = branch_point();
  if (u < bp - kDomainSlack)
    throw std::invalid_argument("w_principal: u below -1/e");
  if (u == 0.0) return {LambertBranch::principal, 0.0, 0.0};

  double w;
  const double p2 = 2.0 * (std::numbers::e * u + 1.0);
  if (p2 <= 0.0) {
    w = -1.0;  // branch point, where the iteration is singular
  } else if (u < -0.25) {
    const double p = std::sqrt(p2);
    w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
    if (p >= 1e-7) w = halley(u, w);
  } else {
    w = halley(u, std::log1p(u));
  }
  if (!std::isfinite(w) || w < -1.0 - 1e-9 || residual_of(w, u) > 1e-12 * (1.0 + std::abs(u)))
    w = bisect_solve(u, -1.0, std::max(1.0, std::log1p(std::abs(u)) + 1.0));
  return {LambertBranch::principal, w, residual_of(w, u)};
}

LambertSolution w_minus_one(double u) {
  const double bp = branch_point();
  if (u >= 0.0) throw std::invalid_argument("w_minus_one: u must be negative");
  if (u < bp - kDomainSlack)
    throw std::invalid_argument("w_minus_one: u below -1/e");

  double w;
  const double p2 = 2.0 * (std::numbers::e * u + 1.0);
  if (p2 <= 0.0) {
    w = -1.0;
  } else if (u < -0.27) {
    const double p = std::sqrt(p2);
    w = -1.0 - p - p * p / 3.0 - 11.0 * p * p * p / 72.0;
    if (p >= 1e-7) w = halley(u, w);
  } else {
    const double l1 = std::log(-u);
    const double l2 = std::log(-l1);
    w = halley(u, l1 - l2 + l2 / l1);
  }
  if (!std::isfinite(w) || w > -1.0 + 1e-9 || residual_of(w, u) > 1e-12 * (1.0 + std::abs(u))) {
    double lo = -2.0;
    while (lo * std::exp(lo) < u && lo > -700.0) lo *= 2.0;
    w = bisect_solve(u, lo, -1.0);
  }
  return {LambertBranch::minus_one, w, residual_of(w, u)};
}

double psi7(double z) { return std::exp2(1.0 / 7.0 + 6.0 * z / 7.0) - 1.0; }

double psi7_derivative(double z) {
  return (6.0 / 7.0) * std::numbers::ln2 * std::exp2(1.0 / 7.0 + 6.0 * z / 7.0);
}

PsiFixedPoints7 psi_fixed_points_7() {
  const double ln2 = std::numbers::ln2;
  PsiFixedPoints7 fp;
  // z = psi7(z) with w = -(6/7)(1+z) log 2 becomes w e^w = u:
  fp.u = -(6.0 / 7.0) * std::exp2(-5.0 / 7.0) * ln2;
  const auto lower = w_minus_one(fp.u);
  const auto upper = w_principal(fp.u);
  fp.trivial = -1.0 - 7.0 * lower.w / (6.0 * ln2);
  fp.attractor = -1.0 - 7.0 * upper.w / (6.0 * ln2);
  fp.derivative_trivial = psi7_derivative(fp.trivial);
  fp.derivative_attractor = psi7_derivative(fp.attractor);
  return fp;
}

}  // namespace oddwedge
