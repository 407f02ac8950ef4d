#include "oddwedge/hurwitz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oddwedge {

double h_series(double u, double tol) {
  if (!(u > 0)) throw std::invalid_argument("h_series: u must be positive");
  if (!(tol > 0)) throw std::invalid_argument("h_series: tol must be positive");
  constexpr long kMaxPairs = 10'000'000;
  double s = 0.0;
  for (long m = 0; m < kMaxPairs; ++m) {
    const double a = 2.0 * m + u;
    s += 1.0 / (a * (a + 1.0));  // 1/(2m+u) - 1/(2m+1+u)
    const double nxt = a + 2.0;
    if (0.5 / (nxt * (nxt + 1.0)) < 0.25 * tol) return s + 0.5 / nxt;
  }
  const double a = 2.0 * kMaxPairs + u;
  return s + 0.5 / a;
}

double h_closed(int j, int k) {
  if (k < 1 || k % 2 == 0) throw std::invalid_argument("h_closed: k must be odd and positive");
  if (j < 1 || j > k) throw std::invalid_argument("h_closed: j must lie in 1..k");
  const double pi = std::numbers::pi;
  double s = std::numbers::ln2;  // v = 0 term
  for (int v = 1; v <= (k - 1) / 2; ++v) {
    // terms for +v and -v coincide
    s += 2.0 * (std::cos(2.0 * pi * j * v / k) * std::log(2.0 * std::cos(pi * v / k)) +
                (pi * v / k) * std::sin(2.0 * pi * j * v / k));
  }
  return (j % 2 == 1) ? s : -s;
}

WedgeCoefficients wedge_coefficients(int k) {
  if (k < 1 || k % 2 == 0)
    throw std::invalid_argument("wedge_coefficients: k must be odd and positive");
  WedgeCoefficients wc;
  wc.k = k;
  wc.c.resize(k);
  for (int j = 1; j <= k; ++j) {
    const double h = h_closed(j, k);
    wc.c[static_cast<size_t>(j) - 1] = ((j % 2 == 1) ? h : -h) / k;
  }
  return wc;
}

}  // namespace oddwedge
