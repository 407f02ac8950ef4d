#include "oddwedge/snap.hpp"

#include <cmath>
#include <numbers>

namespace oddwedge {

std::complex<double> snap_gaussian(std::complex<double> z, double tol) {
  // + 0.0 turns -0.0 into +0.0
  const std::complex<double> g(std::round(z.real()) + 0.0, std::round(z.imag()) + 0.0);
  if (std::abs(z - g) <= tol * (1.0 + std::abs(z))) return g;
  return z;
}

std::complex<double> snap_to(std::complex<double> z,
                             const std::vector<std::complex<double>>& candidates,
                             double tol) {
  const std::complex<double> g(std::round(z.real()) + 0.0, std::round(z.imag()) + 0.0);
  if (std::abs(z - g) <= tol) return g;
  for (const auto& c : candidates)
    if (std::abs(z - c) <= tol) return c;
  if (std::abs(z.imag()) <= tol) return {z.real(), 0.0};
  return z;
}

std::vector<std::complex<double>> character_value_candidates(int group_order,
                                                             const std::string& group_name) {
  std::vector<std::complex<double>> cand;
  const int k = group_order;
  cand.emplace_back(1.0, 0.0);
  for (int m = 1; m <= k / 2; ++m) {
    const double a = 2.0 * std::numbers::pi * m / k;
    const double re = std::cos(a), im = std::sin(a);
    cand.emplace_back(re, im);
    cand.emplace_back(re, -im);  // conjugate pair shares the same doubles
  }
  if (group_name == "frobenius21") {
    const double s7 = std::sqrt(7.0);
    cand.emplace_back(-0.5, 0.5 * s7);
    cand.emplace_back(-0.5, -0.5 * s7);
  }
  return cand;
}

}  // namespace oddwedge
