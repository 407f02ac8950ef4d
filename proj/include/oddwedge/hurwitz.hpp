#pragma once

// The alternating Hurwitz-type sum H(u) = sum_{m>=0} (-1)^m / (m+u) and the
// exponent coefficients c_j = (-1)^{j+1} H(j/k) / k for odd k.  They satisfy
// exp(sum_j c_j alpha^j) = 1 + alpha for every k-th root of unity alpha,
// which is what makes the exterior-power operation an exponential.

#include <vector>

namespace oddwedge {

// Convergent alternating sum, u > 0.  Consecutive terms are paired into an
// absolutely convergent series and the tail is closed with the midpoint
// correction a_{2M}/2, whose error is below (a_{2M}-a_{2M+1})/2.  Capped at
// 1e7 pairs; tolerances down to ~1e-13 are reachable well inside the cap.
double h_series(double u, double tol = 1e-12);

// Finite trigonometric form of H(j/k) for odd k, 1 <= j <= k:
//   (-1)^{j+1} sum_{|v|<k/2} [cos(2pi jv/k) log(2 cos(pi v/k))
//                             + (pi v/k) sin(2pi jv/k)].
// Exact up to round-off, O(k); the production path for coefficients.
// h_series is the independent cross-check.
double h_closed(int j, int k);

struct WedgeCoefficients {
  int k = 0;                // odd group order
  std::vector<double> c;    // c[j-1] = c_j, j = 1..k
  double cj(int j) const { return c[static_cast<size_t>(j) - 1]; }
};

WedgeCoefficients wedge_coefficients(int k);

}  // namespace oddwedge
