#pragma once

// Snapping of numerically computed values onto nearby exact ones.  The
// tolerance (1e-8) sits far above accumulated round-off at the sizes handled
// here and far below any true gap between distinct algebraic values.

#include <complex>
#include <string>
#include <vector>

namespace oddwedge {

inline constexpr double kSnapTol = 1e-8;

// Nearest Gaussian integer if within tol*(1+|z|), else z unchanged.
std::complex<double> snap_gaussian(std::complex<double> z, double tol = kSnapTol);

// Nearest candidate within tol (absolute), else z with sub-tol imaginary
// dust removed.
std::complex<double> snap_to(std::complex<double> z,
                             const std::vector<std::complex<double>>& candidates,
                             double tol = kSnapTol);

// Candidate character values for a class structure: k-th roots of unity in
// conjugate-symmetric pairs, plus the Gauss-sum values (-1 +- i sqrt7)/2 for
// the order-21 Frobenius group.
std::vector<std::complex<double>> character_value_candidates(int group_order,
                                                             const std::string& group_name);

}  // namespace oddwedge
