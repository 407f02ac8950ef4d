#pragma once

// Iteration of the map psi(f) = exp(Tf) - 1 on class functions, its reduced
// plane map on the order-3 class coordinate, Jacobian-based fixed-point
// classification, and basin-of-attraction scans.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "oddwedge/class_function.hpp"
#include "oddwedge/wedge.hpp"

namespace oddwedge {

struct IterationOptions {
  int max_steps = 500;
  double tol = 1e-10;               // sup-norm convergence tolerance
  double divergence_bound = 1e12;   // declared divergent past this magnitude
};

enum class IterationStatus { converged, diverged, max_steps };

struct IterationTrace {
  std::vector<ClassFunction> iterates;  // iterates[0] is the start
  IterationStatus status = IterationStatus::max_steps;
  int step = 0;  // convergence step / step at which divergence was detected
  double tol = 0.0;
  double divergence_bound = 0.0;
  std::optional<ClassFunction> limit;    // converged only
  std::optional<double> blowup_log10;    // diverged only: log10 of the
                                         // magnitude the next step would reach
  const ClassFunction& start() const { return iterates.front(); }
};

// wedge_exp(f) - 1.  Throws std::overflow_error when the exponent exceeds
// log(bound): past that point the value is a divergence report, not a
// number (the conjugation character blows up to ~10^631305 in two steps).
ClassFunction psi(const TOperator& t, const ClassFunction& f, double bound = 1e12);
ClassFunction psi(const ClassFunction& f, double bound = 1e12);

IterationTrace iterate(const ClassFunction& f0, const IterationOptions& opt = {});

// Reduced map on functions that are 1 away from the order-3 classes, with
// conjugate values z, conj(z) there; z = x + iy:
//   (x, y) -> (2^{(2x+1)/3} cos th - 1, 2^{(2x+1)/3} sin th), th = 2 pi y/(3 sqrt3).
// Implemented symmetrically so conjugation equivariance is exact in floating
// point.
std::pair<double, double> phi2d(double x, double y);

// Analytic Jacobian: (1/3) 2^{2(x+2)/3} [[log2 cos th, -(pi/sqrt3) sin th],
//                                        [log2 sin th,  (pi/sqrt3) cos th]].
Eigen::Matrix2d jacobian_phi2d(double x, double y);

using RealMap = std::function<std::vector<double>(const std::vector<double>&)>;
using RealJacobian = std::function<Eigen::MatrixXd(const std::vector<double>&)>;

enum class Stability { attracting, repelling, mixed };

struct FixedPointReport {
  std::vector<double> location;
  Eigen::MatrixXd jacobian;
  std::vector<double> singular_values;  // descending
  double spectral_radius = 0.0;
  Stability classification = Stability::mixed;
  std::string criterion;  // "singular_values" or "spectral_radius"
};

// Requires |map(p) - p| < 1e-8.  Jacobian from central differences with
// step h, or the supplied analytic one.
FixedPointReport classify_fixed_point(const RealMap& map, const std::vector<double>& p,
                                      double h = 1e-6);
FixedPointReport classify_fixed_point(const RealMap& map, const RealJacobian& jac,
                                      const std::vector<double>& p, double h = 1e-6);

enum class BasinLabel : std::uint8_t { trivial, character_j, character_j2, diverged, undecided };

const char* basin_label_name(BasinLabel l);

struct BasinGrid {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  int nx = 0, ny = 0;
  std::vector<double> xs, ys;        // grid coordinates (symmetric construction)
  std::vector<BasinLabel> labels;    // row-major, iy * nx + ix
  std::vector<int> steps;
  BasinLabel at(int ix, int iy) const { return labels[static_cast<size_t>(iy) * nx + ix]; }
};

// Each grid point is taken as the starting value on the first order-3 class
// (conjugate value on the other); the reached fixed point among the three
// one-dimensional characters is recorded, or diverged/undecided.  Points are
// independent; the scan is deterministic for any thread count.  threads = 0
// uses ODD_WEDGE_THREADS or the hardware count.
BasinGrid basin_scan(double x0, double x1, double y0, double y1, int nx, int ny,
                     const IterationOptions& opt = {}, int threads = 0);

}  // namespace oddwedge
