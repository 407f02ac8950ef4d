#include "oddwedge/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "oddwedge/snap.hpp"

namespace oddwedge {

namespace {

struct StepOutcome {
  bool blown = false;
  double log10_magnitude = 0.0;
  std::optional<ClassFunction> value;
};

StepOutcome guarded_step(const TOperator& t, const ClassFunction& f, double bound) {
  const ClassFunction e = t.apply(f);
  double max_re = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < e.size(); ++i) max_re = std::max(max_re, e[i].real());
  if (max_re > std::log(bound))
    return {true, max_re / std::numbers::ln10, std::nullopt};
  std::vector<cplx> out(e.size());
  for (int i = 0; i < e.size(); ++i) out[i] = snap_gaussian(std::exp(e[i])) - 1.0;
  return {false, 0.0, ClassFunction(t.cs, std::move(out))};
}

}  // namespace

ClassFunction psi(const TOperator& t, const ClassFunction& f, double bound) {
  auto r = guarded_step(t, f, bound);
  if (r.blown)
    throw std::overflow_error("psi: iterate magnitude exceeds bound (log10 ~ " +
                              std::to_string(r.log10_magnitude) + ")");
  return *std::move(r.value);
}

ClassFunction psi(const ClassFunction& f, double bound) {
  return psi(build_t(f.structure()), f, bound);
}

IterationTrace iterate(const ClassFunction& f0, const IterationOptions& opt) {
  const TOperator t = build_t(f0.structure());
  IterationTrace tr;
  tr.tol = opt.tol;
  tr.divergence_bound = opt.divergence_bound;
  tr.iterates.push_back(f0);

  StepOutcome pending = guarded_step(t, f0, opt.divergence_bound);
  if (!pending.blown && pending.value->sup_distance(f0) < opt.tol) {
    tr.status = IterationStatus::converged;
    tr.step = 0;
    tr.limit = f0;
    return tr;
  }
  if (opt.max_steps <= 0) {
    tr.status = IterationStatus::max_steps;
    tr.step = 0;
    return tr;
  }

  int idx = 0;
  while (true) {
    if (pending.blown) {
      tr.status = IterationStatus::diverged;
      tr.step = idx + 1;
      tr.blowup_log10 = pending.log10_magnitude;
      return tr;
    }
    const ClassFunction cur = tr.iterates.back();
    const ClassFunction nxt = *pending.value;
    tr.iterates.push_back(nxt);
    ++idx;
    const double d = nxt.sup_distance(cur);
    pending = guarded_step(t, nxt, opt.divergence_bound);
    if (d < opt.tol && !pending.blown && pending.value->sup_distance(nxt) < opt.tol) {
      tr.status = IterationStatus::converged;
      tr.step = idx;
      tr.limit = nxt;
      return tr;
    }
    if (idx >= opt.max_steps && !pending.blown) {
      tr.status = IterationStatus::max_steps;
      tr.step = idx;
      return tr;
    }
  }
}

std::pair<double, double> phi2d(double x, double y) {
  const double r = std::exp2((2.0 * x + 1.0) / 3.0);
  const double th = 2.0 * std::numbers::pi * std::abs(y) / (3.0 * std::sqrt(3.0));
  const double c = std::cos(th);
  const double s = std::copysign(std::sin(th), y);  // odd in y, exactly
  return {r * c - 1.0, r * s};
}

Eigen::Matrix2d jacobian_phi2d(double x, double y) {
  const double pre = std::exp2(2.0 * (x + 2.0) / 3.0) / 3.0;
  const double th = 2.0 * std::numbers::pi * y / (3.0 * std::sqrt(3.0));
  const double c = std::cos(th), s = std::sin(th);
  const double ln2 = std::numbers::ln2, ps3 = std::numbers::pi / std::sqrt(3.0);
  Eigen::Matrix2d j;
  j << pre * ln2 * c, -pre * ps3 * s, pre * ln2 * s, pre * ps3 * c;
  return j;
}

static FixedPointReport classify_impl(const RealMap& map, const RealJacobian* jac,
                                      const std::vector<double>& p, double h) {
  const auto img = map(p);
  const size_t n = p.size();
  double resid = 0.0;
  for (size_t i = 0; i < n; ++i) resid = std::max(resid, std::abs(img[i] - p[i]));
  if (resid >= 1e-8)
    throw std::invalid_argument("classify_fixed_point: point is not fixed (residual " +
                                std::to_string(resid) + ")");

  FixedPointReport rep;
  rep.location = p;
  if (jac) {
    rep.jacobian = (*jac)(p);
  } else {
    rep.jacobian = Eigen::MatrixXd(n, n);
    for (size_t j = 0; j < n; ++j) {
      auto hi = p, lo = p;
      hi[j] += h;
      lo[j] -= h;
      const auto fh = map(hi), fl = map(lo);
      for (size_t i = 0; i < n; ++i) rep.jacobian(i, j) = (fh[i] - fl[i]) / (2.0 * h);
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rep.jacobian);
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    rep.singular_values.push_back(svd.singularValues()[i]);

  Eigen::EigenSolver<Eigen::MatrixXd> es(rep.jacobian);
  double rho = 0.0, min_mod = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double a = std::abs(es.eigenvalues()[i]);
    rho = std::max(rho, a);
    min_mod = std::min(min_mod, a);
  }
  rep.spectral_radius = rho;

  if (!rep.singular_values.empty() && rep.singular_values.front() < 1.0) {
    rep.classification = Stability::attracting;
    rep.criterion = "singular_values";
  } else if (rho < 1.0) {
    rep.classification = Stability::attracting;
    rep.criterion = "spectral_radius";
  } else if (min_mod > 1.0) {
    rep.classification = Stability::repelling;
    rep.criterion = "spectral_radius";
  } else {
    rep.classification = Stability::mixed;
    rep.criterion = "spectral_radius";
  }
  return rep;
}

FixedPointReport classify_fixed_point(const RealMap& map, const std::vector<double>& p, double h) {
  return classify_impl(map, nullptr, p, h);
}

FixedPointReport classify_fixed_point(const RealMap& map, const RealJacobian& jac,
                                      const std::vector<double>& p, double h) {
  return classify_impl(map, &jac, p, h);
}

const char* basin_label_name(BasinLabel l) {
  switch (l) {
    case BasinLabel::trivial: return "trivial";
    case BasinLabel::character_j: return "character_j";
    case BasinLabel::character_j2: return "character_j2";
    case BasinLabel::diverged: return "diverged";
    case BasinLabel::undecided: return "undecided";
  }
  return "?";
}

namespace {

struct PointResult {
  BasinLabel label;
  int steps;
};

PointResult scan_point(double x, double y, const IterationOptions& opt) {
  // The three character values on the order-3 class coordinate.
  const double jx = -0.5, jy = 0.5 * std::sqrt(3.0);
  const double log2_bound = std::log2(opt.divergence_bound);
  for (int s = 1; s <= opt.max_steps; ++s) {
    if (!std::isfinite(x) || !std::isfinite(y) || (2.0 * x + 1.0) / 3.0 > log2_bound ||
        std::abs(x) > opt.divergence_bound || std::abs(y) > opt.divergence_bound)
      return {BasinLabel::diverged, s};
    const auto [nx, ny] = phi2d(x, y);
    const double d = std::max(std::abs(nx - x), std::abs(ny - y));
    x = nx;
    y = ny;
    if (d < opt.tol) {
      auto near = [&](double px, double py) {
        return std::hypot(x - px, y - py) <= 1e-6;
      };
      if (near(1.0, 0.0)) return {BasinLabel::trivial, s};
      if (near(jx, jy)) return {BasinLabel::character_j, s};
      if (near(jx, -jy)) return {BasinLabel::character_j2, s};
      return {BasinLabel::undecided, s};
    }
  }
  return {BasinLabel::undecided, opt.max_steps};
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("ODD_WEDGE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return std::min(v, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

BasinGrid basin_scan(double x0, double x1, double y0, double y1, int nx, int ny,
                     const IterationOptions& opt, int threads) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("basin_scan: resolution must be >= 1");
  BasinGrid grid;
  grid.x0 = x0;
  grid.x1 = x1;
  grid.y0 = y0;
  grid.y1 = y1;
  grid.nx = nx;
  grid.ny = ny;
  // Coordinates as center + offset*step with offsets symmetric about 0, so a
  // rectangle symmetric about an axis samples exactly mirrored points.
  grid.xs.resize(nx);
  grid.ys.resize(ny);
  const double cx = 0.5 * (x0 + x1), hx = nx > 1 ? (x1 - x0) / (nx - 1) : 0.0;
  const double cy = 0.5 * (y0 + y1), hy = ny > 1 ? (y1 - y0) / (ny - 1) : 0.0;
  for (int i = 0; i < nx; ++i) grid.xs[i] = cx + (i - 0.5 * (nx - 1)) * hx;
  for (int i = 0; i < ny; ++i) grid.ys[i] = cy + (i - 0.5 * (ny - 1)) * hy;

  grid.labels.assign(static_cast<size_t>(nx) * ny, BasinLabel::undecided);
  grid.steps.assign(static_cast<size_t>(nx) * ny, 0);

  const int nthreads = std::min(resolve_threads(threads), ny);
  auto work = [&](int t) {
    for (int iy = t; iy < ny; iy += nthreads)
      for (int ix = 0; ix < nx; ++ix) {
        const auto r = scan_point(grid.xs[ix], grid.ys[iy], opt);
        grid.labels[static_cast<size_t>(iy) * nx + ix] = r.label;
        grid.steps[static_cast<size_t>(iy) * nx + ix] = r.steps;
      }
  };
  if (nthreads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return grid;
}

}  // namespace oddwedge
