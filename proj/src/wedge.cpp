#include "oddwedge/wedge.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oddwedge/hurwitz.hpp"
#include "oddwedge/snap.hpp"

namespace oddwedge {

ClassFunction TOperator::apply(const ClassFunction& f) const {
  if (!cs->compatible_with(*f.structure()))
    throw std::invalid_argument("class function lives on a different group");
  const int c = cs->num_classes;
  std::vector<cplx> out(c, 0.0);
  for (int i = 0; i < c; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < c; ++j) s += m(i, j) * f[j];
    out[i] = s;
  }

  // T commutes with f -> conj(f o inverse).  When the input is exactly a
  // fixed point of that involution, enforce it on the output bitwise:
  // otherwise round-off seeds the antisymmetric mode, whose multiplier at
  // the trivial character exceeds 1, and symmetric trajectories are thrown
  // off the invariant slice after a few dozen steps.
  bool symmetric = true;
  for (int i = 0; i < c && symmetric; ++i) {
    const cplx mirror = std::conj(f[cs->inverse_class(i)]);
    symmetric = f[i].real() == mirror.real() && f[i].imag() == mirror.imag();
  }
  if (symmetric) {
    for (int i = 0; i < c; ++i) {
      const int inv = cs->inverse_class(i);
      if (inv > i)
        out[inv] = std::conj(out[i]);
      else if (inv == i)
        out[i] = cplx(out[i].real(), 0.0);
    }
  }
  return ClassFunction(cs, std::move(out));
}

TOperator build_t(const ClassStructurePtr& cs) {
  if (cs->group_order % 2 == 0)
    throw std::invalid_argument("wedge operator requires odd group order (got " +
                                std::to_string(cs->group_order) + ")");
  const int c = cs->num_classes, k = cs->group_order;
  const WedgeCoefficients wc = wedge_coefficients(k);
  TOperator t;
  t.cs = cs;
  t.k = k;
  t.m = Eigen::MatrixXd::Zero(c, c);
  for (int cls = 0; cls < c; ++cls)
    for (int j = 1; j <= k; ++j) t.m(cls, cs->power_class(j, cls)) += wc.cj(j);
  return t;
}

ClassFunction wedge_exp(const TOperator& t, const ClassFunction& f) {
  const ClassFunction e = t.apply(f);
  std::vector<cplx> out(e.size());
  for (int i = 0; i < e.size(); ++i) out[i] = snap_gaussian(std::exp(e[i]));
  return ClassFunction(t.cs, std::move(out));
}

ClassFunction wedge_exp(const ClassFunction& f) {
  return wedge_exp(build_t(f.structure()), f);
}

TSpectrum t_spectrum(const TOperator& t) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(t.m);
  if (es.info() != Eigen::Success) throw std::runtime_error("t_spectrum: eigensolver failed");
  const int c = static_cast<int>(t.m.rows());

  const double ln2 = std::numbers::ln2;
  const std::vector<cplx> known = {2.0 * std::numbers::pi / (3.0 * std::sqrt(3.0)), ln2,
                                   6.0 * ln2 / 7.0, 2.0 * ln2 / 3.0, 0.0};

  std::vector<int> perm(c);
  for (int i = 0; i < c; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const double ma = std::abs(es.eigenvalues()[a]), mb = std::abs(es.eigenvalues()[b]);
    if (std::abs(ma - mb) > 1e-12) return ma > mb;
    return es.eigenvalues()[a].real() > es.eigenvalues()[b].real();
  });

  TSpectrum sp;
  sp.eigenvalues.resize(c);
  sp.eigenvectors.resize(c, c);
  for (int i = 0; i < c; ++i) {
    cplx lam = es.eigenvalues()[perm[i]];
    for (const auto& v : known)
      if (std::abs(lam - v) <= 1e-9) {
        lam = v;
        break;
      }
    if (std::abs(lam.imag()) <= 1e-9) lam = cplx(lam.real(), 0.0);
    sp.eigenvalues[i] = lam;
    sp.eigenvectors.col(i) = es.eigenvectors().col(perm[i]);
  }
  return sp;
}

std::vector<std::pair<int, int>> kernel_witness(const TOperator& t, const CharacterTable& table,
                                                double tol) {
  std::vector<ClassFunction> images;
  images.reserve(table.rows.size());
  for (const auto& row : table.rows) images.push_back(wedge_exp(t, row));
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (images[i].sup_distance(images[j]) <= tol)
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return pairs;
}

AdamsVerification verify_adams_theorem(const FiniteGroup& g, double tol) {
  if (!is_odd_order(g))
    throw std::invalid_argument("verify_adams_theorem: group order must be odd");
  const auto cs = conjugacy_classes(g);
  const auto table = character_table(g, cs);
  const auto t = build_t(cs);
  AdamsVerification rep;
  rep.group = g.name;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto via_exp = wedge_exp(t, table.rows[r]);
    const auto direct = wedge_character_direct(table.rows[r], table.dims[r]);
    const double dev = via_exp.sup_distance(direct);
    rep.per_character.push_back(dev);
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  rep.pass = rep.max_deviation < tol;
  return rep;
}

}  // namespace oddwedge
