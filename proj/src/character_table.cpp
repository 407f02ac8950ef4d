#include "oddwedge/character_table.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "oddwedge/snap.hpp"

namespace oddwedge {

namespace {

double splitmix_unit(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d4a2ca9dca4f5dULL;
  z = z ^ (z >> 31);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

// Inner product (1/|G|) sum_c |C_c| a_c conj(b_c).
cplx herm(const ClassStructure& cs, const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx s = 0.0;
  for (int c = 0; c < cs.num_classes; ++c)
    s += static_cast<double>(cs.sizes[c]) * a[c] * std::conj(b[c]);
  return s / static_cast<double>(cs.group_order);
}

bool value_close(const cplx& a, const cplx& b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

CharacterTable character_table(const FiniteGroup& g) {
  return character_table(g, conjugacy_classes(g));
}

CharacterTable character_table(const FiniteGroup& g, ClassStructurePtr cs) {
  const int c = cs->num_classes;
  const int n = g.order;

  // Class-algebra structure constants a[i][j][l]:
  // K_i K_j = sum_l a_{ijl} K_l, counted as #{x in C_i : x^{-1} z_l in C_j}.
  std::vector<Eigen::MatrixXd> m(c, Eigen::MatrixXd::Zero(c, c));
  for (int l = 0; l < c; ++l) {
    const int z = cs->representatives[l];
    for (int x = 0; x < n; ++x) {
      const int y = g.at(g.inv[x], z);
      m[cs->class_of[x]](cs->class_of[y], l) += 1.0;
    }
  }

  const auto candidates = character_value_candidates(n, g.name);

  for (int attempt = 0; attempt < 32; ++attempt) {
    std::uint64_t rng = 0x0dd5eedULL + static_cast<std::uint64_t>(attempt);
    Eigen::MatrixXd mix = Eigen::MatrixXd::Zero(c, c);
    for (int i = 0; i < c; ++i) mix += splitmix_unit(rng) * m[i];

    Eigen::EigenSolver<Eigen::MatrixXd> es(mix);
    if (es.info() != Eigen::Success) continue;
    const auto& lam = es.eigenvalues();

    // A generic combination must separate all c eigenvalues.
    double scale = 0.0;
    for (int i = 0; i < c; ++i) scale = std::max(scale, std::abs(lam[i]));
    bool degenerate = false;
    for (int i = 0; i < c && !degenerate; ++i)
      for (int j = i + 1; j < c; ++j)
        if (std::abs(lam[i] - lam[j]) < 1e-6 * (1.0 + scale)) {
          degenerate = true;
          break;
        }
    if (degenerate) continue;

    std::vector<ClassFunction> rows;
    std::vector<int> dims;
    bool ok = true;
    for (int r = 0; r < c && ok; ++r) {
      Eigen::VectorXcd u = es.eigenvectors().col(r);
      if (std::abs(u[0]) < 1e-8 * u.norm()) {
        ok = false;
        break;
      }
      u /= u[0];  // omega at the identity class is 1
      double ssum = 0.0;
      for (int i = 0; i < c; ++i) ssum += std::norm(u[i]) / cs->sizes[i];
      const double d = std::sqrt(static_cast<double>(n) / ssum);
      const double dr = std::round(d);
      if (dr < 1.0 || std::abs(d - dr) > 1e-6) {
        ok = false;
        break;
      }
      std::vector<cplx> vals(c);
      for (int i = 0; i < c; ++i)
        vals[i] = snap_to(dr * u[i] / static_cast<double>(cs->sizes[i]), candidates);
      rows.emplace_back(cs, std::move(vals));
      dims.push_back(static_cast<int>(dr));
    }
    if (!ok) continue;

    long dimsq = 0;
    for (int d : dims) dimsq += static_cast<long>(d) * d;
    if (dimsq != n) continue;
    for (int i = 0; i < c && ok; ++i)
      for (int j = 0; j < c; ++j) {
        const cplx ip = herm(*cs, rows[i].values(), rows[j].values());
        if (std::abs(ip - (i == j ? 1.0 : 0.0)) > 1e-9) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;

    // Canonical row order: dimension first, then lexicographic over classes
    // with larger real part first and smaller imaginary part first.
    std::vector<int> perm(c);
    for (int i = 0; i < c; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      if (dims[a] != dims[b]) return dims[a] < dims[b];
      for (int i = 0; i < c; ++i) {
        const cplx va = rows[a][i], vb = rows[b][i];
        if (value_close(va, vb, 1e-9)) continue;
        if (std::abs(va.real() - vb.real()) > 1e-9) return va.real() > vb.real();
        return va.imag() < vb.imag();
      }
      return false;
    });

    CharacterTable table;
    table.cs = cs;
    for (int i = 0; i < c; ++i) {
      table.rows.push_back(rows[perm[i]]);
      table.dims.push_back(dims[perm[i]]);
    }
    return table;
  }
  throw std::runtime_error("character_table: eigenvalue degeneracy not resolved after retries");
}

}  // namespace oddwedge
