#pragma once

// The exterior-power operation on class functions of an odd-order group as
// exp o T, where T is the linear operator f -> sum_j c_j psi_j(f).  T is a
// real c x c matrix over the class basis; its kernel and spectrum drive the
// fixed-point analysis.  Even-order groups are rejected: on them the
// exterior-power character vanishes somewhere and no extension exists.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "oddwedge/character_table.hpp"
#include "oddwedge/class_function.hpp"
#include "oddwedge/group.hpp"

namespace oddwedge {

struct TOperator {
  ClassStructurePtr cs;
  int k = 0;           // group order
  Eigen::MatrixXd m;   // (Tf)(c) = sum_c' m(c, c') f(c')

  ClassFunction apply(const ClassFunction& f) const;
};

// entry(c, c') = sum of c_j over exponents j with class(g^j) = c' for g in
// class c.  Throws std::invalid_argument for even group order.
TOperator build_t(const ClassStructurePtr& cs);

// Pointwise exp(T f).  Outputs within 1e-8*(1+|v|) of a Gaussian integer are
// snapped onto it, so integer trajectories stay exactly integral.
ClassFunction wedge_exp(const TOperator& t, const ClassFunction& f);
ClassFunction wedge_exp(const ClassFunction& f);

struct TSpectrum {
  std::vector<std::complex<double>> eigenvalues;  // descending |lambda|
  Eigen::MatrixXcd eigenvectors;                  // columns, unit norm
};

TSpectrum t_spectrum(const TOperator& t);

// All pairs (i, j), i < j, of table rows whose wedge images coincide within
// tol in sup norm.
std::vector<std::pair<int, int>> kernel_witness(const TOperator& t, const CharacterTable& table,
                                                double tol = 1e-9);

struct AdamsVerification {
  std::string group;
  std::vector<double> per_character;  // sup deviation exp(Tchi) vs direct
  double max_deviation = 0.0;
  bool pass = false;
};

// Checks exp(T chi) against the Newton-identities route for every
// irreducible character.
AdamsVerification verify_adams_theorem(const FiniteGroup& g, double tol = 1e-9);

}  // namespace oddwedge
