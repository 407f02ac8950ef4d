#pragma once

// Complex-valued class functions on a finite group: the pointwise ring,
// the power-map endomorphisms, and the Newton-identities route to the
// exterior-power character.

#include <complex>
#include <span>
#include <vector>

#include "oddwedge/group.hpp"

namespace oddwedge {

using cplx = std::complex<double>;

class ClassFunction {
 public:
  ClassFunction(ClassStructurePtr cs, std::vector<cplx> values);
  static ClassFunction constant(ClassStructurePtr cs, cplx v);
  static ClassFunction delta(ClassStructurePtr cs, int cls);

  const ClassStructurePtr& structure() const { return cs_; }
  int size() const { return static_cast<int>(v_.size()); }
  cplx operator[](int c) const { return v_[c]; }
  const std::vector<cplx>& values() const { return v_; }

  ClassFunction scaled(cplx s) const;
  double sup_distance(const ClassFunction& other) const;

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);

 private:
  ClassStructurePtr cs_;
  std::vector<cplx> v_;
};

// (psi_j f)(g) = f(g^j); j is reduced mod the group order into 1..k.
ClassFunction adams(const ClassFunction& f, long long j);

// c -> conj(f(c^{-1})).  f is real in the character-theoretic sense iff this
// fixes f.
ClassFunction conjugate_inverse(const ClassFunction& f);
bool is_real_class_function(const ClassFunction& f, double tol = 1e-9);

// Permutation character of the conjugation action: centralizer orders.
ClassFunction conjugation_character(const ClassStructurePtr& cs);
// |G| at the identity class, 0 elsewhere.
ClassFunction regular_character(const ClassStructurePtr& cs);

// Elementary symmetric functions from power sums:
//   e_0 = 1,  n e_n = sum_{i=1..n} (-1)^{i-1} e_{n-i} p_i.
// Returns e_0..e_d for input p_1..p_d.
std::vector<cplx> newton_elementary(std::span<const cplx> power_sums);

// Character of the sum of all exterior powers of a dim-dimensional
// representation with character chi, i.e. prod(1 + alpha_i) per class,
// recovered from the power sums chi(g^j) via Newton's identities.
ClassFunction wedge_character_direct(const ClassFunction& chi, int dim);

}  // namespace oddwedge
