#pragma once

// Real branches of the Lambert W function (solutions of w e^w = u) and the
// closed-form fixed points of the reduced map z -> 2^{1/7 + 6z/7} - 1 on the
// order-7 class coordinate.  Only the two real branches W_0 (w >= -1) and
// W_{-1} (w <= -1) are provided; the complex branches W_k, k not in {-1, 0},
// are out of scope here.

namespace oddwedge {

enum class LambertBranch { principal, minus_one };

struct LambertSolution {
  LambertBranch branch;
  double w = 0.0;
  double residual = 0.0;  // |w e^w - u|
};

// Principal branch on u >= -1/e, w >= -1.  Halley iteration from a
// series/log seed, bisection fallback; residual < 1e-12.
LambertSolution w_principal(double u);

// Lower real branch on -1/e <= u < 0, w <= -1.
LambertSolution w_minus_one(double u);

// z -> 2^{1/7 + 6z/7} - 1.
double psi7(double z);
double psi7_derivative(double z);

struct PsiFixedPoints7 {
  double u = 0.0;          // -(6/7) 2^{-5/7} log 2, inside (-1/e, 0)
  double trivial = 0.0;    // 1, from the lower branch
  double attractor = 0.0;  // ~0.401664, from the principal branch
  double derivative_trivial = 0.0;    // 12 log2 / 7 > 1
  double derivative_attractor = 0.0;  // < 1
};

// Both real fixed points of psi7 via w = -(6/7)(1+z) log 2.
PsiFixedPoints7 psi_fixed_points_7();

}  // namespace oddwedge
