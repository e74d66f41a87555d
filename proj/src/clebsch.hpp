#pragma once

#include <utility>
#include <vector>

#include "weyl.hpp"

namespace qtsq {

// Solution space of the intertwining equations
//   DX * T = T * Xstd,  DY * T = T * Ystd
// for T : C^n -> C^n (*) C^n, where (DX, DY) is the coproduct action of the
// factor pair and (Xstd, Ystd) the standard model of the product parameters.
// The space is n-dimensional exactly when the pair is regular.
struct CGSpace {
  RootContext ctx;
  WeylParams mu;
  WeylParams nu;
  // Closed-form cyclic parameters of the induced action on this space; the
  // action extracted from the matrices below matches within tolerance.
  WeylParams params;
  std::vector<Matrix> basis;  // n maps, each n^2 x n
  Matrix induced_x;           // n x n, action on solution-space coordinates
  Matrix induced_y;
  Matrix op_x;  // n^2 x n^2, left multiplication on values realizing X
  Matrix op_y;
  bool canonical = false;
};

// Closed form of the induced parameters:
//   x = (x_mu^{-1} + y_mu * y_nu^{-1})^{-1},  y = y_mu * x_nu^{-1} * y_nu^{-1}.
// The x-denominator vanishes exactly for non-regular pairs.
WeylParams cg_params(const WeylParams& mu, const WeylParams& nu);

CGSpace cg_space(const WeylAction& mu, const WeylAction& nu);

// The two n^2 x n^2 operators whose left action on values realizes the
// induced (X, Y); op_x is inverted once here, applying it n times to any
// basis element reproduces multiplication by params.x.
std::pair<Matrix, Matrix> induced_action_on_values(const CGSpace& cg);

// Re-expresses the space in the canonical cyclic basis of the induced
// action, after which induced_x/induced_y equal the standard model of
// params. Idempotent.
CGSpace canonicalize(const CGSpace& cg);

// The n^2 x n^2 evaluation map: column i*n+j is basis[i] applied to e_j.
// Invertible, and conjugates the coproduct action to Id_n (*) standard.
Matrix omega_map(const CGSpace& cg);

}  // namespace qtsq
