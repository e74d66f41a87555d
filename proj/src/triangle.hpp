#pragma once

#include <tuple>

#include "weyl.hpp"

namespace qtsq {

// Parameters of a cyclic triple: X^n = x, Y^n = y, Z^n = z, with central
// charge h satisfying h^n = x*y*z.
struct TriangleParams {
  Complex x{1.0, 0.0};
  Complex y{1.0, 0.0};
  Complex z{1.0, 0.0};
  Complex h{1.0, 0.0};
};

// Generators pairwise q^2-commute in the cyclic order X->Y->Z->X and the
// central element q^{-1} X*Y*Z acts as h.
struct TriangleRep {
  RootContext ctx;
  TriangleParams p;
  Matrix X;
  Matrix Y;
  Matrix Z;
};

// The model triple (A, B, C): A = clock, B = shift, C = q * B^{-1} A^{-1},
// i.e. C e_k = q^{1-2k} e_{k-1}. Satisfies A^n = B^n = C^n = q^{-1}ABC = Id.
std::tuple<Matrix, Matrix, Matrix> abc_matrices(const RootContext& ctx);

// Scales the model by n-th roots; the Z-root is forced by the central charge
// so that q^{-1} X*Y*Z = h holds exactly. Requires h^n = x*y*z.
TriangleRep triangle_rep(const RootContext& ctx, const TriangleParams& p);

// Extends a cyclic pair by Z = q * Y^{-1} X^{-1}. Central charge is exactly
// 1 and z = 1/(x*y).
TriangleRep weyl_to_triangle(const WeylAction& a);

}  // namespace qtsq
