#pragma once

#include <array>

#include "triangle.hpp"

namespace qtsq {

enum class Triangulation { lambda, lambda_prime };

// Five-generator representation on C^{n^2} built from two triangle
// representations glued along the diagonal of a square. Generators i < j
// satisfy G_i G_j = q^{2 sigma_ij} G_j G_i with the triangulation's exponent
// table; the table rows sum to 0 for lambda and 2 for lambda_prime, which is
// why the central elements below need different q-corrections.
struct LocalRep {
  RootContext ctx;
  Triangulation which = Triangulation::lambda;
  TriangleRep t1;
  TriangleRep t2;
  std::array<Matrix, 5> g;
  std::array<Complex, 4> params;  // n-th power scalars of G_1..G_4
  Complex x5;                     // n-th power scalar of G_5
  Complex h;                      // central charge, h^n = x1 x2 x3 x4 x5
};

// Exponent table sigma_ij for i < j (antisymmetric completion implied).
const std::array<std::array<int, 5>, 5>& sigma_table(Triangulation which);

// lambda: G = (X1 (*) Id, Id (*) Y2, Id (*) Z2, Z1 (*) Id, Y1 (*) X2).
// Central element G1 G2 G3 G4 G5 = h1 h2 * Id with no q-correction.
LocalRep embed_lambda(const TriangleRep& t1, const TriangleRep& t2);

// lambda_prime: G = (X1 (*) Id, Y1 (*) Id, Id (*) Z2, Id (*) X2, Z1 (*) Y2).
// Central element q^{-2} G1 G2 G3 G4 G5 = h1 h2 * Id.
LocalRep embed_lambda_prime(const TriangleRep& t1, const TriangleRep& t2);

// Any classification datum (x1..x4, h) is realized by some local rep; the
// remaining gauge freedom is fixed by putting the first parameter of the
// second triangle (lambda) resp. its second parameter (lambda_prime) to 1.
LocalRep local_rep_from_classification(const RootContext& ctx,
                                       Triangulation which,
                                       const std::array<Complex, 4>& x,
                                       Complex h);

struct FlipData {
  std::array<Complex, 4> params;  // primed boundary parameters
  Complex h;                      // unchanged by the flip
  Complex x5;                     // diagonal parameter of the flipped side
};

// Parameter transport across the diagonal flip, with x5 = h^n/(x1 x2 x3 x4):
//   x1' = (1+x5) x1, x2' = (1+x5^{-1})^{-1} x2,
//   x3' = (1+x5) x3, x4' = (1+x5^{-1})^{-1} x4, x5' = x5^{-1}.
// Requires |1+x5| and |1+x5^{-1}| > 1e-6.
FlipData flip_params(const std::array<Complex, 4>& x, Complex h, int n);

// Inverse transport; flip_params_inverse(flip_params(x)) = x.
FlipData flip_params_inverse(const std::array<Complex, 4>& xp, Complex h,
                             int n);

// Operator images of the flipped generators inside the lambda rep:
//   P1 = (Id + q G5) G1, P2 = (Id + q G5^{-1})^{-1} G2,
//   P3 = (Id + q G5) G3, P4 = (Id + q G5^{-1})^{-1} G4, P5 = G5^{-1}.
// n-th powers reproduce flip_params (verified). The interior sign of q is
// pinned by the requirement that (Id + q G5'^{-1})^{-1} G1' on the primed
// side equals the induced tensor-space operator of the evaluation map.
std::array<Matrix, 5> flip_images(const LocalRep& lr);

// Reverse-direction images inside a lambda_prime rep:
//   Q1 = (Id + q G5'^{-1})^{-1} G1', Q2 = (Id + q G5') G2',
//   Q3 = (Id + q G5'^{-1})^{-1} G3', Q4 = (Id + q G5') G4', Q5 = G5'^{-1}.
// n-th powers reproduce flip_params_inverse (verified).
std::array<Matrix, 5> reverse_flip_images(const LocalRep& lr);

// Divides G5 by the central charge; new charge is 1, boundary generators
// untouched.
LocalRep normalize_central_charge(const LocalRep& lr);

// The unique (up to scale) L with L P_i = G_i' L for all five generators,
// where P are the flip images of a (lambda) and G' the generators of b
// (lambda_prime). Normalized to Frobenius norm 1 with the largest-magnitude
// entry (earliest in row-major order among ties within 1e-10) real positive.
// Nullity 0 reports the parameter mismatch; nullity > 1 is a hard failure.
Matrix solve_intertwiner(const LocalRep& a, const LocalRep& b);

// Dimension of {L : L G_i = G_i L}; 1 exactly when the rep is irreducible.
int self_intertwiner_dimension(const LocalRep& lr);

}  // namespace qtsq
