#pragma once

#include "clebsch.hpp"

namespace qtsq {

// Recoupling operator of a regular triple, defined through the five-term
// relation between the four evaluation maps of the two bracketing towers.
struct SixJSymbol {
  RootContext ctx;
  WeylParams mu;
  WeylParams nu;
  WeylParams sigma;
  Matrix r;  // n^2 x n^2, acts on slots 1 and 2 of the triple tensor
  // Frobenius-relative distance of the three-slot composite from r (*) Id;
  // the composite factors through the first two slots exactly in theory.
  double factor_residual = 0.0;
};

// Embeddings of an n^2 x n^2 operator into (C^n)^(x3); flat index of
// (i1, i2, i3) is (i1*n + i2)*n + i3.
Matrix embed_pair_12(const Matrix& f, int n);
Matrix embed_pair_23(const Matrix& f, int n);
Matrix embed_pair_13(const Matrix& f, int n);

SixJSymbol sixj(const RootContext& ctx, const WeylParams& mu,
                const WeylParams& nu, const WeylParams& sigma);

// Composes the five recoupling operators of a regular quadruple both ways
// around the pentagon; returns the proportionality residual and the scalar
// relating the two composites (1 in exact arithmetic for a strict identity,
// recorded rather than assumed).
std::pair<double, Complex> pentagon_check(const RootContext& ctx,
                                          const WeylParams& mu,
                                          const WeylParams& nu,
                                          const WeylParams& sigma,
                                          const WeylParams& tau,
                                          double tol = 1e-7);

}  // namespace qtsq
