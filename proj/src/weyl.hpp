#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "numerics.hpp"

namespace qtsq {

// Parameters of a cyclic pair: X^n = x*Id and Y^n = y*Id on C^n. Nonzero.
struct WeylParams {
  Complex x{1.0, 0.0};
  Complex y{1.0, 0.0};
};

// Generator action on C^n with X*Y = q^2 * Y*X.
struct WeylAction {
  RootContext ctx;
  Matrix X;
  Matrix Y;
};

struct RegularityReport {
  bool ok = false;
  // Smallest |y| over all contiguous products; the quantity that degrades
  // first when a sequence approaches a non-cyclic tensor product.
  double margin = 0.0;
  std::optional<std::pair<int, int>> failing_range;
};

// The n-dimensional model: X = x^{1/n} * clock, Y = y^{1/n} * shift, with
// principal roots. branch_x/branch_y pick the other n-th roots (multiply by
// q^{2*branch}); all branches are equivalent representations.
WeylAction standard_rep(const RootContext& ctx, const WeylParams& p,
                        int branch_x = 0, int branch_y = 0);

// Action on the tensor square through the coproduct:
// X -> X (*) X, Y -> X^{-1} (*) Y + Y (*) Id.
WeylAction tensor_action(const WeylAction& a, const WeylAction& b);

// Parameters of the tensor action: (x_a x_b, x_a^{-1} y_b + y_a). The second
// component vanishes exactly when the tensor product fails to be cyclic.
WeylParams product_params(const WeylParams& a, const WeylParams& b);

// Every contiguous sub-product must have |y| > eps and |x| > eps.
RegularityReport is_regular_sequence(const std::vector<WeylParams>& ps,
                                     double eps = 1e-6);

// Reads (x, y) off the n-th powers; both powers must be nonzero scalars.
WeylParams extract_params(const WeylAction& a);

// Invertible U whose columns are v, (y^{-1/n} Y) v, ..., (y^{-1/n} Y)^{n-1} v
// where v is the X-eigenvector for the principal root of p.x, phase-pinned so
// its largest entry (earliest on ties within 1e-10) is real positive. U
// conjugates the action onto the standard model of p; the conjugation
// residual is verified against ctx.tol_residual.
Matrix canonical_basis(const WeylAction& a, const WeylParams& p);

}  // namespace qtsq
