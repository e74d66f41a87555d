#include "triangle.hpp"

#include <cmath>

namespace qtsq {

std::tuple<Matrix, Matrix, Matrix> abc_matrices(const RootContext& ctx) {
  Matrix c = Matrix::Zero(ctx.n, ctx.n);
  for (int j = 0; j < ctx.n; ++j)
    c((j - 1 + ctx.n) % ctx.n, j) = ctx.q_pow(1L - 2L * j);
  return {clock_matrix(ctx), shift_matrix(ctx), c};
}

TriangleRep triangle_rep(const RootContext& ctx, const TriangleParams& p) {
  for (Complex v : {p.x, p.y, p.z, p.h})
    if (v == Complex(0.0, 0.0) || !std::isfinite(std::abs(v)))
      throw std::invalid_argument("triangle parameters must be nonzero and finite");
  Complex hn(1.0, 0.0);
  for (int i = 0; i < ctx.n; ++i) hn *= p.h;
  const Complex xyz = p.x * p.y * p.z;
  if (std::abs(hn - xyz) > ctx.tol_residual * std::abs(xyz))
    throw std::invalid_argument("central charge does not match: h^n != x*y*z");

  auto [a, b, c] = abc_matrices(ctx);
  const Complex rx = principal_nth_root(p.x, ctx.n);
  const Complex ry = principal_nth_root(p.y, ctx.n);
  const Complex rz = p.h / (rx * ry);
  return TriangleRep{ctx, p, rx * a, ry * b, rz * c};
}

TriangleRep weyl_to_triangle(const WeylAction& a) {
  const WeylParams wp = extract_params(a);
  const Matrix z = a.ctx.q_pow(1) * inverse(a.Y) * inverse(a.X);
  const Complex zs =
      scalar_of(matrix_power(z, a.ctx.n), a.ctx.tol_residual);
  const Matrix central = a.ctx.q_pow(-1) * a.X * a.Y * z;
  const Complex h = scalar_of(central, a.ctx.tol_residual);
  if (std::abs(h - Complex(1.0, 0.0)) > a.ctx.tol_residual)
    throw NumericError("central charge of an extended pair must be 1");
  TriangleParams p{wp.x, wp.y, zs, Complex(1.0, 0.0)};
  return TriangleRep{a.ctx, p, a.X, a.Y, z};
}

}  // namespace qtsq
