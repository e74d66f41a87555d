#include "clebsch.hpp"

#include <cmath>

namespace qtsq {

namespace {

Vector flatten(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unflatten(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

}  // namespace

WeylParams cg_params(const WeylParams& mu, const WeylParams& nu) {
  const Complex den = 1.0 / mu.x + mu.y / nu.y;
  if (den == Complex(0.0, 0.0))
    throw std::invalid_argument("degenerate pair: induced x-parameter blows up");
  const WeylParams out{1.0 / den, mu.y / (nu.x * nu.y)};
  if (!std::isfinite(std::abs(out.x)) || !std::isfinite(std::abs(out.y)))
    throw std::invalid_argument("degenerate pair: induced parameters not finite");
  return out;
}

CGSpace cg_space(const WeylAction& mu_a, const WeylAction& nu_a) {
  const RootContext& ctx = mu_a.ctx;
  const Eigen::Index n = ctx.n;
  const WeylParams pm = extract_params(mu_a);
  const WeylParams pn = extract_params(nu_a);

  const WeylAction tens = tensor_action(mu_a, nu_a);
  const WeylParams prod = product_params(pm, pn);
  const WeylAction model = standard_rep(ctx, prod);

  const Matrix id_n = Matrix::Identity(n, n);
  const Matrix id_nn = Matrix::Identity(n * n, n * n);
  Matrix stack(2 * n * n * n, n * n * n);
  stack.topRows(n * n * n) =
      kron(id_n, tens.X) - kron(model.X.transpose(), id_nn);
  stack.bottomRows(n * n * n) =
      kron(id_n, tens.Y) - kron(model.Y.transpose(), id_nn);

  const Matrix ker = nullspace(stack, ctx.tol_rank);
  if (ker.cols() != n)
    throw NumericError("equivariant space has dimension " +
                       std::to_string(ker.cols()) + ", expected " +
                       std::to_string(n) + " (pair not regular?)");

  CGSpace cg;
  cg.ctx = ctx;
  cg.mu = pm;
  cg.nu = pn;
  cg.params = cg_params(pm, pn);
  cg.basis.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i)
    cg.basis.push_back(unflatten(ker.col(i), n * n, n));

  // Every solution really intertwines; the stack residual only bounds this
  // indirectly through the rank cutoff.
  for (const Matrix& t : cg.basis) {
    if (rel_residual(tens.X * t, t * model.X) > 10 * ctx.tol_residual ||
        rel_residual(tens.Y * t, t * model.Y) > 10 * ctx.tol_residual)
      throw NumericError("solution fails the intertwining equations");
  }

  cg.op_x = inverse(kron(inverse(mu_a.X), id_n) +
                    kron(mu_a.Y, inverse(nu_a.Y)));
  cg.op_y = ctx.q_pow(-1) *
            kron(mu_a.Y, inverse(nu_a.X) * inverse(nu_a.Y));

  // Coordinates of op * T_j in the (orthonormal) solution basis, with an
  // explicit check that left multiplication preserved the space.
  Matrix values_x(n * n * n, n), values_y(n * n * n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    values_x.col(j) = flatten(cg.op_x * cg.basis[j]);
    values_y.col(j) = flatten(cg.op_y * cg.basis[j]);
  }
  cg.induced_x = ker.adjoint() * values_x;
  cg.induced_y = ker.adjoint() * values_y;
  if ((ker * cg.induced_x - values_x).norm() >
          10 * ctx.tol_residual * values_x.norm() ||
      (ker * cg.induced_y - values_y).norm() >
          10 * ctx.tol_residual * values_y.norm())
    throw NumericError("induced operators do not preserve the solution space");

  // The induced action is cyclic with the closed-form parameters.
  const WeylParams got =
      extract_params(WeylAction{ctx, cg.induced_x, cg.induced_y});
  if (std::abs(got.x - cg.params.x) > 1e-6 * std::abs(cg.params.x) ||
      std::abs(got.y - cg.params.y) > 1e-6 * std::abs(cg.params.y))
    throw NumericError("induced parameters disagree with the closed form");

  return cg;
}

std::pair<Matrix, Matrix> induced_action_on_values(const CGSpace& cg) {
  return {cg.op_x, cg.op_y};
}

CGSpace canonicalize(const CGSpace& cg) {
  if (cg.canonical) return cg;
  const Eigen::Index n = cg.ctx.n;
  const WeylAction induced{cg.ctx, cg.induced_x, cg.induced_y};
  const Matrix u = canonical_basis(induced, cg.params);
  const Matrix uinv = inverse(u);

  CGSpace out = cg;
  out.basis.clear();
  for (Eigen::Index j = 0; j < n; ++j) {
    Matrix t = Matrix::Zero(n * n, n);
    for (Eigen::Index i = 0; i < n; ++i) t += u(i, j) * cg.basis[i];
    out.basis.push_back(std::move(t));
  }
  out.induced_x = uinv * cg.induced_x * u;
  out.induced_y = uinv * cg.induced_y * u;
  out.canonical = true;

  const WeylAction model = standard_rep(cg.ctx, cg.params);
  if (rel_residual(out.induced_x, model.X) > cg.ctx.tol_residual ||
      rel_residual(out.induced_y, model.Y) > cg.ctx.tol_residual)
    throw NumericError("canonical form does not match the standard model");
  return out;
}

Matrix omega_map(const CGSpace& cg) {
  if (!cg.canonical)
    throw std::invalid_argument("omega_map needs a canonicalized space");
  const Eigen::Index n = cg.ctx.n;
  Matrix omega(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      omega.col(i * n + j) = cg.basis[i].col(j);
  const std::vector<double> sv = singular_values(omega);
  if (sv.back() <= cg.ctx.tol_rank * sv.front())
    throw NumericError("evaluation map is numerically singular");
  return omega;
}

}  // namespace qtsq
