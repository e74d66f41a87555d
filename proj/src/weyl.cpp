#include "weyl.hpp"

#include <cmath>

namespace qtsq {

namespace {

void require_params(const WeylParams& p) {
  if (!std::isfinite(p.x.real()) || !std::isfinite(p.x.imag()) ||
      !std::isfinite(p.y.real()) || !std::isfinite(p.y.imag()))
    throw std::invalid_argument("parameters must be finite");
  if (p.x == Complex(0.0, 0.0) || p.y == Complex(0.0, 0.0))
    throw std::invalid_argument("parameters must be nonzero");
}

void require_same_context(const RootContext& a, const RootContext& b) {
  if (a.n != b.n || a.k != b.k)
    throw std::invalid_argument("actions live in different root contexts");
}

}  // namespace

WeylAction standard_rep(const RootContext& ctx, const WeylParams& p,
                        int branch_x, int branch_y) {
  require_params(p);
  const Complex rx =
      principal_nth_root(p.x, ctx.n) * ctx.q_pow(2L * branch_x);
  const Complex ry =
      principal_nth_root(p.y, ctx.n) * ctx.q_pow(2L * branch_y);
  return WeylAction{ctx, rx * clock_matrix(ctx), ry * shift_matrix(ctx)};
}

WeylAction tensor_action(const WeylAction& a, const WeylAction& b) {
  require_same_context(a.ctx, b.ctx);
  const Eigen::Index n = a.ctx.n;
  if (a.X.rows() != n || b.X.rows() != n)
    throw std::invalid_argument("tensor_action expects n-dimensional factors");
  Matrix x = kron(a.X, b.X);
  Matrix y = kron(inverse(a.X), b.Y) + kron(a.Y, Matrix::Identity(n, n));
  return WeylAction{a.ctx, std::move(x), std::move(y)};
}

WeylParams product_params(const WeylParams& a, const WeylParams& b) {
  require_params(a);
  require_params(b);
  return WeylParams{a.x * b.x, b.y / a.x + a.y};
}

RegularityReport is_regular_sequence(const std::vector<WeylParams>& ps,
                                     double eps) {
  if (ps.empty()) throw std::invalid_argument("empty parameter sequence");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  RegularityReport rep;
  rep.ok = true;
  rep.margin = std::numeric_limits<double>::infinity();
  const int m = static_cast<int>(ps.size());
  for (int i = 0; i < m; ++i) {
    WeylParams acc = ps[i];
    for (int j = i; j < m; ++j) {
      if (j > i) acc = product_params(acc, ps[j]);
      rep.margin = std::min(rep.margin, std::abs(acc.y));
      if (std::abs(acc.y) <= eps || std::abs(acc.x) <= eps) {
        if (rep.ok) rep.failing_range = {i, j};
        rep.ok = false;
      }
    }
  }
  return rep;
}

WeylParams extract_params(const WeylAction& a) {
  const Complex x = scalar_of(matrix_power(a.X, a.ctx.n), a.ctx.tol_residual);
  const Complex y = scalar_of(matrix_power(a.Y, a.ctx.n), a.ctx.tol_residual);
  if (std::abs(x) < 1e-300 || std::abs(y) < 1e-300)
    throw NumericError("generator power is singular");
  return WeylParams{x, y};
}

Matrix canonical_basis(const WeylAction& a, const WeylParams& p) {
  require_params(p);
  const Eigen::Index n = a.ctx.n;
  if (a.X.rows() != n || a.X.cols() != n || a.Y.rows() != n || a.Y.cols() != n)
    throw std::invalid_argument("canonical_basis expects an n-dimensional action");
  const Complex rx = principal_nth_root(p.x, a.ctx.n);
  const Complex ry = principal_nth_root(p.y, a.ctx.n);

  const Matrix ker =
      nullspace(a.X - rx * Matrix::Identity(n, n), a.ctx.tol_rank);
  if (ker.cols() != 1)
    throw NumericError("eigenspace dimension " + std::to_string(ker.cols()) +
                       ", expected 1 (action not irreducible-cyclic?)");
  Vector v = ker.col(0);

  // Phase pin: the largest-magnitude entry, earliest among near-ties, is made
  // real positive. Keeps the basis independent of the SVD backend's phases.
  Eigen::Index pick = 0;
  double best = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(v(i)) > best + 1e-10) {
      best = std::abs(v(i));
      pick = i;
    }
  v *= std::conj(v(pick)) / std::abs(v(pick));

  const Matrix ystep = a.Y / ry;
  Matrix u(n, n);
  u.col(0) = v;
  for (Eigen::Index c = 1; c < n; ++c) u.col(c) = ystep * u.col(c - 1);

  const Matrix uinv = inverse(u);
  RootContext std_ctx = a.ctx;
  const Matrix ax = rx * clock_matrix(std_ctx);
  const Matrix ay = ry * shift_matrix(std_ctx);
  const double res_x = rel_residual(uinv * a.X * u, ax);
  const double res_y = rel_residual(uinv * a.Y * u, ay);
  if (res_x > a.ctx.tol_residual || res_y > a.ctx.tol_residual)
    throw NumericError("canonical basis does not conjugate onto the model; "
                       "residuals " + std::to_string(res_x) + ", " +
                       std::to_string(res_y));
  return u;
}

}  // namespace qtsq
