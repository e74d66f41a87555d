#include "sixj.hpp"

namespace qtsq {

namespace {

Matrix omega_of(const RootContext& ctx, const WeylParams& a,
                const WeylParams& b) {
  return omega_map(
      canonicalize(cg_space(standard_rep(ctx, a), standard_rep(ctx, b))));
}

// (1/n) * partial trace over the third slot.
Matrix collapse_third(const Matrix& m, int n) {
  Matrix r = Matrix::Zero(n * n, n * n);
  for (int a = 0; a < n * n; ++a)
    for (int b = 0; b < n * n; ++b) {
      Complex acc(0, 0);
      for (int k = 0; k < n; ++k) acc += m(a * n + k, b * n + k);
      r(a, b) = acc / static_cast<double>(n);
    }
  return r;
}

}  // namespace

Matrix embed_pair_12(const Matrix& f, int n) {
  return kron(f, Matrix::Identity(n, n));
}

Matrix embed_pair_23(const Matrix& f, int n) {
  return kron(Matrix::Identity(n, n), f);
}

Matrix embed_pair_13(const Matrix& f, int n) {
  Matrix out = Matrix::Zero(n * n * n, n * n * n);
  for (int i1 = 0; i1 < n; ++i1)
    for (int i3 = 0; i3 < n; ++i3)
      for (int j1 = 0; j1 < n; ++j1)
        for (int j3 = 0; j3 < n; ++j3) {
          const Complex v = f(i1 * n + i3, j1 * n + j3);
          if (v == Complex(0.0, 0.0)) continue;
          for (int i2 = 0; i2 < n; ++i2)
            out((i1 * n + i2) * n + i3, (j1 * n + i2) * n + j3) = v;
        }
  return out;
}

SixJSymbol sixj(const RootContext& ctx, const WeylParams& mu,
                const WeylParams& nu, const WeylParams& sigma) {
  RegularityReport reg = is_regular_sequence({mu, nu, sigma});
  if (!reg.ok)
    throw std::invalid_argument("triple is not regular; margin " +
                                std::to_string(reg.margin));
  const int n = ctx.n;
  const WeylParams mu_nu = product_params(mu, nu);
  const WeylParams nu_sigma = product_params(nu, sigma);

  // Both bracketing towers of the triple, all in canonical bases.
  const Matrix om_12 = omega_of(ctx, mu, nu);
  const Matrix om_12_3 = omega_of(ctx, mu_nu, sigma);
  const Matrix om_23 = omega_of(ctx, nu, sigma);
  const Matrix om_1_23 = omega_of(ctx, mu, nu_sigma);

  const Matrix m = embed_pair_13(inverse(om_1_23), n) *
                   embed_pair_23(inverse(om_23), n) *
                   embed_pair_12(om_12, n) * embed_pair_23(om_12_3, n);

  SixJSymbol s;
  s.ctx = ctx;
  s.mu = mu;
  s.nu = nu;
  s.sigma = sigma;
  s.r = collapse_third(m, n);
  s.factor_residual =
      (m - embed_pair_12(s.r, n)).norm() / m.norm();
  if (s.factor_residual > ctx.tol_residual)
    throw NumericError("composite does not factor through the first two "
                       "slots; residual " + std::to_string(s.factor_residual));
  return s;
}

std::pair<double, Complex> pentagon_check(const RootContext& ctx,
                                          const WeylParams& mu,
                                          const WeylParams& nu,
                                          const WeylParams& sigma,
                                          const WeylParams& tau,
                                          double tol) {
  const int n = ctx.n;
  const WeylParams nu_sigma = product_params(nu, sigma);
  const WeylParams sigma_tau = product_params(sigma, tau);
  const WeylParams mu_nu = product_params(mu, nu);

  const SixJSymbol inner = sixj(ctx, mu, nu, sigma);
  const SixJSymbol mid = sixj(ctx, mu, nu_sigma, tau);
  const SixJSymbol outer = sixj(ctx, nu, sigma, tau);
  const SixJSymbol right_first = sixj(ctx, mu_nu, sigma, tau);
  const SixJSymbol right_second = sixj(ctx, mu, nu, sigma_tau);

  const Matrix lhs = embed_pair_23(outer.r, n) * embed_pair_13(mid.r, n) *
                     embed_pair_12(inner.r, n);
  const Matrix rhs =
      embed_pair_12(right_second.r, n) * embed_pair_23(right_first.r, n);

  const auto lam = proportional(lhs, rhs, tol);
  if (!lam)
    throw NumericError("pentagon composites are not proportional");
  const double residual = (lhs - *lam * rhs).norm() / lhs.norm();
  return {residual, *lam};
}

}  // namespace qtsq
