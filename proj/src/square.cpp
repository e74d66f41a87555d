#include "square.hpp"

#include <cmath>
#include <sstream>

namespace qtsq {

namespace {

const std::array<std::array<int, 5>, 5> kSigmaLambda = {{
    {0, 0, 0, -1, 1},
    {0, 0, 1, 0, -1},
    {0, -1, 0, 0, 1},
    {1, 0, 0, 0, -1},
    {-1, 1, -1, 1, 0},
}};

const std::array<std::array<int, 5>, 5> kSigmaLambdaPrime = {{
    {0, 1, 0, 0, -1},
    {-1, 0, 0, 0, 1},
    {0, 0, 0, 1, -1},
    {0, 0, -1, 0, 1},
    {1, -1, 1, -1, 0},
}};

Complex pow_n(Complex v, int n) {
  Complex acc(1.0, 0.0);
  for (int i = 0; i < n; ++i) acc *= v;
  return acc;
}

void require_nonzero_finite(Complex v, const char* name) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) ||
      std::abs(v) == 0.0) {
    std::ostringstream os;
    os << "square: parameter " << name << " must be finite and nonzero";
    throw std::invalid_argument(os.str());
  }
}

// Checks the exponent table, the n-th power scalars and the central element
// q^{2 correction} G1 G2 G3 G4 G5 = h * Id. Exponents are detected modulo n,
// so the comparison is against the table entry reduced the same way.
void verify_local_rep(const LocalRep& lr, int q_correction) {
  const int n = lr.ctx.n;
  const auto& sigma = sigma_table(lr.which);
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      const int got = commutation_exponent(lr.g[i], lr.g[j], lr.ctx);
      if (((got - sigma[i][j]) % n + n) % n != 0) {
        std::ostringstream os;
        os << "square: generators " << i + 1 << "," << j + 1
           << " commute with exponent " << got << ", expected "
           << sigma[i][j] << " (mod " << n << ")";
        throw NumericError(os.str());
      }
    }
  }
  for (int i = 0; i < 4; ++i) {
    const Complex got = scalar_of(matrix_power(lr.g[i], n), lr.ctx.tol_residual);
    if (std::abs(got - lr.params[i]) > lr.ctx.tol_residual *
                                           std::abs(lr.params[i])) {
      std::ostringstream os;
      os << "square: n-th power scalar of generator " << i + 1
         << " does not match the stored parameter";
      throw NumericError(os.str());
    }
  }
  const Complex got5 = scalar_of(matrix_power(lr.g[4], n), lr.ctx.tol_residual);
  if (std::abs(got5 - lr.x5) > lr.ctx.tol_residual * std::abs(lr.x5)) {
    throw NumericError("square: n-th power scalar of generator 5 does not "
                       "match the stored diagonal parameter");
  }
  Matrix central = lr.g[0] * lr.g[1] * lr.g[2] * lr.g[3] * lr.g[4];
  central *= lr.ctx.q_pow(q_correction);
  const Complex got_h = scalar_of(central, lr.ctx.tol_residual);
  if (std::abs(got_h - lr.h) > lr.ctx.tol_residual * std::abs(lr.h)) {
    throw NumericError("square: central element does not equal the central "
                       "charge");
  }
}

LocalRep embed_common(Triangulation which, const TriangleRep& t1,
                      const TriangleRep& t2, int q_correction) {
  if (t1.ctx.n != t2.ctx.n || t1.ctx.k != t2.ctx.k) {
    throw std::invalid_argument(
        "square: triangle factors use different root contexts");
  }
  const int n = t1.ctx.n;
  const Matrix id = Matrix::Identity(n, n);
  LocalRep lr;
  lr.ctx = t1.ctx;
  lr.which = which;
  lr.t1 = t1;
  lr.t2 = t2;
  if (which == Triangulation::lambda) {
    lr.g = {kron(t1.X, id), kron(id, t2.Y), kron(id, t2.Z), kron(t1.Z, id),
            kron(t1.Y, t2.X)};
    lr.params = {t1.p.x, t2.p.y, t2.p.z, t1.p.z};
    lr.x5 = t1.p.y * t2.p.x;
  } else {
    lr.g = {kron(t1.X, id), kron(t1.Y, id), kron(id, t2.Z), kron(id, t2.X),
            kron(t1.Z, t2.Y)};
    lr.params = {t1.p.x, t1.p.y, t2.p.z, t2.p.x};
    lr.x5 = t1.p.z * t2.p.y;
  }
  lr.h = t1.p.h * t2.p.h;
  verify_local_rep(lr, q_correction);
  return lr;
}

Complex diagonal_param(const std::array<Complex, 4>& x, Complex h, int n) {
  for (int i = 0; i < 4; ++i) require_nonzero_finite(x[i], "x");
  require_nonzero_finite(h, "h");
  return pow_n(h, n) / (x[0] * x[1] * x[2] * x[3]);
}

void check_flip_regular(Complex x5) {
  if (std::abs(1.0 + x5) <= 1e-6 || std::abs(1.0 + 1.0 / x5) <= 1e-6) {
    throw std::invalid_argument(
        "square: diagonal parameter too close to -1, flip is degenerate");
  }
}

// Stacks the five conditions L A_i = B_i L on vec(L) taken column-major:
// vec(L A) = (A^T (*) Id) vec L and vec(B L) = (Id (*) B) vec L.
Matrix commuting_stack(const std::array<Matrix, 5>& a,
                       const std::array<Matrix, 5>& b) {
  const int d = static_cast<int>(a[0].rows());
  const Matrix id = Matrix::Identity(d, d);
  Matrix stack(5 * d * d, d * d);
  for (int i = 0; i < 5; ++i) {
    stack.block(i * d * d, 0, d * d, d * d) =
        kron(a[i].transpose(), id) - kron(id, b[i]);
  }
  return stack;
}

}  // namespace

const std::array<std::array<int, 5>, 5>& sigma_table(Triangulation which) {
  return which == Triangulation::lambda ? kSigmaLambda : kSigmaLambdaPrime;
}

LocalRep embed_lambda(const TriangleRep& t1, const TriangleRep& t2) {
  return embed_common(Triangulation::lambda, t1, t2, 0);
}

LocalRep embed_lambda_prime(const TriangleRep& t1, const TriangleRep& t2) {
  return embed_common(Triangulation::lambda_prime, t1, t2, -2);
}

LocalRep local_rep_from_classification(const RootContext& ctx,
                                       Triangulation which,
                                       const std::array<Complex, 4>& x,
                                       Complex h) {
  const Complex x5 = diagonal_param(x, h, ctx.n);
  // Gauge choice: one triangle parameter is put to 1, the triangle charges
  // are h1 = principal root of its parameter product and h2 = h/h1.
  TriangleParams p1;
  TriangleParams p2;
  if (which == Triangulation::lambda) {
    p1 = {x[0], x5, x[3], Complex(0, 0)};
    p2 = {Complex(1, 0), x[1], x[2], Complex(0, 0)};
  } else {
    p1 = {x[0], x[1], x5, Complex(0, 0)};
    p2 = {x[3], Complex(1, 0), x[2], Complex(0, 0)};
  }
  p1.h = principal_nth_root(p1.x * p1.y * p1.z, ctx.n);
  p2.h = h / p1.h;
  const TriangleRep t1 = triangle_rep(ctx, p1);
  const TriangleRep t2 = triangle_rep(ctx, p2);
  return which == Triangulation::lambda ? embed_lambda(t1, t2)
                                        : embed_lambda_prime(t1, t2);
}

FlipData flip_params(const std::array<Complex, 4>& x, Complex h, int n) {
  const Complex x5 = diagonal_param(x, h, n);
  check_flip_regular(x5);
  FlipData out;
  out.params = {(1.0 + x5) * x[0], x[1] / (1.0 + 1.0 / x5),
                (1.0 + x5) * x[2], x[3] / (1.0 + 1.0 / x5)};
  out.h = h;
  out.x5 = 1.0 / x5;
  return out;
}

FlipData flip_params_inverse(const std::array<Complex, 4>& xp, Complex h,
                             int n) {
  const Complex x5p = diagonal_param(xp, h, n);
  check_flip_regular(x5p);
  FlipData out;
  out.params = {xp[0] / (1.0 + 1.0 / x5p), (1.0 + x5p) * xp[1],
                xp[2] / (1.0 + 1.0 / x5p), (1.0 + x5p) * xp[3]};
  out.h = h;
  out.x5 = 1.0 / x5p;
  return out;
}

std::array<Matrix, 5> flip_images(const LocalRep& lr) {
  if (lr.which != Triangulation::lambda) {
    throw std::invalid_argument(
        "square: flip images are formed inside the lambda representation");
  }
  check_flip_regular(lr.x5);
  const int d = lr.ctx.n * lr.ctx.n;
  const Complex q = lr.ctx.q_pow(1);
  const Matrix id = Matrix::Identity(d, d);
  const Matrix g5_inv = inverse(lr.g[4]);
  const Matrix plus = id + q * lr.g[4];
  const Matrix minus_inv = inverse(id + q * g5_inv);
  std::array<Matrix, 5> p = {plus * lr.g[0], minus_inv * lr.g[1],
                             plus * lr.g[2], minus_inv * lr.g[3], g5_inv};
  // The images realize the flipped classification datum; their n-th powers
  // must be the transported parameters.
  const FlipData fp = flip_params(lr.params, lr.h, lr.ctx.n);
  for (int i = 0; i < 4; ++i) {
    const Complex got =
        scalar_of(matrix_power(p[i], lr.ctx.n), 10.0 * lr.ctx.tol_residual);
    if (std::abs(got - fp.params[i]) >
        10.0 * lr.ctx.tol_residual * std::abs(fp.params[i])) {
      std::ostringstream os;
      os << "square: flip image " << i + 1
         << " has wrong n-th power scalar";
      throw NumericError(os.str());
    }
  }
  return p;
}

std::array<Matrix, 5> reverse_flip_images(const LocalRep& lr) {
  if (lr.which != Triangulation::lambda_prime) {
    throw std::invalid_argument(
        "square: reverse flip images are formed inside the lambda_prime "
        "representation");
  }
  check_flip_regular(lr.x5);
  const int d = lr.ctx.n * lr.ctx.n;
  const Complex q = lr.ctx.q_pow(1);
  const Matrix id = Matrix::Identity(d, d);
  const Matrix g5_inv = inverse(lr.g[4]);
  const Matrix plus = id + q * lr.g[4];
  const Matrix minus_inv = inverse(id + q * g5_inv);
  std::array<Matrix, 5> p = {minus_inv * lr.g[0], plus * lr.g[1],
                             minus_inv * lr.g[2], plus * lr.g[3], g5_inv};
  const FlipData fp = flip_params_inverse(lr.params, lr.h, lr.ctx.n);
  for (int i = 0; i < 4; ++i) {
    const Complex got =
        scalar_of(matrix_power(p[i], lr.ctx.n), 10.0 * lr.ctx.tol_residual);
    if (std::abs(got - fp.params[i]) >
        10.0 * lr.ctx.tol_residual * std::abs(fp.params[i])) {
      std::ostringstream os;
      os << "square: reverse flip image " << i + 1
         << " has wrong n-th power scalar";
      throw NumericError(os.str());
    }
  }
  return p;
}

LocalRep normalize_central_charge(const LocalRep& lr) {
  require_nonzero_finite(lr.h, "h");
  LocalRep out = lr;
  out.g[4] /= lr.h;
  out.x5 /= pow_n(lr.h, lr.ctx.n);
  out.h = Complex(1.0, 0.0);
  return out;
}

Matrix solve_intertwiner(const LocalRep& a, const LocalRep& b) {
  if (a.which != Triangulation::lambda ||
      b.which != Triangulation::lambda_prime) {
    throw std::invalid_argument(
        "square: intertwiner runs from a flipped lambda rep to a "
        "lambda_prime rep");
  }
  if (a.ctx.n != b.ctx.n || a.ctx.k != b.ctx.k) {
    throw std::invalid_argument(
        "square: intertwiner endpoints use different root contexts");
  }
  const int n = a.ctx.n;
  const int d = n * n;
  const std::array<Matrix, 5> p = flip_images(a);
  const Matrix stack = commuting_stack(p, b.g);
  const Matrix ker = nullspace(stack, a.ctx.tol_rank);
  if (ker.cols() == 0) {
    const FlipData fp = flip_params(a.params, a.h, n);
    double mismatch = std::abs(fp.h - b.h) / std::abs(fp.h);
    for (int i = 0; i < 4; ++i) {
      mismatch = std::max(mismatch, std::abs(fp.params[i] - b.params[i]) /
                                        std::abs(fp.params[i]));
    }
    mismatch =
        std::max(mismatch, std::abs(fp.x5 - b.x5) / std::abs(fp.x5));
    std::ostringstream os;
    os << "square: no intertwiner; flipped parameters differ from the "
          "target by relative "
       << mismatch;
    throw NumericError(os.str());
  }
  if (ker.cols() > 1) {
    std::ostringstream os;
    os << "square: intertwiner space has dimension " << ker.cols()
       << ", expected 1";
    throw NumericError(os.str());
  }
  Matrix l(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) l(i, j) = ker(i + j * d, 0);
  }
  int pi = 0;
  int pj = 0;
  double best = -1.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (std::abs(l(i, j)) > best + 1e-10) {
        best = std::abs(l(i, j));
        pi = i;
        pj = j;
      }
    }
  }
  l *= std::conj(l(pi, pj)) / std::abs(l(pi, pj));
  for (int i = 0; i < 5; ++i) {
    const double rel = (l * p[i] - b.g[i] * l).norm() / p[i].norm();
    if (rel > a.ctx.tol_residual) {
      std::ostringstream os;
      os << "square: intertwiner residual " << rel << " on generator "
         << i + 1;
      throw NumericError(os.str());
    }
  }
  return l;
}

int self_intertwiner_dimension(const LocalRep& lr) {
  const Matrix stack = commuting_stack(lr.g, lr.g);
  return static_cast<int>(nullspace(stack, lr.ctx.tol_rank).cols());
}

}  // namespace qtsq
