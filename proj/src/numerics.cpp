#include "numerics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

extern "C" void openblas_set_num_threads(int);

namespace qtsq {

namespace {

// One BLAS thread keeps every factorization bit-reproducible run to run.
void pin_blas_threads() {
  static std::once_flag once;
  std::call_once(once, [] { openblas_set_num_threads(1); });
}

// Thin SVD, values only or values plus full V^H. Destroys a.
void svd_inplace(Matrix& a, std::vector<double>& s, Matrix* vt) {
  pin_blas_threads();
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  s.assign(static_cast<size_t>(std::min(m, n)), 0.0);
  std::vector<double> superb(static_cast<size_t>(std::max<lapack_int>(std::min(m, n), 2)));
  lapack_int info = LAPACKE_zgesvd(
      LAPACK_COL_MAJOR, 'N', vt ? 'A' : 'N', m, n, a.data(), m, s.data(),
      nullptr, 1, vt ? vt->data() : nullptr, std::max<lapack_int>(n, 1),
      superb.data());
  if (info < 0) throw std::logic_error("svd: bad argument " + std::to_string(-info));
  if (info > 0) throw NumericError("svd failed to converge");
}

// R factor of a tall matrix; shares singular values and right singular
// vectors with the input.
Matrix qr_r_factor(Matrix a) {
  pin_blas_threads();
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  std::vector<Complex> tau(static_cast<size_t>(std::min(m, n)));
  lapack_int info =
      LAPACKE_zgeqrf(LAPACK_COL_MAJOR, m, n, a.data(), m, tau.data());
  if (info != 0) throw std::logic_error("qr: bad argument " + std::to_string(-info));
  Matrix r = Matrix::Zero(n, n);
  for (lapack_int j = 0; j < n; ++j)
    for (lapack_int i = 0; i <= j; ++i) r(i, j) = a(i, j);
  return r;
}

}  // namespace

Complex RootContext::q_pow(long e) const {
  const long period = 2L * n;
  long num = ((static_cast<long>(n) + 1) * k) % period;
  long red = (num * (e % period)) % period;
  red = ((red % period) + period) % period;
  if (red == 0) return Complex(1.0, 0.0);
  if (2 * red == period) return Complex(-1.0, 0.0);
  return std::polar(1.0, M_PI * static_cast<double>(red) / n);
}

RootContext make_root_context(int n, int k, double tol) {
  if (n < 2) throw std::invalid_argument("order must be at least 2");
  if (k < 1 || k >= 2 * n) throw std::invalid_argument("twist must lie in [1, 2n)");
  if (std::gcd(n, k) != 1) throw std::invalid_argument("order and twist must be coprime");
  if (!(tol > 0.0) || tol > 1e-2) throw std::invalid_argument("tolerance out of range");
  RootContext ctx;
  ctx.n = n;
  ctx.k = k;
  ctx.tol_rank = tol;
  ctx.tol_residual = tol;
  ctx.q = ctx.q_pow(1);
  return ctx;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix nullspace(const Matrix& m, double tol_rank) {
  if (m.size() == 0) throw std::invalid_argument("nullspace of empty matrix");
  if (!(tol_rank > 0.0)) throw std::invalid_argument("rank tolerance must be positive");
  Matrix a;
  if (m.rows() > m.cols() + m.cols() / 4)
    a = qr_r_factor(m);
  else
    a = m;
  const Eigen::Index n = a.cols();
  Matrix vt(n, n);
  std::vector<double> s;
  svd_inplace(a, s, &vt);
  const double smax = s.empty() ? 0.0 : s.front();
  Eigen::Index rank = 0;
  for (double sv : s)
    if (sv > tol_rank * smax && sv > 0.0) ++rank;
  Matrix basis(n, n - rank);
  for (Eigen::Index j = rank; j < n; ++j)
    basis.col(j - rank) = vt.row(j).adjoint();
  return basis;
}

std::vector<double> singular_values(const Matrix& m) {
  if (m.size() == 0) throw std::invalid_argument("svd of empty matrix");
  Matrix a = m;
  std::vector<double> s;
  svd_inplace(a, s, nullptr);
  return s;
}

double condition_number(const Matrix& m) {
  std::vector<double> s = singular_values(m);
  if (s.back() == 0.0) return std::numeric_limits<double>::infinity();
  return s.front() / s.back();
}

std::optional<Complex> proportional(const Matrix& a, const Matrix& b,
                                    double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("proportional: shape mismatch");
  const double nb = b.norm();
  if (nb == 0.0) throw std::invalid_argument("proportional: reference is zero");
  const double na = a.norm();
  if (na == 0.0) return Complex(0.0, 0.0);
  const Complex lam = b.conjugate().cwiseProduct(a).sum() / (nb * nb);
  if ((a - lam * b).norm() > tol * na) return std::nullopt;
  return lam;
}

int commutation_exponent(const Matrix& p, const Matrix& q_mat,
                         const RootContext& ctx) {
  if (p.rows() != p.cols() || q_mat.rows() != q_mat.cols() ||
      p.rows() != q_mat.rows())
    throw std::invalid_argument("commutation_exponent: shape mismatch");
  const Matrix pq = p * q_mat;
  const Matrix qp = q_mat * p;
  const double scale = pq.norm();
  if (scale == 0.0) return 0;
  int best = 0;
  double best_r = std::numeric_limits<double>::infinity();
  for (int step = 0; step <= 2 * ctx.n; ++step) {
    const int sigma = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    const double r = (pq - ctx.q_pow(2L * sigma) * qp).norm() / scale;
    if (r < best_r) {
      best_r = r;
      best = sigma;
    }
  }
  if (best_r > ctx.tol_residual)
    throw NumericError("no power of q^2 relates the products; best residual " +
                       std::to_string(best_r));
  return best;
}

Complex principal_nth_root(Complex x, int n) {
  if (n < 1) throw std::invalid_argument("root order must be positive");
  if (x == Complex(0.0, 0.0)) throw std::invalid_argument("root of zero");
  return std::polar(std::pow(std::abs(x), 1.0 / n), std::arg(x) / n);
}

Matrix clock_matrix(const RootContext& ctx) {
  Matrix m = Matrix::Zero(ctx.n, ctx.n);
  for (int i = 0; i < ctx.n; ++i) m(i, i) = ctx.q_pow(2L * i);
  return m;
}

Matrix shift_matrix(const RootContext& ctx) {
  Matrix m = Matrix::Zero(ctx.n, ctx.n);
  for (int i = 0; i < ctx.n; ++i) m((i + 1) % ctx.n, i) = 1.0;
  return m;
}

Matrix matrix_power(const Matrix& m, int p) {
  if (m.rows() != m.cols()) throw std::invalid_argument("power of non-square matrix");
  if (p < 0) throw std::invalid_argument("negative power");
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < p; ++i) out = out * m;
  return out;
}

Complex scalar_of(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("scalar_of needs a square matrix");
  const Complex s = m.trace() / static_cast<double>(m.rows());
  const double norm = m.norm();
  const Matrix dev = m - s * Matrix::Identity(m.rows(), m.cols());
  if (dev.norm() > tol * std::max(norm, 1e-300))
    throw NumericError("matrix is not scalar; deviation " +
                       std::to_string(dev.norm() / std::max(norm, 1e-300)));
  return s;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  return m.partialPivLu().solve(Matrix::Identity(m.rows(), m.cols()));
}

}  // namespace qtsq
