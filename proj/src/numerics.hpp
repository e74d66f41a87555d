#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qtsq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Thrown when a quantity the algebra forces (a rank, a scalar matrix, a
// residual bound) fails to hold numerically. Distinct from invalid_argument,
// which covers caller-side precondition violations.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation context at q = exp(i*pi*(n+1)*k/n), gcd(n,k) = 1. Then
// q^n = (-1)^{n+1} and q^2 is a primitive n-th root of unity, which is what
// every dimension count below rests on.
struct RootContext {
  int n = 0;
  int k = 1;
  Complex q;
  double tol_rank = 1e-8;
  double tol_residual = 1e-8;

  // q^e for any integer e, computed from the reduced angle so large exponents
  // lose no accuracy.
  Complex q_pow(long e) const;
};

RootContext make_root_context(int n, int k = 1, double tol = 1e-8);

// Kronecker product with the left factor most significant: the flat index of
// slot pair (i, j) is i*cols(b)+j. Every tensor-leg convention in this
// library derives from this choice.
Matrix kron(const Matrix& a, const Matrix& b);

// Orthonormal basis of the right kernel, columns of the returned matrix.
// Rank rule: singular values <= tol_rank * sigma_max are treated as zero.
// Tall inputs are QR-reduced first; singular values and right vectors are
// unchanged by that step. Deterministic for fixed input bytes.
Matrix nullspace(const Matrix& m, double tol_rank);

std::vector<double> singular_values(const Matrix& m);
double condition_number(const Matrix& m);

// Least-squares coefficient lam with a ~ lam*b, accepted when
// ||a - lam*b||_F <= tol * ||a||_F. Zero a yields lam = 0. b must be nonzero.
std::optional<Complex> proportional(const Matrix& a, const Matrix& b,
                                    double tol);

// The exponent s in p*q = q(ctx)^{2s} q*p, searched over 0, +1, -1, ..., +n,
// -n so the ambiguity s ~ s+n (q^{2s} has period n) resolves to the smallest
// magnitude, positive on ties. Throws NumericError when no exponent fits
// within ctx.tol_residual.
int commutation_exponent(const Matrix& p, const Matrix& q_mat,
                         const RootContext& ctx);

// Root with argument arg(x)/n, arg in (-pi, pi].
Complex principal_nth_root(Complex x, int n);

// Diagonal matrix e_k -> q^{2k} e_k.
Matrix clock_matrix(const RootContext& ctx);
// Cyclic shift e_k -> e_{k+1 mod n}.
Matrix shift_matrix(const RootContext& ctx);

// m^p by repeated multiplication, p >= 0.
Matrix matrix_power(const Matrix& m, int p);

// The scalar s with m = s*Id, verified to ||m - s*Id||_F <= tol*||m||_F.
Complex scalar_of(const Matrix& m, double tol);

Matrix inverse(const Matrix& m);

inline double rel_residual(const Matrix& got, const Matrix& want) {
  double scale = want.norm();
  if (scale == 0.0) return got.norm();
  return (got - want).norm() / scale;
}

}  // namespace qtsq
