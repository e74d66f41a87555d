#include "sampling.hpp"

#include <cmath>

#include "clebsch.hpp"

namespace qtsq {

namespace {

constexpr int kBudget = 1000;
constexpr double kMargin = 1e-3;

bool flip_guard(Complex x5) {
  return std::abs(1.0 + x5) > kMargin && std::abs(1.0 + 1.0 / x5) > kMargin;
}

}  // namespace

double Sampler::uniform() { return (rng_() >> 11) * 0x1.0p-53; }

Complex Sampler::complex_param() {
  // Draw order is part of the determinism contract: modulus, then phase.
  const double mod = std::exp2(2.0 * uniform() - 1.0);
  const double phase = 2.0 * M_PI * uniform();
  return std::polar(mod, phase);
}

WeylParams Sampler::weyl() {
  const Complex x = complex_param();
  const Complex y = complex_param();
  return WeylParams{x, y};
}

std::pair<WeylParams, WeylParams> Sampler::regular_pair() {
  for (int t = 0; t < kBudget; ++t) {
    WeylParams mu = weyl();
    WeylParams nu = weyl();
    if (!is_regular_sequence({mu, nu}, kMargin).ok) continue;
    const Complex x5 = mu.x * mu.y / nu.y;
    if (!flip_guard(x5)) continue;
    return {mu, nu};
  }
  throw NumericError("sampler: no regular pair within the draw budget");
}

std::array<WeylParams, 3> Sampler::regular_triple() {
  for (int t = 0; t < kBudget; ++t) {
    WeylParams mu = weyl();
    WeylParams nu = weyl();
    WeylParams sigma = weyl();
    if (!is_regular_sequence({mu, nu, sigma}, kMargin).ok) continue;
    Complex x5;
    try {
      x5 = cg_params(mu, nu).y * cg_params(product_params(mu, nu), sigma).x;
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!flip_guard(x5)) continue;
    return {mu, nu, sigma};
  }
  throw NumericError("sampler: no regular triple within the draw budget");
}

std::array<WeylParams, 4> Sampler::regular_quadruple() {
  for (int t = 0; t < kBudget; ++t) {
    std::array<WeylParams, 4> out = {weyl(), weyl(), weyl(), weyl()};
    if (!is_regular_sequence({out[0], out[1], out[2], out[3]}, kMargin).ok)
      continue;
    return out;
  }
  throw NumericError("sampler: no regular quadruple within the draw budget");
}

std::pair<std::array<Complex, 4>, Complex> Sampler::square_datum(int n) {
  for (int t = 0; t < kBudget; ++t) {
    std::array<Complex, 4> x = {complex_param(), complex_param(),
                                complex_param(), complex_param()};
    const Complex h = complex_param();
    Complex hn(1, 0);
    for (int i = 0; i < n; ++i) hn *= h;
    const Complex x5 = hn / (x[0] * x[1] * x[2] * x[3]);
    if (!flip_guard(x5)) continue;
    return {x, h};
  }
  throw NumericError("sampler: no square datum within the draw budget");
}

std::pair<Complex, Complex> Sampler::genericity_pair(
    const std::array<Complex, 4>& xp) {
  const Complex prod = xp[0] * xp[1] * xp[2] * xp[3];
  for (int t = 0; t < kBudget; ++t) {
    const Complex y_nu = complex_param();
    const Complex y_sigma = complex_param();
    const Complex ratio = y_sigma / y_nu;
    const Complex gate = y_nu * y_sigma * (ratio - xp[2]) *
                         (ratio - (prod + 1.0) * xp[2]);
    if (std::abs(gate) <= kMargin) continue;
    return {y_nu, y_sigma};
  }
  throw NumericError("sampler: no generic free parameters within the budget");
}

}  // namespace qtsq
