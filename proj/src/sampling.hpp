#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "weyl.hpp"

namespace qtsq {

// Seeded case generator. All draws go through one mt19937_64 stream so a
// fixed seed reproduces every case bitwise on any platform; doubles are
// built from the top 53 bits of the raw output, never from
// std::uniform_real_distribution (whose results are unspecified).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, 1).
  double uniform();

  // Modulus log-uniform in [1/2, 2], phase uniform: stays well away from 0
  // and infinity so products of a few parameters remain tame.
  Complex complex_param();

  WeylParams weyl();

  // Rejection-sampled inputs for the verification pipelines. The margins
  // keep every guarded denominator (regularity, diagonal parameter away
  // from -1, genericity factors) above 1e-3 so downstream tolerances hold
  // with room to spare. Throws NumericError if 1000 draws never pass.
  std::pair<WeylParams, WeylParams> regular_pair();
  std::array<WeylParams, 3> regular_triple();
  std::array<WeylParams, 4> regular_quadruple();

  // Classification datum (x1..x4, h) with the flip guards satisfied; used
  // directly for flip/intertwiner cases with generic central charge.
  std::pair<std::array<Complex, 4>, Complex> square_datum(int n);

  // Free parameters for the triple reconstruction, resampled until the
  // genericity product for the given datum clears the margin.
  std::pair<Complex, Complex> genericity_pair(const std::array<Complex, 4>& xp);

 private:
  std::mt19937_64 rng_;
};

}  // namespace qtsq
