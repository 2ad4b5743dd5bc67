#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

namespace sparr {

/// Mixes a master seed with up to three stream indices into a new seed.
/// Used to derive independent, order-free streams (one per dataset record,
/// one per sweep trial) from a single master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

/// Deterministic random source. All stochastic operations in the library
/// take an explicit seed and build one of these, so results are a pure
/// function of the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi);
  double normal(double stddev = 1.0);

  /// Circularly symmetric complex Gaussian: real and imaginary parts are
  /// independent N(0, variance/2), so E|z|^2 = variance.
  std::complex<double> complex_normal(double variance = 1.0);

  Eigen::VectorXcd complex_normal_vector(int n, double variance = 1.0);

  /// Matrix with i.i.d. unit-variance circular complex Gaussian entries.
  Eigen::MatrixXcd complex_gaussian(int rows, int cols);

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace sparr
