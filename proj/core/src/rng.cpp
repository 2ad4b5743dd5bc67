#include "sparr/rng.hpp"

namespace sparr {

namespace {

// splitmix64 finalizer; good avalanche, cheap.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  std::uint64_t s = mix(master);
  s = mix(s ^ mix(a + 0x1ull));
  s = mix(s ^ mix(b + 0x2ull));
  s = mix(s ^ mix(c + 0x3ull));
  return s;
}

double Rng::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(gen_);
}

double Rng::normal(double stddev) { return stddev * normal_(gen_); }

std::complex<double> Rng::complex_normal(double variance) {
  const double s = std::sqrt(variance / 2.0);
  const double re = s * normal_(gen_);
  const double im = s * normal_(gen_);
  return {re, im};
}

Eigen::VectorXcd Rng::complex_normal_vector(int n, double variance) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = complex_normal(variance);
  return v;
}

Eigen::MatrixXcd Rng::complex_gaussian(int rows, int cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = complex_normal(1.0);
  return m;
}

}  // namespace sparr
