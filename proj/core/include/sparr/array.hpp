#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "sparr/hermitian.hpp"

namespace sparr {

/// True when the pairwise difference set {s_n - s_m} covers every integer
/// lag in [0, m-1], i.e. the co-array of the sparse array has no holes.
bool coarray_complete(int virtual_elements, const std::vector<int>& sensors);

/// Sparse linear array embedded in a virtual M-element half-wavelength ULA.
/// Sensor indices are 1-based positions into the virtual array, strictly
/// ascending, and must form a hole-free co-array.
struct ArrayGeometry {
  ArrayGeometry(int virtual_elements, std::vector<int> sensors);

  /// Named minimum redundancy arrays with 4, 5, or 6 sensors.
  static ArrayGeometry mra(int sensor_count);

  int physical_elements() const { return static_cast<int>(sensors.size()); }

  int virtual_elements;       // M
  std::vector<int> sensors;   // S
  static constexpr double spacing_ratio = 0.5;  // d / wavelength
};

/// Ground truth for one generated scene: source angles (radians, strictly
/// ascending in [0, pi]), per-source powers, and the noise power.
struct SourceScene {
  SourceScene(Eigen::VectorXd theta, Eigen::VectorXd powers, double noise_power,
              int virtual_elements);

  /// Equal unit powers with noise power chosen so that
  /// 10*log10(mean(power)/noise_power) == snr_db.
  static SourceScene equal_power(Eigen::VectorXd theta, double snr_db, int virtual_elements);

  int source_count() const { return static_cast<int>(theta.size()); }

  Eigen::VectorXd theta;
  Eigen::VectorXd powers;
  double noise_power;
};

/// Gain, phase, position and mutual-coupling perturbations of the manifold,
/// all scaled by a severity knob rho in [0, 1]; rho = 0 is a perfect array.
struct ImperfectionParams {
  double rho = 0.0;
  Eigen::VectorXd position_error;           // e_i, in units of element spacing
  Eigen::VectorXd gain_bias;                // g_i
  Eigen::VectorXd phase_bias;               // h_i, radians
  std::complex<double> coupling{0.0, 0.0};  // base of the coupling Toeplitz

  /// Reference parameter set: e_1 = 0, next ~60% of sensors -0.2, rest +0.2,
  /// gain biases with the opposite signs, phase biases 0 / -pi/6 / +pi/6,
  /// coupling base 0.3*exp(i*pi/3).
  static ImperfectionParams reference(int virtual_elements, double rho);

  /// Dense perturbation matrices, exposed for direct verification.
  Eigen::MatrixXcd gain_matrix(int m) const;      // I + rho*diag(g)
  Eigen::MatrixXcd phase_matrix(int m) const;     // diag(exp(i*rho*h))
  Eigen::MatrixXcd coupling_matrix(int m) const;  // I + rho*Toep([0, c, c^2, ...])
};

/// Steering vector of the M-element virtual ULA, centered at the origin:
/// element i is exp(j*2*pi*(i-1-(M-1)/2)*(d/lambda)*cos(theta)).
Eigen::VectorXcd manifold(const ArrayGeometry& geom, double theta);

/// Steering vector with all four imperfections applied:
/// C_rho * G_rho * H_rho * a_rho(theta), where a_rho carries the position
/// errors inside the phase exponent.
Eigen::VectorXcd imperfect_manifold(const ArrayGeometry& geom, const ImperfectionParams& params,
                                    double theta);

/// M x k matrix whose columns are (possibly imperfect) steering vectors.
Eigen::MatrixXcd manifold_matrix(const ArrayGeometry& geom, const Eigen::VectorXd& theta,
                                 const ImperfectionParams* params = nullptr);

/// N x M binary row-selection matrix picking the physical sensors.
Eigen::MatrixXd selection_matrix(const ArrayGeometry& geom);

/// N x T complex matrix whose columns are the received snapshots.
struct SnapshotMatrix {
  Eigen::MatrixXcd data;
  int snapshot_count() const { return static_cast<int>(data.cols()); }
};

/// Draws T i.i.d. snapshots y_S(t) = Gamma * (A(theta) s(t) + n(t)) with
/// s(t) ~ CN(0, diag(powers)) and n(t) ~ CN(0, noise_power * I).
/// Reproducible: same seed, same matrix.
SnapshotMatrix generate_snapshots(const ArrayGeometry& geom, const SourceScene& scene,
                                  int snapshots, std::uint64_t seed,
                                  const ImperfectionParams* imperfection = nullptr);

/// (1/T) * Y * Y^H.
HermitianMatrix sample_scm(const SnapshotMatrix& snapshots);

struct NoiselessScm {
  HermitianMatrix ula;  // M x M, A(theta) P A(theta)^H
  HermitianMatrix sla;  // N x N, Gamma R0 Gamma^T
};

NoiselessScm noiseless_scm(const ArrayGeometry& geom, const SourceScene& scene,
                           const ImperfectionParams* imperfection = nullptr);

}  // namespace sparr
