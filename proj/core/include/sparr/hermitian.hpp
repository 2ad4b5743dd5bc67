#pragma once

#include <Eigen/Dense>

namespace sparr {

/// Complex square matrix with an enforced Hermitian invariant:
/// ||A - A^H||_F <= 1e-10 * max(1, ||A||_F). Inputs within tolerance are
/// symmetrized to (A + A^H)/2 on construction; inputs beyond it are rejected.
class HermitianMatrix {
 public:
  static constexpr double kRelTol = 1e-10;

  explicit HermitianMatrix(const Eigen::MatrixXcd& a);

  const Eigen::MatrixXcd& matrix() const { return data_; }
  Eigen::Index size() const { return data_.rows(); }

 private:
  Eigen::MatrixXcd data_;
};

}  // namespace sparr
