#include "sparr/hermitian.hpp"

#include <stdexcept>

namespace sparr {

HermitianMatrix::HermitianMatrix(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("HermitianMatrix: matrix must be square");
  }
  const double scale = std::max(1.0, a.norm());
  const double dev = (a - a.adjoint()).norm();
  if (dev > kRelTol * scale) {
    throw std::invalid_argument("HermitianMatrix: input is not Hermitian within tolerance");
  }
  data_ = 0.5 * (a + a.adjoint());
}

}  // namespace sparr
