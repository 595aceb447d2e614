#pragma once

#include <Eigen/Dense>

namespace twodir {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

}  // namespace twodir
