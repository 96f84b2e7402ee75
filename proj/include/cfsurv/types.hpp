#pragma once

#include <complex>
#include <Eigen/Dense>

namespace cfsurv {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using IntVector = Eigen::VectorXi;
using Complex = std::complex<double>;

} // namespace cfsurv
