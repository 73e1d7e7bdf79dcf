#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ffqcrl {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;     // dense complex operator, dim <= 16
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr cxd kImag{0.0, 1.0};

// tolerances shared by operator validity checks
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kProjectorTol = 1e-12;

}  // namespace ffqcrl
