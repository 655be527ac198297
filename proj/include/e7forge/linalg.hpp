#pragma once

#include <complex>

#include <Eigen/Dense>

namespace e7f {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }

/// Largest absolute entry.
inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

/// ||m - id||_max.
double deviation_from_identity(const Mat& m);

/// ||m^H m - id||_max.
double unitarity_residual(const Mat& m);

/// Matrix exponential by scaling and squaring with the order-13 diagonal
/// Pade approximant.
Mat expm(const Mat& a);

} // namespace e7f
