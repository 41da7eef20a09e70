// Copyright 2026 The paircav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace paircav {

using cplx = std::complex<double>;
using Eigen::Matrix4cd;
using Eigen::MatrixXcd;
using Eigen::Vector4cd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr cplx iu{0.0, 1.0};

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

// CODATA 2018 (exact by SI definition).
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double k_boltzmann = 1.380649e-23;  // J / K

/// sin(x)/x with the removable singularity filled in by its series.
inline double sinc(double x) {
  if (std::abs(x) < 1e-7) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

/// Kronecker product, atom-major convention: index = (row of a) * b.rows() + (row of b).
inline MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace paircav
