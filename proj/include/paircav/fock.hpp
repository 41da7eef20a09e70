// Copyright 2026 The paircav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "paircav/errors.hpp"
#include "paircav/types.hpp"

namespace paircav {

/// Truncated Fock space with ladder and number operators.
/// a|k> = sqrt(k)|k-1>; on the truncated space [a, a^dag] = I - d |d-1><d-1|.
struct FockSpace {
  int dim;
  MatrixXcd a;     ///< lowering
  MatrixXcd adag;  ///< raising
  MatrixXcd n;     ///< a^dag a

  explicit FockSpace(int d) : dim(d) {
    if (d < 2) throw InvalidDimensionError("Fock dimension must be at least 2");
    a = MatrixXcd::Zero(d, d);
    for (int k = 1; k < d; ++k) a(k - 1, k) = std::sqrt(double(k));
    adag = a.adjoint();
    n = adag * a;
  }

  MatrixXcd identity() const { return MatrixXcd::Identity(dim, dim); }
};

/// Smallest truncation expected to hold a displaced thermal state of mean
/// occupancy n_ss with tail mass below ~1e-6.
inline int suggest_fock_dim(double n_ss, int cap = 512) {
  const int d = int(std::ceil(n_ss + 8.0 * std::sqrt(std::max(n_ss, 0.0)) + 12.0));
  if (d > cap)
    throw TruncationError("suggested Fock dimension " + std::to_string(d) +
                          " exceeds cap " + std::to_string(cap) +
                          "; use the moment solver at this drive");
  return d;
}

}  // namespace paircav
