// Copyright (c) the skewspec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Validated antisymmetric matrices. Antisymmetry is in the transpose sense
// (M^T = -M) for both the real and the complex type; it is checked once at
// construction and holds exactly afterwards.

#ifndef SKEWSPEC_SKEW_MATRIX_HPP
#define SKEWSPEC_SKEW_MATRIX_HPP

#include <iosfwd>

#include "skewspec/types.hpp"

namespace skewspec {

// Dense real antisymmetric matrix, entries[i][j] = -entries[j][i] exactly.
struct SkewMatrixReal {
  Mat entries;

  int size() const { return static_cast<int>(entries.rows()); }
  double frob_norm() const { return entries.norm(); }
};

// Dense complex matrix with M^T = -M (transpose, not conjugate transpose).
// The departure from normality ||M M^+ - M^+ M||_F is computed once at
// construction; operations that rely on unitary diagonalizability gate on it.
struct AntisymmetricComplex {
  CMat entries;
  double frob_norm = 0.0;
  double normality_dev = 0.0;

  int size() const { return static_cast<int>(entries.rows()); }
  bool is_normal(double tol) const {
    return normality_dev <= tol * frob_norm * frob_norm;
  }
};

// Returns (M - M^T)/2 if max|M + M^T| <= tol. The symmetrization leaves an
// exactly antisymmetric input bitwise unchanged.
SkewMatrixReal validate_skew(const Mat& m, double tol);

AntisymmetricComplex validate_antisymmetric(const CMat& m, double tol);

AntisymmetricComplex to_complex(const SkewMatrixReal& m);

// Plain-text fixture format: one row per line, whitespace-separated values,
// 17 significant digits (round-trip exact for doubles).
void write_dense_text(std::ostream& os, const Mat& m);
Mat read_dense_text(std::istream& is);

}  // namespace skewspec

#endif  // SKEWSPEC_SKEW_MATRIX_HPP
