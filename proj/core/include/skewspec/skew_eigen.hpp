// Copyright (c) the skewspec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Eigenstructure of antisymmetric matrices: +/- eigenvalue pairing, phase
// factors of the pairs, and the real canonical form under unitary congruence
// (E block-diagonal with [[0, eps], [-eps, 0]] blocks, M = U E U^T).

#ifndef SKEWSPEC_SKEW_EIGEN_HPP
#define SKEWSPEC_SKEW_EIGEN_HPP

#include <utility>
#include <vector>

#include "skewspec/skew_matrix.hpp"
#include "skewspec/types.hpp"

namespace skewspec {

// Nonzero eigenvalue pair magnitudes (descending) plus zero-mode count.
// Invariant: 2 * eps.size() + zero_modes == n.
struct SpectralPairs {
  std::vector<double> eps;
  int zero_modes = 0;
  int n = 0;

  // Signed spectrum {+eps_i, -eps_i, 0 x zero_modes}, unsorted pairs order.
  std::vector<double> signed_spectrum() const;
};

struct UnitaryFactor {
  CMat u;
  double unitarity_error() const;
};

// Phase phi_i per nonzero pair, lambda = i*eps*exp(i*phi), phi in (-pi, pi].
// The representative of each pair is the member in the upper half-plane
// (Im > 0, ties on the real axis broken toward Re > 0), which lands phi in
// [-pi/2, pi/2) and makes real skew inputs report phi = 0.
struct PairPhases {
  std::vector<double> phi;  // aligned with the descending eps order
};

// Real canonical representative: block diagonal of [[0, eps_i], [-eps_i, 0]]
// padded with zero rows/columns; eps descending, matching the block order.
struct CanonicalForm {
  std::vector<double> eps;
  SkewMatrixReal canonical;
};

// Zero-mode cutoff: an eigenvalue magnitude counts as zero when
// eps <= 1e-12 * max(1, ||M||_F).
double zero_tolerance(double frob_norm);

// Eigen-pairs of a real skew matrix via a Hermitian solve of i*M.
// U is unitary with U^+ M U diagonal; +eps/-eps matched within tol*||M||_F.
std::pair<SpectralPairs, UnitaryFactor> eigen_skew(const SkewMatrixReal& m,
                                                   double tol = 1e-10);

// Values-only fast path (used by parameter sweeps).
SpectralPairs eigen_skew_values(const SkewMatrixReal& m, double tol = 1e-10);

PairPhases eigenvalue_phases(const AntisymmetricComplex& m, double tol = 1e-10);

// Canonical form of a normal antisymmetric matrix. The returned unitary
// satisfies ||U E U^T - M|| <= tol*||M|| on well-conditioned inputs; the
// congruence transport U E U^T (rather than a similarity) is what the
// construction diagonalize -> strip pair phases -> rotate pairs into real
// blocks actually produces, and the only transport a phase-carrying pair
// admits (a similarity would preserve eigenvalues, but E always has the
// purely imaginary spectrum {+-i*eps}).
std::pair<CanonicalForm, UnitaryFactor> canonical_form(
    const AntisymmetricComplex& m, double tol = 1e-10);

// True iff the eps multisets of the two canonical forms agree pairwise
// within tol * max(1, largest eps). Sizes must match.
bool same_class(const AntisymmetricComplex& a, const AntisymmetricComplex& b,
                double tol = 1e-10);

}  // namespace skewspec

#endif  // SKEWSPEC_SKEW_EIGEN_HPP
