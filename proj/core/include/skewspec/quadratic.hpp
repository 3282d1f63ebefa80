// Copyright (c) the skewspec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Single-particle blocks of the quadratic fermion chain and their exact
// excitation spectrum. The pairing block Delta is a strictly-triangular
// Toeplitz antisymmetrization of the hopping profile; excitation energies
// are eps_n = sqrt(1/4 + s_n^2) with s_n the singular values of Delta.

#ifndef SKEWSPEC_QUADRATIC_HPP
#define SKEWSPEC_QUADRATIC_HPP

#include <span>
#include <vector>

#include "skewspec/skew_matrix.hpp"
#include "skewspec/types.hpp"

namespace skewspec {

// Hopping amplitudes t(1)..t(N-1) of a chain with N >= 2 sites.
struct HoppingProfile {
  std::vector<double> t;

  explicit HoppingProfile(std::vector<double> amplitudes);
  int sites() const { return static_cast<int>(t.size()) + 1; }
};

// Delta[i][j] = t(j-i)/2 above the diagonal, antisymmetric by construction.
SkewMatrixReal build_pairing(const HoppingProfile& profile);

// T_sigma = sigma * [[I/2, sigma*Delta], [sigma*Delta^T, -I/2]], a 2N x 2N
// real symmetric matrix; sigma is +1 or -1.
struct SingleParticleBlock {
  int sigma = 1;
  Mat t;

  int sites() const { return static_cast<int>(t.rows()) / 2; }
};

SingleParticleBlock build_block(const SkewMatrixReal& pairing, int sigma);

// quasi: the N non-negative energies sqrt(1/4 + s_n^2), descending;
// eps: the full signed multiset {+-quasi}, ascending.
struct ExcitationSpectrum {
  std::vector<double> eps;
  std::vector<double> quasi;
};

ExcitationSpectrum excitation_spectrum(const SkewMatrixReal& pairing);

// Quasiparticle eigenvector split into particle (u) and hole (v) halves,
// normalized so ||u||^2 + ||v||^2 = 1.
struct BogoliubovMode {
  Vec u;
  Vec v;
  double eps = 0.0;
};

// All 2N modes of a block, energies ascending. Each mode is checked against
// the eigen residual ||T x - eps x|| <= tol and the reduced quadratic
// relation ||Delta^T Delta v - (eps^2 - 1/4) v|| <= tol.
std::vector<BogoliubovMode> bogoliubov_modes(const SingleParticleBlock& block,
                                             double tol = 1e-10);

// Normalized residual of the characteristic polynomial
// P(z) = det[(z^2 - 1/4) I - Delta^T Delta] at the given samples (the
// computed +-eps_n when z_samples is empty). Desk scale only: N <= 16.
double char_poly_residual(const SkewMatrixReal& pairing,
                          std::span<const double> z_samples = {});

}  // namespace skewspec

#endif  // SKEWSPEC_QUADRATIC_HPP
