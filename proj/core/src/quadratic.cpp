// Copyright (c) the skewspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "skewspec/quadratic.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

#include "skewspec/errors.hpp"

namespace skewspec {

HoppingProfile::HoppingProfile(std::vector<double> amplitudes)
    : t(std::move(amplitudes)) {
  if (sites() < 2) {
    throw TooSmall("HoppingProfile: chain needs N >= 2 sites (got " +
                   std::to_string(sites()) + ")");
  }
}

SkewMatrixReal build_pairing(const HoppingProfile& profile) {
  const int n = profile.sites();
  Mat delta = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double half_t = 0.5 * profile.t[static_cast<size_t>(j - i - 1)];
      delta(i, j) = half_t;
      delta(j, i) = -half_t;
    }
  }
  return validate_skew(delta, 0.0);
}

SingleParticleBlock build_block(const SkewMatrixReal& pairing, int sigma) {
  if (sigma != 1 && sigma != -1) {
    throw InvalidParams("build_block: sigma must be +1 or -1");
  }
  const int n = pairing.size();
  const double s = static_cast<double>(sigma);
  Mat t = Mat::Zero(2 * n, 2 * n);
  t.topLeftCorner(n, n) = (s * 0.5) * Mat::Identity(n, n);
  t.bottomRightCorner(n, n) = (-s * 0.5) * Mat::Identity(n, n);
  // sigma^2 = 1, so both spin blocks carry the same off-diagonal Delta.
  t.topRightCorner(n, n) = pairing.entries;
  t.bottomLeftCorner(n, n) = pairing.entries.transpose();
  return SingleParticleBlock{sigma, std::move(t)};
}

ExcitationSpectrum excitation_spectrum(const SkewMatrixReal& pairing) {
  Eigen::BDCSVD<Mat> svd(pairing.entries);
  ExcitationSpectrum out;
  const int n = pairing.size();
  out.quasi.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s = svd.singularValues()(i);
    out.quasi.push_back(std::sqrt(0.25 + s * s));
  }
  // Singular values come out descending, so quasi is descending too.
  out.eps.reserve(static_cast<size_t>(2 * n));
  for (int i = n - 1; i >= 0; --i) out.eps.push_back(-out.quasi[static_cast<size_t>(i)]);
  for (int i = 0; i < n; ++i) out.eps.push_back(out.quasi[static_cast<size_t>(n - 1 - i)]);
  return out;
}

std::vector<BogoliubovMode> bogoliubov_modes(const SingleParticleBlock& block,
                                             double tol) {
  const int n = block.sites();
  Eigen::SelfAdjointEigenSolver<Mat> solver(block.t);
  if (solver.info() != Eigen::Success) {
    throw ResidualTooLarge("bogoliubov_modes: eigensolver failed");
  }
  const Mat delta = block.t.topRightCorner(n, n);
  const Mat dtd = delta.transpose() * delta;

  std::vector<BogoliubovMode> modes;
  modes.reserve(static_cast<size_t>(2 * n));
  for (int j = 0; j < 2 * n; ++j) {
    BogoliubovMode mode;
    mode.eps = solver.eigenvalues()(j);
    const Vec x = solver.eigenvectors().col(j);
    mode.u = x.head(n);
    mode.v = x.tail(n);

    const double eig_res = (block.t * x - mode.eps * x).norm();
    const double quad_res =
        (dtd * mode.v - (mode.eps * mode.eps - 0.25) * mode.v).norm();
    if (eig_res > tol || quad_res > tol) {
      throw ResidualTooLarge("bogoliubov_modes: mode " + std::to_string(j) +
                             " residuals " + std::to_string(eig_res) + " / " +
                             std::to_string(quad_res) + " exceed tol");
    }
    modes.push_back(std::move(mode));
  }
  return modes;
}

double char_poly_residual(const SkewMatrixReal& pairing,
                          std::span<const double> z_samples) {
  const int n = pairing.size();
  if (n > 16) {
    throw TooLarge("char_poly_residual: determinant check is desk scale only "
                   "(N <= 16)");
  }
  const Mat dtd = pairing.entries.transpose() * pairing.entries;
  Eigen::BDCSVD<Mat> svd(pairing.entries);

  std::vector<double> samples(z_samples.begin(), z_samples.end());
  if (samples.empty()) {
    for (int i = 0; i < n; ++i) {
      const double s = svd.singularValues()(i);
      const double e = std::sqrt(0.25 + s * s);
      samples.push_back(e);
      samples.push_back(-e);
    }
  }

  double worst = 0.0;
  for (double z : samples) {
    const double shift = z * z - 0.25;
    const Mat a = shift * Mat::Identity(n, n) - dtd;
    const double det = Eigen::PartialPivLU<Mat>(a).determinant();
    // Normalize by a product bounding each factor |z^2 - 1/4 - s_i^2|, so a
    // residual near machine precision stays near machine precision at any N.
    double scale = 1.0;
    for (int i = 0; i < n; ++i) {
      const double s = svd.singularValues()(i);
      scale *= std::abs(shift) + s * s + 0.25;
    }
    worst = std::max(worst, std::abs(det) / scale);
  }
  return worst;
}

}  // namespace skewspec
