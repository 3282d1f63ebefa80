// Copyright (c) the skewspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "skewspec/skew_eigen.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "skewspec/errors.hpp"

namespace skewspec {

namespace {

constexpr double kZeroRel = 1e-12;
constexpr double kUnitarityGate = 1e-8;

struct PairedSpectrum {
  // One entry per nonzero pair: representative eigenvalue (the member in the
  // upper half-plane; real-axis ties broken toward Re > 0), its magnitude,
  // and the column of the representative eigenvector.
  std::vector<Complex> rep;
  std::vector<double> eps;
  std::vector<int> rep_col;
  std::vector<int> zero_cols;
  double mismatch = 0.0;  // worst | |lambda_a| - |lambda_b| | over pairs
};

// Greedy +/- matching of a complex eigenvalue list, largest magnitude first.
// Magnitudes at or below zero_tol are zero modes; remaining eigenvalues must
// match a partner minimizing |lambda_a + lambda_b| within pair_tol.
PairedSpectrum pair_eigenvalues(const std::vector<Complex>& lam,
                                double zero_tol, double pair_tol) {
  const int n = static_cast<int>(lam.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(lam[a]) > std::abs(lam[b]);
  });

  PairedSpectrum out;
  std::vector<bool> used(n, false);
  for (int oi = 0; oi < n; ++oi) {
    const int i = order[oi];
    if (used[i]) continue;
    if (std::abs(lam[i]) <= zero_tol) {
      // Everything from here down is a zero mode.
      for (int oj = oi; oj < n; ++oj) {
        if (!used[order[oj]]) {
          used[order[oj]] = true;
          out.zero_cols.push_back(order[oj]);
        }
      }
      break;
    }
    int best = -1;
    double best_dev = std::numeric_limits<double>::infinity();
    for (int oj = oi + 1; oj < n; ++oj) {
      const int j = order[oj];
      if (used[j]) continue;
      const double dev = std::abs(lam[i] + lam[j]);
      if (dev < best_dev) {
        best_dev = dev;
        best = j;
      }
    }
    if (best < 0 || best_dev > pair_tol) {
      throw PairingFailure(
          "eigenvalue " + std::to_string(lam[i].real()) + (lam[i].imag() < 0 ? "-" : "+") +
          std::to_string(std::abs(lam[i].imag())) +
          "i has no -lambda partner within tolerance (best deviation " +
          std::to_string(best_dev) + ")");
    }
    used[i] = used[best] = true;

    const Complex a = lam[i];
    const Complex b = lam[best];
    out.mismatch = std::max(out.mismatch, std::abs(std::abs(a) - std::abs(b)));
    bool rep_is_a;
    if (std::max(std::abs(a.imag()), std::abs(b.imag())) > zero_tol) {
      rep_is_a = a.imag() >= b.imag();
    } else {
      rep_is_a = a.real() >= b.real();
    }
    out.rep.push_back(rep_is_a ? a : b);
    out.rep_col.push_back(rep_is_a ? i : best);
    out.eps.push_back(0.5 * (std::abs(a) + std::abs(b)));
  }
  // Any leftovers (odd counts) must be zeros; pair_eigenvalues only reaches
  // here with all entries consumed, since the zero sweep drains the tail.
  std::sort(out.zero_cols.begin(), out.zero_cols.end());

  // Order pairs by descending eps (phase as deterministic tie-break).
  std::vector<int> pidx(out.rep.size());
  std::iota(pidx.begin(), pidx.end(), 0);
  std::stable_sort(pidx.begin(), pidx.end(), [&](int a, int b) {
    if (out.eps[a] != out.eps[b]) return out.eps[a] > out.eps[b];
    return std::arg(out.rep[a]) < std::arg(out.rep[b]);
  });
  PairedSpectrum sorted;
  sorted.mismatch = out.mismatch;
  sorted.zero_cols = out.zero_cols;
  for (int k : pidx) {
    sorted.rep.push_back(out.rep[k]);
    sorted.eps.push_back(out.eps[k]);
    sorted.rep_col.push_back(out.rep_col[k]);
  }
  return sorted;
}

// Schur-based eigen data for a normal antisymmetric matrix. For normal
// input the triangular factor is diagonal up to roundoff, so the (exactly
// unitary) Schur basis doubles as an orthonormal eigenbasis.
struct NormalEigen {
  CMat q;
  std::vector<Complex> lam;
};

NormalEigen normal_eigen(const AntisymmetricComplex& m, double tol,
                         const char* op) {
  if (!m.is_normal(tol)) {
    throw NotNormal(std::string(op) + ": ||MM^+ - M^+M|| = " +
                    std::to_string(m.normality_dev) + " exceeds tol*||M||^2");
  }
  NormalEigen out;
  const int n = m.size();
  if (n == 0) {
    out.q = CMat::Identity(0, 0);
    return out;
  }
  Eigen::ComplexSchur<CMat> schur(m.entries, /*computeU=*/true);
  if (schur.info() != Eigen::Success) {
    throw PairingFailure(std::string(op) + ": Schur iteration failed");
  }
  out.q = schur.matrixU();
  out.lam.resize(n);
  for (int j = 0; j < n; ++j) out.lam[j] = schur.matrixT()(j, j);
  return out;
}

double phase_of(Complex rep) {
  // lambda = i*eps*exp(i*phi)  =>  phi = arg(-i*lambda).
  return std::arg(rep * Complex(0.0, -1.0));
}

}  // namespace

std::vector<double> SpectralPairs::signed_spectrum() const {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  for (double e : eps) {
    out.push_back(e);
    out.push_back(-e);
  }
  for (int i = 0; i < zero_modes; ++i) out.push_back(0.0);
  return out;
}

double UnitaryFactor::unitarity_error() const {
  const auto n = u.cols();
  return (u.adjoint() * u - CMat::Identity(n, n)).norm();
}

double zero_tolerance(double frob_norm) {
  return kZeroRel * std::max(1.0, frob_norm);
}

std::pair<SpectralPairs, UnitaryFactor> eigen_skew(const SkewMatrixReal& m,
                                                   double tol) {
  const int n = m.size();
  const CMat herm = Complex(0.0, 1.0) * m.entries.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMat> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw PairingFailure("eigen_skew: Hermitian eigensolver failed");
  }

  const double ztol = zero_tolerance(m.frob_norm());
  const double pair_tol = tol * std::max(m.frob_norm(), 1.0e-300);
  // Eigenvalues of i*M are real; M itself has lambda = -i*s.
  std::vector<Complex> lam(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) lam[static_cast<size_t>(j)] = Complex(solver.eigenvalues()(j), 0.0);
  // Real eigenvalues of the Hermitian proxy pair as +s/-s; reuse the complex
  // pairing on them (phases are irrelevant here, only magnitudes).
  PairedSpectrum ps = pair_eigenvalues(lam, ztol, pair_tol);

  SpectralPairs pairs;
  pairs.n = n;
  pairs.eps = ps.eps;
  pairs.zero_modes = static_cast<int>(ps.zero_cols.size());
  UnitaryFactor u{solver.eigenvectors()};
  return {std::move(pairs), std::move(u)};
}

SpectralPairs eigen_skew_values(const SkewMatrixReal& m, double tol) {
  const int n = m.size();
  const CMat herm = Complex(0.0, 1.0) * m.entries.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMat> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw PairingFailure("eigen_skew_values: Hermitian eigensolver failed");
  }
  const double ztol = zero_tolerance(m.frob_norm());
  const double pair_tol = tol * std::max(m.frob_norm(), 1.0e-300);
  std::vector<Complex> lam(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) lam[static_cast<size_t>(j)] = Complex(solver.eigenvalues()(j), 0.0);
  PairedSpectrum ps = pair_eigenvalues(lam, ztol, pair_tol);
  SpectralPairs pairs;
  pairs.n = n;
  pairs.eps = ps.eps;
  pairs.zero_modes = static_cast<int>(ps.zero_cols.size());
  return pairs;
}

PairPhases eigenvalue_phases(const AntisymmetricComplex& m, double tol) {
  NormalEigen eig = normal_eigen(m, tol, "eigenvalue_phases");
  const double ztol = zero_tolerance(m.frob_norm);
  const double pair_tol = tol * std::max(m.frob_norm, 1.0e-300);
  PairedSpectrum ps = pair_eigenvalues(eig.lam, ztol, pair_tol);
  PairPhases out;
  out.phi.reserve(ps.rep.size());
  for (const Complex& r : ps.rep) out.phi.push_back(phase_of(r));
  return out;
}

std::pair<CanonicalForm, UnitaryFactor> canonical_form(
    const AntisymmetricComplex& m, double tol) {
  NormalEigen eig = normal_eigen(m, tol, "canonical_form");
  const int n = m.size();
  const double ztol = zero_tolerance(m.frob_norm);
  const double pair_tol = tol * std::max(m.frob_norm, 1.0e-300);
  PairedSpectrum ps = pair_eigenvalues(eig.lam, ztol, pair_tol);
  const int n_pairs = static_cast<int>(ps.eps.size());

  CanonicalForm form;
  form.eps = ps.eps;
  Mat canon = Mat::Zero(n, n);
  CMat u = CMat::Zero(n, n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int c = 0; c < n_pairs; ++c) {
    const double e = ps.eps[c];
    canon(2 * c, 2 * c + 1) = e;
    canon(2 * c + 1, 2 * c) = -e;

    // Per pair: columns of U*Phi*V with Phi = exp(i*phi/2) I2 and the fixed
    // rotation V taking diag(i*eps, -i*eps) to [[0, eps], [-eps, 0]]. The
    // partner eigenvector of the representative u+ is conj(u+), so the two
    // columns are phase-rotated real/imaginary combinations of u+.
    const CVec up = eig.q.col(ps.rep_col[c]);
    const Complex half_phase = std::exp(Complex(0.0, 0.5 * phase_of(ps.rep[c])));
    u.col(2 * c) = half_phase * inv_sqrt2 * (up + up.conjugate());
    u.col(2 * c + 1) =
        half_phase * Complex(0.0, 1.0) * inv_sqrt2 * (up.conjugate() - up);
  }
  for (size_t z = 0; z < ps.zero_cols.size(); ++z) {
    u.col(2 * n_pairs + static_cast<int>(z)) = eig.q.col(ps.zero_cols[z]);
  }

  UnitaryFactor uf{std::move(u)};
  if (n > 0 && uf.unitarity_error() > kUnitarityGate * n) {
    throw PairingFailure(
        "canonical_form: assembled basis lost orthonormality (error " +
        std::to_string(uf.unitarity_error()) + ")");
  }
  form.canonical = SkewMatrixReal{std::move(canon)};
  return {std::move(form), std::move(uf)};
}

bool same_class(const AntisymmetricComplex& a, const AntisymmetricComplex& b,
                double tol) {
  auto [fa, ua] = canonical_form(a, tol);
  auto [fb, ub] = canonical_form(b, tol);
  if (a.size() != b.size()) return false;
  if (fa.eps.size() != fb.eps.size()) return false;
  double scale = 1.0;
  if (!fa.eps.empty()) scale = std::max(scale, fa.eps.front());
  if (!fb.eps.empty()) scale = std::max(scale, fb.eps.front());
  for (size_t i = 0; i < fa.eps.size(); ++i) {
    if (std::abs(fa.eps[i] - fb.eps[i]) > tol * scale) return false;
  }
  return true;
}

}  // namespace skewspec
