// Copyright (c) the skewspec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact many-body oracle at desk scale: the chain Hamiltonian, charge and
// spin operators realized on the full 2^(4N)-dimensional Fock space through
// a Jordan-Wigner encoding. Everything here is brute force on purpose; it
// exists to cross-check the single-particle route, not to scale.

#ifndef SKEWSPEC_FOCK_HPP
#define SKEWSPEC_FOCK_HPP

#include <Eigen/SparseCore>
#include <string>
#include <vector>

#include "skewspec/quadratic.hpp"
#include "skewspec/types.hpp"

namespace skewspec::fock {

// Mode bookkeeping: 4N modes total, species-major string order
// (p-up sites, p-down sites, h-up sites, h-down sites). All operators in
// this model are real, so storage is real and adjoint means transpose.
// An alternate interleaved order exists to assert order independence.
enum class StringOrder { species_major, site_major };

struct FockOperator {
  Eigen::SparseMatrix<double> m;
  int modes = 0;

  Eigen::Index dim() const { return m.rows(); }
};

// Default cap keeps the dense spectrum at 256 states; N = 3 (4096 states)
// is available by passing an explicit larger cap.
inline constexpr int kDefaultSiteCap = 2;

// Annihilators for all 4N modes, in string order.
std::vector<FockOperator> mode_annihilators(
    int n_sites, int site_cap = kDefaultSiteCap,
    StringOrder order = StringOrder::species_major);

FockOperator many_body_hamiltonian(const HoppingProfile& profile,
                                   int site_cap = kDefaultSiteCap,
                                   StringOrder order = StringOrder::species_major);

// N_c = sum (p+ p - h+ h), Sigma_3 = sum sigma (p+ p + h+ h).
FockOperator charge_operator(int n_sites, int site_cap = kDefaultSiteCap,
                             StringOrder order = StringOrder::species_major);
FockOperator spin_operator(int n_sites, int site_cap = kDefaultSiteCap,
                           StringOrder order = StringOrder::species_major);

// Frobenius norm of [A, B].
double commutator_norm(const FockOperator& a, const FockOperator& b);

struct SubsetSumReport {
  int n_sites = 0;
  Eigen::Index dim = 0;
  double max_deviation = 0.0;       // sorted many-body spectrum vs subset sums
  double commutator_charge = 0.0;   // ||[H, N_c]||_F
  double commutator_spin = 0.0;     // ||[H, Sigma_3]||_F
  double hermiticity = 0.0;         // ||H - H^T||_F
  int ground_degeneracy = 0;
  double ground_energy = 0.0;
};

// Compares the sorted 2^(4N) eigenvalues of H against all subset sums of
// the 4N eigenvalues of the two single-particle blocks.
SubsetSumReport subset_sum_report(const HoppingProfile& profile,
                                  int site_cap = kDefaultSiteCap);

// Same check but throwing MismatchBeyondTol when the deviation exceeds tol.
SubsetSumReport subset_sum_spectrum_check(const HoppingProfile& profile,
                                          double tol,
                                          int site_cap = kDefaultSiteCap);

std::string report_text(const SubsetSumReport& report);

}  // namespace skewspec::fock

#endif  // SKEWSPEC_FOCK_HPP
