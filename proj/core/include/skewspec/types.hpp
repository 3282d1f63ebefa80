// Copyright (c) the skewspec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SKEWSPEC_TYPES_HPP
#define SKEWSPEC_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <numbers>

namespace skewspec {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace skewspec

#endif  // SKEWSPEC_TYPES_HPP
