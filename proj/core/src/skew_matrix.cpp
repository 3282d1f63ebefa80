// Copyright (c) the skewspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "skewspec/skew_matrix.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "skewspec/errors.hpp"

namespace skewspec {

SkewMatrixReal validate_skew(const Mat& m, double tol) {
  if (m.rows() != m.cols()) {
    throw NotSquare("validate_skew: matrix is " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
  }
  const double dev =
      m.size() == 0 ? 0.0 : (m + m.transpose()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw NotAntisymmetric("validate_skew: max|M + M^T| = " +
                           std::to_string(dev) + " exceeds tol");
  }
  return SkewMatrixReal{0.5 * (m - m.transpose())};
}

AntisymmetricComplex validate_antisymmetric(const CMat& m, double tol) {
  if (m.rows() != m.cols()) {
    throw NotSquare("validate_antisymmetric: matrix is " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const double dev =
      m.size() == 0 ? 0.0 : (m + m.transpose()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw NotAntisymmetric("validate_antisymmetric: max|M + M^T| = " +
                           std::to_string(dev) + " exceeds tol");
  }
  AntisymmetricComplex out;
  out.entries = 0.5 * (m - m.transpose());
  out.frob_norm = out.entries.norm();
  out.normality_dev = (out.entries * out.entries.adjoint() -
                       out.entries.adjoint() * out.entries)
                          .norm();
  return out;
}

AntisymmetricComplex to_complex(const SkewMatrixReal& m) {
  AntisymmetricComplex out;
  out.entries = m.entries.cast<Complex>();
  out.frob_norm = m.frob_norm();
  // Real skew matrices are normal: M M^T = M^T M = -M^2.
  out.normality_dev = 0.0;
  return out;
}

void write_dense_text(std::ostream& os, const Mat& m) {
  char buf[40];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.16e", m(i, j));
      os << buf << (j + 1 < m.cols() ? " " : "");
    }
    os << '\n';
  }
}

Mat read_dense_text(std::istream& is) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<double> row;
    double x;
    while (ls >> x) row.push_back(x);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) return Mat(0, 0);
  const auto cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw InvalidParams("read_dense_text: ragged rows");
    }
  }
  Mat m(static_cast<Eigen::Index>(rows.size()),
        static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

}  // namespace skewspec
