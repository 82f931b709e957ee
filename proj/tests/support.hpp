#pragma once

#include "qg/catalog.hpp"

#include <random>

namespace qgtest {

inline qg::CMatrix random_matrix(Eigen::Index r, Eigen::Index c, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  qg::CMatrix m(r, c);
  for (Eigen::Index j = 0; j < c; ++j)
    for (Eigen::Index i = 0; i < r; ++i) m(i, j) = qg::Complex(g(rng), g(rng));
  return m;
}

inline qg::CVector random_vector(Eigen::Index n, std::mt19937_64& rng) {
  return random_matrix(n, 1, rng).col(0);
}

inline qg::CVector basis(Eigen::Index n, Eigen::Index i) {
  qg::CVector v = qg::CVector::Zero(n);
  v(i) = 1.0;
  return v;
}

inline qg::CMatrix unit_matrix(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  qg::CMatrix m = qg::CMatrix::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

}  // namespace qgtest
