#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace spinor10 {

// All arithmetic in this library is exact. Matrices hold either plain
// integers (root and cycle coordinates) or residues in [0, p).
using Int = std::int64_t;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline bool same_matrix(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.rows() == 0 || a.cols() == 0 || a.cwiseEqual(b).all());
}

inline bool same_vector(const IntVector& a, const IntVector& b) {
  return a.size() == b.size() && (a.size() == 0 || a.cwiseEqual(b).all());
}

// Row-major flattening with the shape prefixed, usable as an ordered map key.
inline std::vector<Int> matrix_key(const IntMatrix& m) {
  std::vector<Int> key;
  key.reserve(static_cast<std::size_t>(m.size()) + 2);
  key.push_back(m.rows());
  key.push_back(m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) key.push_back(m(i, j));
  return key;
}

inline IntVector to_vector(std::initializer_list<Int> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Int x : xs) v(i++) = x;
  return v;
}

}  // namespace spinor10
