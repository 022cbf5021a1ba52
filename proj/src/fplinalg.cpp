#include "spinor10/fplinalg.hpp"

#include <stdexcept>

namespace spinor10::fp {

Int norm(Int x, Int p) {
  Int r = x % p;
  return r < 0 ? r + p : r;
}

Int pow_mod(Int base, Int exp, Int p) {
  Int result = 1;
  Int b = norm(base, p);
  while (exp > 0) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return result;
}

Int inv(Int a, Int p) {
  a = norm(a, p);
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // Extended Euclid.
  Int old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return norm(old_s, p);
}

std::optional<Int> sqrt_mod(Int a, Int p) {
  a = norm(a, p);
  if (p == 2) return a;
  if (a == 0) return 0;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  // Tonelli-Shanks: write p-1 = q 2^s with q odd.
  Int q = p - 1;
  Int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (pow_mod(z, (p - 1) / 2, p) == 1) ++z;
  Int m = s;
  Int c = pow_mod(z, q, p);
  Int t = pow_mod(a, q, p);
  Int r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    Int i = 0;
    Int t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    const Int b = pow_mod(c, Int(1) << (m - i - 1), p);
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Echelon rref(IntMatrix m, Int p) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = norm(m(i, j), p);
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    m.row(r).swap(m.row(pivot));
    const Int scale = inv(m(r, c), p);
    for (Eigen::Index j = 0; j < cols; ++j) m(r, j) = m(r, j) * scale % p;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Int f = m(i, c);
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = norm(m(i, j) - f * m(r, j), p);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  Echelon e;
  e.rows = m.topRows(r);
  e.pivots = std::move(pivots);
  return e;
}

IntMatrix kernel(const IntMatrix& m, Int p) {
  const Eigen::Index cols = m.cols();
  const Echelon e = rref(m, p);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(static_cast<int>(c));
  IntMatrix k(static_cast<Eigen::Index>(free_cols.size()), cols);
  k.setZero();
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    const int f = free_cols[fi];
    k(static_cast<Eigen::Index>(fi), f) = 1;
    for (Eigen::Index row = 0; row < e.rows.rows(); ++row)
      k(static_cast<Eigen::Index>(fi), e.pivots[static_cast<std::size_t>(row)]) = norm(-e.rows(row, f), p);
  }
  return rref(k, p).rows;
}

IntMatrix stack_rows(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  IntMatrix out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

}  // namespace spinor10::fp
