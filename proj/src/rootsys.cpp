#include "spinor10/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace spinor10 {

namespace {

// Fraction-free Gaussian elimination (Bareiss). Entries stay small for the
// matrices handled here, so Int never overflows.
Int determinant(IntMatrix m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index r = k + 1; r < n; ++r)
        if (m(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Smallest positive integer diagonal d with d_i a_ij = d_j a_ji, found by
// propagating ratios along edges of the diagram. Throws if no consistent
// assignment exists (such a matrix is never of finite type).
std::vector<Int> symmetrizer(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  // d_i tracked as exact fractions num/den.
  std::vector<Int> num(n, 0), den(n, 1);
  for (int start = 0; start < n; ++start) {
    if (num[start] != 0) continue;
    num[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || a(i, j) == 0) continue;
        // d_j = d_i * a(i,j) / a(j,i)
        Int nj = num[i] * a(i, j);
        Int dj = den[i] * a(j, i);
        if (dj < 0) {
          nj = -nj;
          dj = -dj;
        }
        Int g = std::gcd(nj < 0 ? -nj : nj, dj);
        if (g > 0) {
          nj /= g;
          dj /= g;
        }
        if (num[j] == 0) {
          num[j] = nj;
          den[j] = dj;
          stack.push_back(j);
        } else if (num[j] * dj != nj * den[j]) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  Int lcm = 1;
  for (int i = 0; i < n; ++i) lcm = std::lcm(lcm, den[i]);
  std::vector<Int> d(n);
  for (int i = 0; i < n; ++i) d[i] = num[i] * (lcm / den[i]);
  Int g = 0;
  for (Int x : d) g = std::gcd(g, x);
  for (Int& x : d) x /= g;
  return d;
}

std::vector<Int> root_key(const Root& r) {
  std::vector<Int> k(r.coeffs.data(), r.coeffs.data() + r.coeffs.size());
  return k;
}

}  // namespace

CartanMatrix::CartanMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  const Eigen::Index n = entries_.rows();
  if (n == 0 || entries_.cols() != n) throw std::invalid_argument("Cartan matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (entries_(i, i) != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_(i, j) > 0) throw std::invalid_argument("off-diagonal Cartan entries must be <= 0");
      if ((entries_(i, j) == 0) != (entries_(j, i) == 0))
        throw std::invalid_argument("Cartan zero pattern must be symmetric");
    }
  }
  const std::vector<Int> d = symmetrizer(entries_);
  symmetrized_ = entries_;
  for (Eigen::Index i = 0; i < n; ++i) symmetrized_.row(i) *= d[static_cast<std::size_t>(i)];
  // Finite type <=> the symmetrized form is positive definite.
  for (Eigen::Index k = 1; k <= n; ++k) {
    if (determinant(symmetrized_.topLeftCorner(k, k)) <= 0)
      throw std::invalid_argument("Cartan matrix is not of finite type (symmetrized form not positive definite)");
  }
}

CartanMatrix cartan_type_a(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 2;
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = -1;
  return CartanMatrix(m);
}

CartanMatrix cartan_type_d(int n) {
  if (n < 3) throw std::invalid_argument("type D needs rank >= 3");
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 2;
  for (int i = 0; i + 1 < n - 1; ++i) m(i, i + 1) = m(i + 1, i) = -1;
  m(n - 3, n - 1) = m(n - 1, n - 3) = -1;
  return CartanMatrix(m);
}

RootSystem::RootSystem(CartanMatrix cartan) : cartan_(std::move(cartan)) {
  const int n = cartan_.rank();
  std::set<std::vector<Int>> seen;
  std::vector<Root> frontier;
  for (int i = 1; i <= n; ++i) {
    Root r = simple_root(i);
    seen.insert(root_key(r));
    frontier.push_back(std::move(r));
  }
  std::vector<Root> all(frontier);
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (int i = 1; i <= n; ++i) {
        Root r = reflect(*this, i, beta);
        auto key = root_key(r);
        if (seen.insert(std::move(key)).second) {
          all.push_back(r);
          next.push_back(std::move(r));
        }
      }
    }
    frontier = std::move(next);
  }
  for (Root& r : all)
    if (r.is_positive()) positive_.push_back(std::move(r));
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    Int ha = a.coeffs.sum(), hb = b.coeffs.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.coeffs.data(), a.coeffs.data() + a.coeffs.size(), b.coeffs.data(),
                                        b.coeffs.data() + b.coeffs.size());
  });
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("simple root index out of range");
  Root r{IntVector::Zero(rank())};
  r.coeffs(i - 1) = 1;
  return r;
}

bool RootSystem::is_root(const Root& r) const {
  for (const Root& p : positive_) {
    if (same_vector(p.coeffs, r.coeffs) || same_vector(p.coeffs, (-r.coeffs).eval())) return true;
  }
  return false;
}

Root reflect(const RootSystem& rs, int i, const Root& beta) {
  if (i < 1 || i > rs.rank()) throw std::out_of_range("reflection index out of range");
  const IntMatrix& a = rs.cartan().entries();
  const Int c = a.row(i - 1).dot(beta.coeffs);
  Root out = beta;
  out.coeffs(i - 1) -= c;
  return out;
}

Int pairing(const RootSystem& rs, const Root& gamma, const Root& beta) {
  if (gamma.is_zero()) throw std::invalid_argument("pairing needs a nonzero root");
  const IntMatrix& b = rs.cartan().symmetrized();
  const Int gg = gamma.coeffs.dot(b * gamma.coeffs);
  const Int gb = gamma.coeffs.dot(b * beta.coeffs);
  if ((2 * gb) % gg != 0) throw std::invalid_argument("pairing is not integral; gamma is not a root");
  return 2 * gb / gg;
}

bool is_reduced(const RootSystem& rs, const WeylWord& w) {
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    int ik = w.letters[k];
    if (ik < 1 || ik > rs.rank()) throw std::out_of_range("word letter out of range");
    Root g = rs.simple_root(ik);
    for (std::size_t j = k; j-- > 0;) g = reflect(rs, w.letters[j], g);
    if (!g.is_positive()) return false;
  }
  return true;
}

int coset_dimension(const RootSystem& rs, int p) {
  if (p < 1 || p > rs.rank()) throw std::out_of_range("node index out of range");
  int count = 0;
  for (const Root& r : rs.positive_roots())
    if (r.coeffs(p - 1) != 0) ++count;
  return count;
}

}  // namespace spinor10
