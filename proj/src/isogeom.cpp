#include "spinor10/isogeom.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

namespace spinor10 {

namespace {

constexpr int kDim = 10;
constexpr int kWitt = 5;

void require_ambient(const QuadraticSpace& qs, const Subspace& s) {
  if (s.ambient_dim() != qs.dim) throw std::invalid_argument("subspace has wrong ambient dimension");
}

QuadraticSpace space_from_qform(Int p, IntMatrix qform) {
  QuadraticSpace qs;
  qs.p = p;
  qs.dim = static_cast<int>(qform.rows());
  qs.gram = qform + IntMatrix(qform.transpose());
  for (Eigen::Index i = 0; i < qs.gram.rows(); ++i)
    for (Eigen::Index j = 0; j < qs.gram.cols(); ++j) qs.gram(i, j) = fp::norm(qs.gram(i, j), p);
  qs.qform = std::move(qform);
  return qs;
}

// Vectors with leading coordinate 1 and q = 0, one per isotropic projective
// point.
std::vector<IntVector> isotropic_points(const QuadraticSpace& qs) {
  std::vector<IntVector> points;
  const int m = qs.dim;
  for (int pivot = 0; pivot < m; ++pivot) {
    const int nfree = m - 1 - pivot;
    IntVector v = IntVector::Zero(m);
    v(pivot) = 1;
    std::vector<Int> digits(static_cast<std::size_t>(nfree), 0);
    while (true) {
      for (int t = 0; t < nfree; ++t) v(pivot + 1 + t) = digits[static_cast<std::size_t>(t)];
      if (qs.quadratic(v) == 0) points.push_back(v);
      int pos = nfree - 1;
      while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == qs.p - 1) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++digits[static_cast<std::size_t>(pos)];
    }
  }
  return points;
}

// All maximal isotropics (both families) of a small split space, by
// recursive quotient descent with canonical-form dedup. The result is a
// pure function of (p, qform), so it is memoized; distinct isotropic
// quotients frequently induce the same form matrix.
std::vector<Subspace> all_maximal_isotropics(const QuadraticSpace& qs) {
  static std::mutex mutex;
  static std::map<std::pair<Int, std::vector<Int>>, std::vector<Subspace>> cache;
  const auto key = std::make_pair(qs.p, matrix_key(qs.qform));
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<Subspace> out;
  if (qs.dim == 0) {
    out.push_back(zero_subspace(0));
  } else if (qs.dim == 2) {
    std::set<std::vector<Int>> seen;
    for (const IntVector& v : isotropic_points(qs)) {
      Subspace s = span_of(v.transpose(), qs.p);
      if (seen.insert(matrix_key(s.basis)).second) out.push_back(std::move(s));
    }
  } else {
    std::set<std::vector<Int>> seen;
    for (const IntVector& v : isotropic_points(qs)) {
      const Subspace line = span_of(v.transpose(), qs.p);
      const IsotropicQuotient q = quotient_by_isotropic(qs, line);
      for (const Subspace& sub : all_maximal_isotropics(q.space)) {
        Subspace lifted = lift_from_quotient(q, sub.basis, qs.p);
        if (seen.insert(matrix_key(lifted.basis)).second) out.push_back(std::move(lifted));
      }
    }
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

// RREF matrices of shape k x m over F_p, one per k-dimensional subspace.
template <typename Fn>
void for_each_rref(int k, int m, Int p, Fn&& fn) {
  std::vector<int> pivots(static_cast<std::size_t>(k));
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == k) {
      std::vector<std::pair<int, int>> free_pos;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < m; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_pos.emplace_back(r, c);
      IntMatrix rows = IntMatrix::Zero(k, m);
      for (int r = 0; r < k; ++r) rows(r, pivots[static_cast<std::size_t>(r)]) = 1;
      std::vector<Int> digits(free_pos.size(), 0);
      while (true) {
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          rows(free_pos[t].first, free_pos[t].second) = digits[t];
        fn(rows);
        std::size_t pos = free_pos.size();
        while (pos > 0 && digits[pos - 1] == p - 1) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
      }
      return;
    }
    for (int c = start; c < m; ++c) {
      pivots[static_cast<std::size_t>(idx)] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
}

}  // namespace

Int QuadraticSpace::quadratic(const IntVector& v) const {
  Int s = 0;
  for (Eigen::Index i = 0; i < qform.rows(); ++i)
    for (Eigen::Index j = i; j < qform.cols(); ++j)
      if (qform(i, j) != 0) s = (s + qform(i, j) * v(i) % p * v(j)) % p;
  return fp::norm(s, p);
}

Int QuadraticSpace::bilinear(const IntVector& u, const IntVector& v) const {
  Int s = 0;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    if (u(i) == 0) continue;
    Int row = 0;
    for (Eigen::Index j = 0; j < gram.cols(); ++j) row = (row + gram(i, j) * v(j)) % p;
    s = (s + u(i) * row) % p;
  }
  return fp::norm(s, p);
}

QuadraticSpace split_space(Int p) {
  if (!fp::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  IntMatrix qform = IntMatrix::Zero(kDim, kDim);
  for (int i = 0; i < kWitt; ++i) qform(i, kDim - 1 - i) = 1;
  return space_from_qform(p, std::move(qform));
}

Subspace span_of(const IntMatrix& rows, Int p) { return Subspace{fp::rref(rows, p).rows}; }

Subspace zero_subspace(int ambient_dim) { return Subspace{IntMatrix(0, ambient_dim)}; }

Subspace full_space(int ambient_dim) {
  return Subspace{IntMatrix::Identity(ambient_dim, ambient_dim)};
}

Int bilinear(const QuadraticSpace& qs, const IntVector& u, const IntVector& v) { return qs.bilinear(u, v); }

bool is_totally_isotropic(const QuadraticSpace& qs, const Subspace& s) {
  require_ambient(qs, s);
  for (int i = 0; i < s.dim(); ++i) {
    const IntVector ri = s.basis.row(i);
    if (qs.p == 2 && qs.quadratic(ri) != 0) return false;
    for (int j = i; j < s.dim(); ++j) {
      if (qs.bilinear(ri, s.basis.row(j)) != 0) return false;
    }
  }
  if (qs.p != 2) {
    for (int i = 0; i < s.dim(); ++i)
      if (qs.quadratic(s.basis.row(i)) != 0) return false;
  }
  return true;
}

Subspace intersect(const Subspace& s, const Subspace& t, Int p) {
  // Zassenhaus: reduce [S | S; T | 0]; rows with zero left half carry the
  // intersection in the right half.
  const int n = s.ambient_dim();
  IntMatrix block(s.dim() + t.dim(), 2 * n);
  block.setZero();
  block.topLeftCorner(s.dim(), n) = s.basis;
  block.topRightCorner(s.dim(), n) = s.basis;
  block.bottomLeftCorner(t.dim(), n) = t.basis;
  const IntMatrix red = fp::rref(block, p).rows;
  std::vector<Eigen::Index> inter_rows;
  for (Eigen::Index i = 0; i < red.rows(); ++i)
    if ((red.block(i, 0, 1, n).array() == 0).all()) inter_rows.push_back(i);
  IntMatrix rows(static_cast<Eigen::Index>(inter_rows.size()), n);
  for (std::size_t i = 0; i < inter_rows.size(); ++i)
    rows.row(static_cast<Eigen::Index>(i)) = red.block(inter_rows[i], n, 1, n);
  return span_of(rows, p);
}

Subspace subspace_sum(const Subspace& s, const Subspace& t, Int p) {
  return span_of(fp::stack_rows(s.basis, t.basis), p);
}

Subspace perp(const QuadraticSpace& qs, const Subspace& s) {
  require_ambient(qs, s);
  if (s.dim() == 0) return full_space(qs.dim);
  IntMatrix constraints = s.basis * qs.gram;
  for (Eigen::Index i = 0; i < constraints.rows(); ++i)
    for (Eigen::Index j = 0; j < constraints.cols(); ++j) constraints(i, j) = fp::norm(constraints(i, j), qs.p);
  return Subspace{fp::kernel(constraints, qs.p)};
}

bool contains(const Subspace& s, const Subspace& t, Int p) {
  return fp::rank(fp::stack_rows(s.basis, t.basis), p) == s.dim();
}

bool contains_vector(const Subspace& s, const IntVector& v, Int p) {
  return fp::rank(fp::stack_rows(s.basis, v.transpose()), p) == s.dim();
}

Subspace reference_maximal(const QuadraticSpace& qs) {
  IntMatrix rows = IntMatrix::Zero(kWitt, qs.dim);
  for (int i = 0; i < kWitt; ++i) rows(i, i) = 1;
  return Subspace{rows};
}

int family_of(const QuadraticSpace& qs, const Subspace& m) {
  require_ambient(qs, m);
  if (m.dim() != kWitt || !is_totally_isotropic(qs, m))
    throw std::invalid_argument("family is defined only for maximal isotropics");
  const int inter = intersect(m, reference_maximal(qs), qs.p).dim();
  return inter % 2 == 1 ? 1 : 2;
}

std::array<MaximalIsotropic, 2> complete_to_maximal(const QuadraticSpace& qs, const Subspace& u) {
  require_ambient(qs, u);
  if (u.dim() != kWitt - 1 || !is_totally_isotropic(qs, u))
    throw std::invalid_argument("completion needs a totally isotropic 4-space");
  const IsotropicQuotient q = quotient_by_isotropic(qs, u);
  // The quotient is a hyperbolic plane; its two isotropic directions give the
  // two completions.
  const Int p = qs.p;
  const Int a = q.space.quadratic(to_vector({1, 0}));
  const Int b = q.space.bilinear(to_vector({1, 0}), to_vector({0, 1}));
  const Int c = q.space.quadratic(to_vector({0, 1}));
  std::vector<IntVector> dirs;
  if (p == 2) {
    for (const IntVector& v : isotropic_points(q.space)) dirs.push_back(v);
  } else if (a == 0) {
    dirs.push_back(to_vector({1, 0}));
    dirs.push_back(to_vector({fp::norm(-c * fp::inv(b, p), p), 1}));
  } else {
    const Int disc = fp::norm(b * b - 4 * a * c, p);
    const auto root = fp::sqrt_mod(disc, p);
    if (!root) throw std::logic_error("hyperbolic plane without isotropic directions");
    const Int inv2a = fp::inv(2 * a, p);
    dirs.push_back(to_vector({fp::norm((-b + *root) * inv2a, p), 1}));
    dirs.push_back(to_vector({fp::norm((-b - *root) * inv2a, p), 1}));
  }
  if (dirs.size() != 2 || same_vector(dirs[0], dirs[1]))
    throw std::logic_error("expected exactly two isotropic directions");
  std::array<MaximalIsotropic, 2> out;
  for (int i = 0; i < 2; ++i) {
    Subspace m = lift_from_quotient(q, dirs[static_cast<std::size_t>(i)].transpose(), p);
    out[static_cast<std::size_t>(i)] = MaximalIsotropic{m, family_of(qs, m)};
  }
  if (matrix_key(out[1].space.basis) < matrix_key(out[0].space.basis)) std::swap(out[0], out[1]);
  return out;
}

MaximalIsotropic complete_to_family(const QuadraticSpace& qs, const Subspace& u, int family) {
  const auto both = complete_to_maximal(qs, u);
  if (both[0].family == family) return both[0];
  if (both[1].family == family) return both[1];
  throw std::logic_error("no completion in the requested family");
}

namespace {

// Extends a totally isotropic subspace by one uniformly random isotropic
// vector of its perp not already in it.
void extend_chain(const QuadraticSpace& qs, Subspace& s, Rng& rng) {
  const Subspace orth = perp(qs, s);
  while (true) {
    const IntVector coeffs = rng.field_vector(orth.dim(), qs.p);
    IntVector v = IntVector::Zero(qs.dim);
    for (int r = 0; r < orth.dim(); ++r)
      for (int c = 0; c < qs.dim; ++c) v(c) = fp::norm(v(c) + coeffs(r) * orth.basis(r, c), qs.p);
    if (qs.quadratic(v) != 0) continue;
    if (contains_vector(s, v, qs.p)) continue;
    s = subspace_sum(s, span_of(v.transpose(), qs.p), qs.p);
    return;
  }
}

}  // namespace

MaximalIsotropic random_maximal_isotropic(const QuadraticSpace& qs, int family, Rng& rng) {
  if (family != 1 && family != 2) throw std::invalid_argument("family must be 1 or 2");
  Subspace s = zero_subspace(qs.dim);
  for (int step = 0; step < kWitt; ++step) extend_chain(qs, s, rng);
  int fam = family_of(qs, s);
  if (fam != family) {
    // Swap the middle hyperbolic pair of coordinates; this is an orthogonal
    // reflection, so it exchanges the two families and preserves uniformity.
    IntMatrix rows = s.basis;
    rows.col(4).swap(rows.col(5));
    s = span_of(rows, qs.p);
    fam = family_of(qs, s);
  }
  return MaximalIsotropic{s, fam};
}

MaximalIsotropic random_maximal_isotropic_through(const QuadraticSpace& qs, const Subspace& through, int family,
                                                  Rng& rng) {
  require_ambient(qs, through);
  if (through.dim() > kWitt - 1) throw std::invalid_argument("seed subspace must have dimension at most 4");
  if (!is_totally_isotropic(qs, through)) throw std::invalid_argument("seed subspace must be totally isotropic");
  Subspace s = through;
  while (s.dim() < kWitt - 1) extend_chain(qs, s, rng);
  return complete_to_family(qs, s, family);
}

IntVector random_nonzero_vector_in(const Subspace& s, Int p, Rng& rng) {
  if (s.dim() == 0) throw std::invalid_argument("zero subspace has no nonzero vectors");
  while (true) {
    const IntVector coeffs = rng.field_vector(s.dim(), p);
    if ((coeffs.array() == 0).all()) continue;
    IntVector v = IntVector::Zero(s.ambient_dim());
    for (int r = 0; r < s.dim(); ++r)
      for (int c = 0; c < s.ambient_dim(); ++c) v(c) = fp::norm(v(c) + coeffs(r) * s.basis(r, c), p);
    return v;
  }
}

Subspace reflect_subspace(const QuadraticSpace& qs, const IntVector& u, const Subspace& s) {
  const Int qu = qs.quadratic(u);
  if (qu == 0) throw std::invalid_argument("reflection vector must be non-isotropic");
  const Int inv_qu = fp::inv(qu, qs.p);
  IntMatrix rows = s.basis;
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    const IntVector x = rows.row(r);
    const Int f = qs.bilinear(x, u) * inv_qu % qs.p;
    for (Eigen::Index c = 0; c < rows.cols(); ++c) rows(r, c) = fp::norm(x(c) - f * u(c), qs.p);
  }
  return span_of(rows, qs.p);
}

std::vector<MaximalIsotropic> enumerate_spinor_points(Int q) {
  if (q != 2 && q != 3)
    throw std::invalid_argument("exhaustive enumeration is limited to q in {2, 3}");
  static std::mutex mutex;
  static std::map<Int, std::vector<MaximalIsotropic>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
  }

  const QuadraticSpace qs = split_space(q);
  std::map<std::vector<Int>, Subspace> found;

  // Stratum transverse to W' = span(e_6..e_10): graphs of alternating maps,
  // rows [I | A^T] with J A alternating.
  IntMatrix jmat = IntMatrix::Zero(kWitt, kWitt);
  for (int i = 0; i < kWitt; ++i) jmat(i, kWitt - 1 - i) = 1;
  std::vector<std::pair<int, int>> upper;
  for (int i = 0; i < kWitt; ++i)
    for (int j = i + 1; j < kWitt; ++j) upper.emplace_back(i, j);
  std::vector<Int> digits(upper.size(), 0);
  while (true) {
    IntMatrix k = IntMatrix::Zero(kWitt, kWitt);
    for (std::size_t t = 0; t < upper.size(); ++t) {
      k(upper[t].first, upper[t].second) = digits[t];
      k(upper[t].second, upper[t].first) = fp::norm(-digits[t], q);
    }
    IntMatrix a = jmat * k;
    IntMatrix rows = IntMatrix::Zero(kWitt, kDim);
    for (int i = 0; i < kWitt; ++i) {
      rows(i, i) = 1;
      for (int r = 0; r < kWitt; ++r) rows(i, kWitt + r) = fp::norm(a(r, i), q);
    }
    found.emplace(matrix_key(rows), Subspace{rows});
    std::size_t pos = digits.size();
    while (pos > 0 && digits[pos - 1] == q - 1) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }

  // Strata meeting W' in dimension >= 2: every such maximal contains a
  // 2-dimensional subspace of W'; enumerate those and the maximal isotropics
  // of the quotient.
  for_each_rref(2, kWitt, q, [&](const IntMatrix& small) {
    IntMatrix rows = IntMatrix::Zero(2, kDim);
    rows.block(0, kWitt, 2, kWitt) = small;
    const Subspace n{rows};
    const IsotropicQuotient quot = quotient_by_isotropic(qs, n);
    for (const Subspace& sub : all_maximal_isotropics(quot.space)) {
      Subspace m = lift_from_quotient(quot, sub.basis, q);
      found.emplace(matrix_key(m.basis), std::move(m));
    }
  });

  std::vector<MaximalIsotropic> out;
  for (auto& [key, sub] : found) {
    const int fam = family_of(qs, sub);
    if (fam == 1) out.push_back(MaximalIsotropic{std::move(sub), fam});
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(q, std::move(out)).first->second;
}

int orbit_type(const QuadraticSpace& qs, const MaximalIsotropic& v, const MaximalIsotropic& w5) {
  if (v.family != 1 || w5.family != 1) throw std::invalid_argument("orbit type needs two family-1 spaces");
  return intersect(v.space, w5.space, qs.p).dim();
}

IsotropicQuotient quotient_by_isotropic(const QuadraticSpace& qs, const Subspace& n) {
  require_ambient(qs, n);
  if (!is_totally_isotropic(qs, n)) throw std::invalid_argument("quotient needs a totally isotropic subspace");
  const Subspace orth = perp(qs, n);
  // Extend the basis of N to a basis of N^perp; the added rows form the
  // complement carrying the induced form.
  std::vector<Eigen::Index> taken;
  IntMatrix current = n.basis;
  int rank = n.dim();
  for (Eigen::Index r = 0; r < orth.basis.rows(); ++r) {
    IntMatrix trial = fp::stack_rows(current, orth.basis.row(r));
    if (fp::rank(trial, qs.p) > rank) {
      current = std::move(trial);
      ++rank;
      taken.push_back(r);
    }
  }
  IntMatrix complement(static_cast<Eigen::Index>(taken.size()), qs.dim);
  for (std::size_t i = 0; i < taken.size(); ++i)
    complement.row(static_cast<Eigen::Index>(i)) = orth.basis.row(taken[i]);

  const int m = static_cast<int>(complement.rows());
  IntMatrix qform = IntMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    qform(i, i) = qs.quadratic(complement.row(i));
    for (int j = i + 1; j < m; ++j) qform(i, j) = qs.bilinear(complement.row(i), complement.row(j));
  }
  IsotropicQuotient out{space_from_qform(qs.p, std::move(qform)), std::move(complement), n};
  return out;
}

Subspace lift_from_quotient(const IsotropicQuotient& q, const IntMatrix& rows, Int p) {
  IntMatrix ambient(rows.rows(), q.complement.cols());
  ambient.setZero();
  for (Eigen::Index r = 0; r < rows.rows(); ++r)
    for (Eigen::Index t = 0; t < rows.cols(); ++t)
      if (rows(r, t) != 0)
        for (Eigen::Index c = 0; c < q.complement.cols(); ++c)
          ambient(r, c) = fp::norm(ambient(r, c) + rows(r, t) * q.complement(t, c), p);
  return span_of(fp::stack_rows(q.radical.basis, ambient), p);
}

}  // namespace spinor10
