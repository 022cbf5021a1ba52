#include "spinor10/bstower.hpp"

#include <set>

namespace spinor10 {

GammaSequence gamma_sequence(const RootSystem& rs, const WeylWord& w, GammaConvention convention) {
  const std::size_t n = w.letters.size();
  GammaSequence gammas;
  gammas.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Root g = rs.simple_root(w.letters[k]);
    if (convention == GammaConvention::prefix) {
      for (std::size_t j = k; j-- > 0;) g = reflect(rs, w.letters[j], g);
    } else {
      for (std::size_t j = k + 1; j < n; ++j) g = reflect(rs, w.letters[j], g);
    }
    if (!g.is_positive())
      throw std::invalid_argument("word is not reduced: gamma_" + std::to_string(k + 1) +
                                  " is not a positive root");
    gammas.push_back(std::move(g));
  }
  std::set<std::vector<Int>> distinct;
  for (const Root& g : gammas)
    distinct.insert(std::vector<Int>(g.coeffs.data(), g.coeffs.data() + g.coeffs.size()));
  if (distinct.size() != gammas.size())
    throw std::invalid_argument("word is not reduced: repeated gamma root");
  return gammas;
}

IntMatrix pairing_table(const RootSystem& rs, const GammaSequence& gammas) {
  const Eigen::Index n = static_cast<Eigen::Index>(gammas.size());
  IntMatrix t(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index i = 0; i < n; ++i)
      t(k, i) = pairing(rs, gammas[static_cast<std::size_t>(k)], gammas[static_cast<std::size_t>(i)]);
  return t;
}

DivisorCombination relative_tangent(const IntMatrix& table, int i) {
  if (i < 1 || i > table.cols()) throw std::out_of_range("tangent level out of range");
  DivisorCombination t = DivisorCombination::Zero(table.rows());
  for (Eigen::Index k = 0; k < i; ++k) t(k) = table(k, i - 1);
  return t;
}

DivisorCombination tangent_sum(const IntMatrix& table) {
  DivisorCombination s = DivisorCombination::Zero(table.rows());
  for (Eigen::Index k = 0; k < table.rows(); ++k)
    for (Eigen::Index i = k; i < table.cols(); ++i) s(k) += table(k, i);
  return s;
}

DivisorCombination ample_lift(int n) { return DivisorCombination::Ones(n); }

const RootSystem& spinor_root_system() {
  static const RootSystem rs(cartan_type_d(5));
  return rs;
}

const WeylWord& spinor_word() {
  static const WeylWord w{{4, 3, 2, 5, 1, 3, 2, 4, 3, 5}};
  return w;
}

const IntMatrix& reference_pairing_table() {
  static const IntMatrix t = [] {
    IntMatrix m(10, 10);
    m << 2, 1, 1, 1, 1, 1, 1, 0, 0, 0,  //
        1, 2, 1, 1, 1, 0, 0, 1, 1, 0,   //
        1, 1, 2, 0, 1, 1, 0, 1, 0, 1,   //
        1, 1, 0, 2, 0, 1, 1, 1, 1, 0,   //
        1, 1, 1, 0, 2, 0, 1, 0, 1, 1,   //
        1, 0, 1, 1, 0, 2, 1, 1, 0, 1,   //
        1, 0, 0, 1, 1, 1, 2, 0, 1, 1,   //
        0, 1, 1, 1, 0, 1, 0, 2, 1, 1,   //
        0, 1, 0, 1, 1, 0, 1, 1, 2, 1,   //
        0, 0, 1, 0, 1, 1, 1, 1, 1, 2;
    return m;
  }();
  return t;
}

}  // namespace spinor10
