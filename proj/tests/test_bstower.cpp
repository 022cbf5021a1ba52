#include "doctest.h"
#include "spinor10/bstower.hpp"
#include "spinor10/cycles.hpp"
#include "spinor10/rng.hpp"

using namespace spinor10;

namespace {

IntVector iv(std::initializer_list<Int> xs) { return to_vector(xs); }

// Random reduced words: greedy random extension in the weak order.
WeylWord random_reduced_word(const RootSystem& rs, int target, Rng& rng) {
  WeylWord w;
  int stuck = 0;
  while (static_cast<int>(w.letters.size()) < target && stuck < 50) {
    const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(rs.rank())));
    w.letters.push_back(i);
    if (!is_reduced(rs, w)) {
      w.letters.pop_back();
      ++stuck;
    } else {
      stuck = 0;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("gamma sequence of the fixed word") {
  const RootSystem& rs = spinor_root_system();
  const GammaSequence g = gamma_sequence(rs, spinor_word());
  REQUIRE(g.size() == 10);
  // hand-computed prefix reflections
  CHECK(same_vector(g[0].coeffs, iv({0, 0, 0, 1, 0})));
  CHECK(same_vector(g[1].coeffs, iv({0, 0, 1, 1, 0})));
  CHECK(same_vector(g[2].coeffs, iv({0, 1, 1, 1, 0})));
  CHECK(same_vector(g[4].coeffs, iv({1, 1, 1, 1, 0})));
  CHECK(same_vector(g[9].coeffs, iv({1, 2, 2, 1, 1})));
  for (const Root& r : g) CHECK(r.is_positive());

  SUBCASE("single letter word") {
    const GammaSequence one = gamma_sequence(rs, WeylWord{{3}});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == rs.simple_root(3));
  }
  SUBCASE("non-reduced word rejected") {
    CHECK_THROWS_AS(gamma_sequence(rs, WeylWord{{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(gamma_sequence(rs, WeylWord{{4, 5, 4}}), std::invalid_argument);
  }
}

TEST_CASE("pairing table matches the reference exactly") {
  const RootSystem& rs = spinor_root_system();
  const IntMatrix t = pairing_table(rs, gamma_sequence(rs, spinor_word()));
  CHECK(same_matrix(t, reference_pairing_table()));
  CHECK(same_vector(t.row(0), iv({2, 1, 1, 1, 1, 1, 1, 0, 0, 0}).transpose()));
  CHECK(t(8, 9) == 1);
}

TEST_CASE("suffix convention gives different roots but the same table") {
  const RootSystem& rs = spinor_root_system();
  const GammaSequence pre = gamma_sequence(rs, spinor_word(), GammaConvention::prefix);
  const GammaSequence suf = gamma_sequence(rs, spinor_word(), GammaConvention::suffix);
  bool some_root_differs = false;
  for (std::size_t k = 0; k < pre.size(); ++k) some_root_differs = some_root_differs || !(pre[k] == suf[k]);
  CHECK(some_root_differs);
  // The sequences differ by -w^{-1}, and the pairing is Weyl-invariant.
  CHECK(same_matrix(pairing_table(rs, suf), reference_pairing_table()));
}

TEST_CASE("table symmetry and diagonal on random reduced words") {
  Rng rng(2024);
  for (int rank : {4, 5}) {
    const RootSystem rs(cartan_type_d(rank));
    for (int trial = 0; trial < 8; ++trial) {
      const WeylWord w = random_reduced_word(rs, 3 + static_cast<int>(rng.below(6)), rng);
      if (w.letters.empty()) continue;
      const IntMatrix t = pairing_table(rs, gamma_sequence(rs, w));
      CHECK(same_matrix(t, IntMatrix(t.transpose())));
      for (Eigen::Index i = 0; i < t.rows(); ++i) CHECK(t(i, i) == 2);
    }
  }
}

TEST_CASE("relative tangent classes read off columns") {
  const IntMatrix& t = reference_pairing_table();
  CHECK(same_vector(relative_tangent(t, 1), iv({2, 0, 0, 0, 0, 0, 0, 0, 0, 0})));
  CHECK(same_vector(relative_tangent(t, 4), iv({1, 1, 0, 2, 0, 0, 0, 0, 0, 0})));
  CHECK(same_vector(relative_tangent(t, 10), iv({0, 0, 1, 0, 1, 1, 1, 1, 1, 2})));
  CHECK_THROWS_AS(relative_tangent(t, 0), std::out_of_range);
  CHECK_THROWS_AS(relative_tangent(t, 11), std::out_of_range);
}

TEST_CASE("tangent sum") {
  const IntMatrix& t = reference_pairing_table();
  CHECK(same_vector(tangent_sum(t), iv({8, 7, 6, 6, 5, 5, 4, 4, 3, 2})));

  SUBCASE("single-level table") {
    IntMatrix one(1, 1);
    one << 2;
    CHECK(same_vector(tangent_sum(one), iv({2})));
  }
  SUBCASE("row-sum identity") {
    const DivisorCombination s = tangent_sum(t);
    for (Eigen::Index k = 0; k < 10; ++k) {
      Int row_sum = 0;
      for (Eigen::Index i = k; i < 10; ++i) row_sum += t(k, i);
      CHECK(s(k) == row_sum);
    }
    CHECK(s(0) == 8);
  }
}

TEST_CASE("ample lift") {
  CHECK(same_vector(ample_lift(10), IntVector::Ones(10)));
  CHECK(same_vector(ample_lift(1), IntVector::Ones(1)));
  // degree of a class against the ample lift is the coordinate sum
  const CycleClass a = iv({2, 1, 1, 0, 3, 0, 0, 0, 0, 1});
  CHECK(a.dot(ample_lift(10)) == a.sum());
}

TEST_CASE("positivity propagation on the cone, degrees up to 12") {
  const IntMatrix& t = reference_pairing_table();
  for (Int d = 3; d <= 12; ++d) {
    for (const CycleClass& a : enumerate_classes(d)) {
      for (int i = 1; i <= 10; ++i) {
        const Int rel = a.dot(relative_tangent(t, i)) - a(i - 1);
        CHECK(rel > 0);
      }
    }
  }
}
