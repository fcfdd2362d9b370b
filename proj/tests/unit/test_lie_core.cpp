#include <gtest/gtest.h>

#include <random>

#include "gradelie/harness/examples.hpp"
#include "gradelie/harness/generators.hpp"
#include "gradelie/lie_algebra.hpp"
#include "gradelie/nil.hpp"
#include "oracles.hpp"

namespace {

using namespace gradelie;

LieAlgebra algebra(const std::vector<Mat>& gens, std::size_t n) { return lie_closure(gens, n); }

// Dimension of the bracket closure by brute force: bracket every pair of
// the independent list until no bracket is new.
std::size_t closure_dim_oracle(const std::vector<Mat>& gens, std::size_t n) {
  auto rank_of = [n](const std::vector<Mat>& ms) {
    std::vector<Vec> rows;
    for (const auto& m : ms) rows.push_back(flatten(m));
    return rows.empty() ? std::size_t{0} : rank(Mat::from_rows(rows, n * n));
  };
  std::vector<Mat> mats;
  for (const auto& g : gens) {
    mats.push_back(g);
    if (rank_of(mats) < mats.size()) mats.pop_back();
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < mats.size(); ++i)
      for (std::size_t j = i + 1; j < mats.size(); ++j) {
        mats.push_back(bracket(mats[i], mats[j]));
        if (rank_of(mats) < mats.size()) {
          mats.pop_back();
        } else {
          grew = true;
        }
      }
  }
  return mats.size();
}

// Every grid point with coefficients in {-2..2}. A nonzero polynomial of
// degree at most 4 in each variable cannot vanish on five points per
// coordinate, so for n ≤ 4 this decides nilness exactly.
bool nil_by_grid(const std::vector<Mat>& basis) {
  const std::size_t d = basis.size();
  if (d == 0) return true;
  const std::size_t n = basis.front().rows();
  std::vector<int> c(d, -2);
  while (true) {
    Mat m(n, n);
    for (std::size_t k = 0; k < d; ++k) m += Scalar(c[k]) * basis[k];
    if (!oracle::nilpotent_by_char_poly(m)) return false;
    std::size_t k = 0;
    while (k < d && c[k] == 2) c[k++] = -2;
    if (k == d) return true;
    ++c[k];
  }
}

TEST(LieClosure, Examples) {
  EXPECT_EQ(algebra({Mat(2, 2)}, 2).dim(), 0u);
  const auto p = harness::pauli();
  const LieAlgebra su = algebra({p.a, p.b}, 2);
  EXPECT_EQ(su.dim(), 3u);
  EXPECT_TRUE(su.contains(p.c));
  const auto m = harness::e2();
  const LieAlgebra l = algebra({m.a, m.b}, 3);
  EXPECT_EQ(l.dim(), closure_dim_oracle({m.a, m.b}, 3));
  EXPECT_EQ(l.dim(), 8u);
}

TEST(LieClosure, AgreesWithBruteForceAndIsIdempotent) {
  for (std::uint64_t t = 0; t < 60; ++t) {
    harness::Rng rng(t);
    const std::size_t n = 2 + t % 3;
    std::vector<Mat> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(harness::random_small_matrix(rng, n, 0.4));
    const LieAlgebra l = algebra(gens, n);
    EXPECT_EQ(l.dim(), closure_dim_oracle(gens, n));
    EXPECT_EQ(algebra(l.basis(), n).span(), l.span());
  }
}

TEST(LieClosure, JacobiOnBasisTriples) {
  harness::Rng rng(3);
  const LieAlgebra l = harness::gen_random_lie(rng, 3);
  const auto& b = l.basis();
  for (const auto& x : b)
    for (const auto& y : b)
      for (const auto& z : b) {
        const Mat j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        EXPECT_TRUE(j.is_zero());
      }
}

TEST(AdMatrix, Examples) {
  const auto e = harness::e1();
  const LieAlgebra l = LieAlgebra::from_basis({e.e, e.f, e.g}, 2);
  Mat diag(3, 3);
  diag(0, 0) = Scalar(1);
  diag(1, 1) = Scalar(-1);
  EXPECT_EQ(ad_matrix(l, e.g), diag);
  // [e,e] = 0, [e,f] = g, [e,g] = −e.
  Mat ad_e(3, 3);
  ad_e(2, 1) = Scalar(1);
  ad_e(0, 2) = Scalar(-1);
  EXPECT_EQ(ad_matrix(l, e.e), ad_e);
  const LieAlgebra h = algebra(harness::heisenberg(), 3);
  EXPECT_TRUE(ad_matrix(h, Mat::unit(3, 0, 2)).is_zero());
  EXPECT_THROW(ad_matrix(h, Mat::unit(3, 1, 0)), NotNormalizingError);
}

TEST(Series, Examples) {
  const LieAlgebra abelian = algebra({Mat::unit(3, 0, 0), Mat::unit(3, 1, 1)}, 3);
  EXPECT_EQ(derived_series(abelian).dims(), (std::vector<std::size_t>{2, 0, 0}));
  const LieAlgebra h = algebra(harness::heisenberg(), 3);
  const SeriesReport lc = lower_central_series(h);
  EXPECT_EQ(lc.dims(), (std::vector<std::size_t>{3, 1, 0, 0}));
  EXPECT_TRUE(lc.stabilized);
  EXPECT_EQ(lc.terminal_dim, 0u);
  const LieAlgebra sl2 = algebra(harness::sl2(), 2);
  EXPECT_EQ(derived_series(sl2).dims(), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(derived_series(sl2).terminal_dim, 3u);
}

TEST(Series, Predicates) {
  const LieAlgebra zero = LieAlgebra::zero(3);
  EXPECT_TRUE(is_solvable(zero));
  EXPECT_TRUE(is_nilpotent_lie(zero));
  const LieAlgebra h = algebra(harness::heisenberg(), 3);
  EXPECT_TRUE(is_solvable(h));
  EXPECT_TRUE(is_nilpotent_lie(h));
  const LieAlgebra sl2 = algebra(harness::sl2(), 2);
  EXPECT_FALSE(is_solvable(sl2));
  EXPECT_FALSE(is_nilpotent_lie(sl2));
  // Upper triangular 2×2: solvable, not nilpotent.
  const LieAlgebra b = algebra({Mat::unit(2, 0, 0), Mat::unit(2, 0, 1), Mat::unit(2, 1, 1)}, 2);
  EXPECT_TRUE(is_solvable(b));
  EXPECT_FALSE(is_nilpotent_lie(b));
  EXPECT_EQ(is_engel_algebra(b), is_nilpotent_lie(b));
}

TEST(Killing, Examples) {
  const LieAlgebra abelian = algebra({Mat::unit(2, 0, 0), Mat::unit(2, 1, 1)}, 2);
  EXPECT_TRUE(killing_form(abelian).gram.is_zero());
  const auto e = harness::e1();
  const LieAlgebra l = LieAlgebra::from_basis({e.e, e.f, e.g}, 2);
  EXPECT_EQ(killing_pairing(l, e.e, e.f), Scalar(2));
  EXPECT_EQ(killing_pairing(l, e.g, e.g), Scalar(2));
  EXPECT_EQ(killing_pairing(l, e.e, e.e), Scalar(0));
  const Mat gram = killing_form(algebra(harness::sl2(), 2)).gram;
  EXPECT_EQ(gram, gram.transpose());
  EXPECT_FALSE(determinant(gram).is_zero());
}

TEST(Cartan, Examples) {
  EXPECT_TRUE(cartan_test(algebra({Mat::unit(2, 0, 0), Mat::unit(2, 1, 1)}, 2)));
  EXPECT_TRUE(cartan_test(algebra(harness::heisenberg(), 3)));
  EXPECT_EQ((Mat::unit(2, 0, 1) * Mat::unit(2, 1, 0)).trace(), Scalar(1));
  EXPECT_FALSE(cartan_test(algebra(harness::sl2(), 2)));
}

TEST(Cartan, EqualsSolvabilityUpToDimensionFive) {
  int solvable = 0;
  for (std::uint64_t t = 0; t < 150; ++t) {
    harness::Rng rng(harness::substream_seed(99, t));
    const std::size_t n = 2 + t % 4;
    const LieAlgebra l = harness::gen_random_lie(rng, n);
    const bool s = is_solvable(l);
    solvable += s ? 1 : 0;
    EXPECT_EQ(cartan_test(l), s) << "trial " << t;
  }
  EXPECT_GT(solvable, 20);
  EXPECT_LT(solvable, 150);
}

TEST(Engel, Examples) {
  const auto e = harness::e1();
  const LieAlgebra l = LieAlgebra::from_basis({e.e, e.f, e.g}, 2);
  EXPECT_FALSE(is_engel_element(l, e.g));
  EXPECT_TRUE(is_engel_element(l, e.e));
  const LieAlgebra h = algebra(harness::heisenberg(), 3);
  EXPECT_TRUE(is_engel_element(h, Mat::unit(3, 0, 2)));
  const auto m = harness::e2();
  const LieAlgebra lm = algebra({m.a, m.b}, 3);
  EXPECT_TRUE(is_engel_element(lm, m.a));
  EXPECT_TRUE(oracle::nilpotent_by_char_poly(ad_matrix(lm, m.a)));
}

TEST(NilSubspace, Examples) {
  EXPECT_TRUE(is_nil_subspace(std::vector<Mat>{Mat::unit(3, 0, 1), Mat::unit(3, 0, 2), Mat::unit(3, 1, 2)}));
  EXPECT_FALSE(is_nil_subspace(std::vector<Mat>{Mat::identity(3)}));
  const auto m = harness::e2();
  EXPECT_TRUE(is_nil_subspace(std::vector<Mat>{m.a, m.b}));
  EXPECT_TRUE(nil_by_polarization(std::vector<Mat>{m.a, m.b}));
  EXPECT_TRUE(is_nil_subspace(std::vector<Mat>{}));
  // Nilpotent generators whose span is not nil.
  EXPECT_FALSE(is_nil_subspace(std::vector<Mat>{Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)}));
}

TEST(NilSubspace, AgreesWithGridOracle) {
  int nil = 0;
  for (std::uint64_t t = 0; t < 120; ++t) {
    harness::Rng rng(harness::substream_seed(5, t));
    const std::size_t n = 2 + t % 3;
    const std::size_t d = 1 + t % 3;
    std::vector<Mat> mats;
    const auto g = harness::random_unimodular(rng, n);
    for (std::size_t k = 0; k < d; ++k) {
      Mat x = harness::random_upper_triangular(rng, n, true);
      if (t % 4 == 1) x = harness::random_small_matrix(rng, n, 0.3);
      if (t % 4 == 2 && k == 0) x = x.transpose();
      mats.push_back(g.first * x * g.second);
    }
    const bool expected = nil_by_grid(mats);
    nil += expected ? 1 : 0;
    EXPECT_EQ(is_nil_subspace(mats), expected) << "trial " << t;
    EXPECT_EQ(nil_by_polarization(mats), expected) << "trial " << t;
  }
  EXPECT_GT(nil, 30);
  EXPECT_LT(nil, 100);
}

TEST(NilBilinear, AgreesWithGridOracle) {
  for (std::uint64_t t = 0; t < 60; ++t) {
    harness::Rng rng(harness::substream_seed(6, t));
    const std::size_t n = 2 + t % 2;
    const auto g = harness::random_unimodular(rng, n);
    std::vector<std::vector<Mat>> grid(2, std::vector<Mat>(2));
    for (auto& row : grid)
      for (auto& m : row) {
        m = harness::random_upper_triangular(rng, n, t % 3 != 0);
        m = g.first * m * g.second;
      }
    // Σ s_i t_j grid[i][j] over s, t ∈ {-2..2}²; per-variable degree ≤ n < 5.
    bool expected = true;
    for (int s0 = -2; s0 <= 2 && expected; ++s0)
      for (int s1 = -2; s1 <= 2 && expected; ++s1)
        for (int t0 = -2; t0 <= 2 && expected; ++t0)
          for (int t1 = -2; t1 <= 2 && expected; ++t1) {
            const Mat m = Scalar(s0 * t0) * grid[0][0] + Scalar(s0 * t1) * grid[0][1] + Scalar(s1 * t0) * grid[1][0] +
                          Scalar(s1 * t1) * grid[1][1];
            expected = oracle::nilpotent_by_char_poly(m);
          }
    EXPECT_EQ(is_nil_bilinear(grid), expected) << "trial " << t;
    EXPECT_EQ(nil_bilinear_by_polarization(grid), expected) << "trial " << t;
  }
}

TEST(TraceOrthogonal, Examples) {
  const LieAlgebra nil = algebra({Mat::unit(3, 0, 1), Mat::unit(3, 0, 2)}, 3);
  EXPECT_EQ(trace_orthogonal_ideal(nil), nil.span());
  EXPECT_TRUE(trace_orthogonal_ideal(algebra(harness::sl2(), 2)).is_zero());
  const LieAlgebra h = algebra(harness::heisenberg(), 3);
  EXPECT_EQ(trace_orthogonal_ideal(h), h.span());
}

TEST(TraceOrthogonal, IsIdealWithVanishingTraces) {
  for (std::uint64_t t = 0; t < 80; ++t) {
    harness::Rng rng(harness::substream_seed(7, t));
    const LieAlgebra l = harness::gen_random_lie(rng, 2 + t % 3);
    const Subspace ideal = trace_orthogonal_ideal(l);
    EXPECT_TRUE(is_ideal(l, ideal));
    const auto mats = ideal.basis_matrices(l.ambient_dim());
    for (const auto& x : mats)
      for (const auto& y : mats) EXPECT_TRUE(trace_of_product(x, y).is_zero());
  }
}

TEST(Radical, SolvableIdealContainingKillingOrthogonal) {
  for (std::uint64_t t = 0; t < 80; ++t) {
    harness::Rng rng(harness::substream_seed(8, t));
    const LieAlgebra l = harness::gen_random_lie(rng, 2 + t % 3);
    const std::size_t n = l.ambient_dim();
    const Subspace rad = solvable_radical(l);
    EXPECT_TRUE(is_ideal(l, rad));
    EXPECT_TRUE(is_solvable(LieAlgebra::from_subspace(rad, n)));
    EXPECT_TRUE(rad.contains(killing_orthogonal_ideal(l)));
    if (is_solvable(l)) EXPECT_EQ(rad, l.span());
  }
  EXPECT_TRUE(solvable_radical(algebra(harness::sl2(), 2)).is_zero());
}

TEST(Ideals, CenterAndScalars) {
  const LieAlgebra h = algebra(harness::heisenberg(), 3);
  EXPECT_TRUE(is_ideal(h, h.span()));
  EXPECT_EQ(center(h), Subspace::span_of_matrices(std::vector<Mat>{Mat::unit(3, 0, 2)}, 3));
  EXPECT_TRUE(is_scalar_set(Subspace::span_of_matrices(std::vector<Mat>{Mat::identity(3)}, 3), 3));
  const Mat d = Mat::diagonal({Scalar(1), Scalar(-2), Scalar(1)});
  EXPECT_FALSE(is_scalar_set(Subspace::span_of_matrices(std::vector<Mat>{d}, 3), 3));
  EXPECT_THROW(is_ideal(h, Subspace::span_of_matrices(std::vector<Mat>{Mat::unit(3, 1, 0)}, 3)), PreconditionError);
}

TEST(Products, JordanAndTriple) {
  const auto e = harness::e1();
  EXPECT_TRUE(jordan_product(e.e, Mat(2, 2)).is_zero());
  EXPECT_EQ(jordan_product(e.e, e.f), Scalar(Rational(1, 2)) * Mat::identity(2));
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const Mat a = oracle::random_matrix(rng, 3, 3, -2, 2, true);
    const Mat b = oracle::random_matrix(rng, 3, 3, -2, 2, true);
    const Mat c = oracle::random_matrix(rng, 3, 3, -2, 2, true);
    EXPECT_EQ(triple_product(a, b, c), jordan_product(jordan_product(a, b), c) - jordan_product(jordan_product(a, c), b));
  }
}

TEST(Solvable, DerivedAlgebraIsNil) {
  for (std::uint64_t t = 0; t < 60; ++t) {
    harness::Rng rng(harness::substream_seed(9, t));
    const LieAlgebra l = harness::gen_conjugated_upper(rng, 2 + t % 3);
    const Subspace d = commutator_subspace(l.span(), l.span(), l.ambient_dim());
    EXPECT_TRUE(is_nil_subspace(d, l.ambient_dim()));
  }
}

TEST(EngelSum, Examples) {
  const LieAlgebra h = algebra(harness::heisenberg(), 3);
  EXPECT_TRUE(engel_sum_check(h, Mat(3, 3), Mat(3, 3)));
  EXPECT_TRUE(engel_sum_check(h, Mat::unit(3, 0, 1), Mat::unit(3, 1, 2)));
  const LieAlgebra sl2 = algebra(harness::sl2(), 2);
  EXPECT_THROW(engel_sum_check(sl2, Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)), PreconditionError);
}

TEST(KleineckeShirokov, DoubleCommutantImpliesNilpotent) {
  int nontrivial = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    harness::Rng rng(harness::substream_seed(10, t));
    const auto [a, b] = harness::gen_double_commutant_pair(rng, 2 + t % 3);
    ASSERT_TRUE(bracket(a, bracket(a, b)).is_zero());
    const Mat ab = bracket(a, b);
    nontrivial += ab.is_zero() ? 0 : 1;
    EXPECT_TRUE(oracle::nilpotent_by_char_poly(ab));
  }
  EXPECT_GT(nontrivial, 20);
}

}  // namespace
