#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gradelie/harness/examples.hpp"
#include "gradelie/harness/generators.hpp"
#include "gradelie/invariant.hpp"
#include "gradelie/lie_algebra.hpp"
#include "gradelie/numeric.hpp"
#include "gradelie/spectral.hpp"
#include "oracles.hpp"

namespace {

using namespace gradelie;

Complex to_complex(const Scalar& s) { return to_numeric(Mat::diagonal({s}))(0, 0); }

Complex eval_poly(const std::vector<Scalar>& c, Complex x) {
  Complex out = 0;
  for (std::size_t k = c.size(); k-- > 0;) out = out * x + to_complex(c[k]);
  return out;
}

Subspace span_vecs(std::vector<Vec> v, std::size_t n) { return Subspace::span_of(v, n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

TEST(Eig, Examples) {
  auto sorted_real = [](std::vector<Complex> v) {
    std::vector<double> r;
    for (auto z : v) r.push_back(z.real());
    std::sort(r.begin(), r.end());
    return r;
  };
  const auto d = eig_numeric(to_numeric(Mat::diagonal({Scalar(1), Scalar(2), Scalar(3)})));
  const auto r = sorted_real(d);
  ASSERT_EQ(r.size(), 3u);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(r[k], k + 1, 1e-9);

  const auto pa = eig_numeric(to_numeric(harness::pauli().a));
  ASSERT_EQ(pa.size(), 2u);
  EXPECT_NEAR(std::abs(pa[0] * pa[1] - Complex(1, 0)), 0, 1e-9);
  EXPECT_NEAR(std::abs(pa[0] + pa[1]), 0, 1e-9);
  EXPECT_NEAR(std::abs(std::abs(pa[0].imag()) - 1), 0, 1e-9);

  Mat n(3, 3);
  n(0, 1) = Scalar(1);
  n(1, 2) = Scalar(1);
  for (auto z : eig_numeric(to_numeric(n))) EXPECT_LT(std::abs(z), 1e-9);
}

TEST(Eig, RootsOfCharacteristicPolynomial) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 5;
    const Mat a = oracle::random_matrix(rng, n, n, -3, 3, t % 2 == 0);
    const auto ev = eig_numeric(to_numeric(a));
    ASSERT_EQ(ev.size(), n);
    const auto cp = oracle::char_poly(a);
    Complex sum = 0, prod = 1;
    for (auto z : ev) {
      sum += z;
      prod *= z;
      EXPECT_LT(std::abs(eval_poly(cp, z)), 1e-6 * std::pow(1 + std::abs(z), static_cast<double>(n)));
    }
    EXPECT_LT(std::abs(sum - to_complex(a.trace())), 1e-8);
    EXPECT_LT(std::abs(prod - to_complex(oracle::det_cofactor(a))), 1e-6 * (1 + std::abs(prod)));
    EXPECT_LE(spectral_radius(to_numeric(a)), to_numeric(a).norm() + 1e-9);
  }
}

TEST(SpectralRadius, PauliCombinations) {
  const auto p = harness::pauli();
  EXPECT_EQ(spectral_radius(to_numeric(Mat(2, 2))), 0.0);
  for (const Mat* m : {&p.a, &p.b, &p.c}) EXPECT_NEAR(spectral_radius(to_numeric(*m)), 1, 1e-9);
  const std::vector<Complex> coeffs = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}};
  const std::vector<std::pair<const Mat*, const Mat*>> pairs = {{&p.a, &p.b}, {&p.b, &p.c}, {&p.a, &p.c}};
  for (const auto& [x, y] : pairs)
    for (auto l : coeffs)
      for (auto m : coeffs) {
        const NumMat z = l * to_numeric(*x) + m * to_numeric(*y);
        EXPECT_NEAR(spectral_radius(z), std::sqrt(std::abs(l * l + m * m)), 1e-9);
      }
}

TEST(SpectralRadius, SubadditiveOnTriangularizableFamilies) {
  // x = g u g⁻¹ with u upper triangular, so the exact spectrum of x is the
  // diagonal of u. Defective eigenvalues move by about (ε‖a‖)^{1/n}.
  auto exact_radius = [](const Mat& u) {
    double r = 0;
    for (std::size_t k = 0; k < u.rows(); ++k) r = std::max(r, std::abs(to_complex(u(k, k))));
    return r;
  };
  for (std::uint64_t t = 0; t < 60; ++t) {
    harness::Rng rng(harness::substream_seed(32, t));
    const std::size_t n = 2 + t % 3;
    const auto g = harness::random_unimodular(rng, n);
    const Mat u = harness::random_upper_triangular(rng, n, t % 2 == 0);
    const Mat v = harness::random_upper_triangular(rng, n, false);
    EXPECT_LE(exact_radius(u + v), exact_radius(u) + exact_radius(v));
    for (const Mat& w : {u, v, Mat(u + v)}) {
      const NumMat a = to_numeric(g.first * w * g.second);
      const double tol = 10 * std::pow(1e-15 * std::max(1.0, a.norm()), 1.0 / static_cast<double>(n));
      EXPECT_NEAR(spectral_radius(a), exact_radius(w), tol) << "trial " << t;
    }
  }
  const NumMat e = to_numeric(Mat::unit(2, 0, 1)), f = to_numeric(Mat::unit(2, 1, 0));
  EXPECT_NEAR(spectral_radius(e + f), 1, 1e-9);
  EXPECT_LT(spectral_radius(e) + spectral_radius(f), 1e-9);
}

TEST(GeneralizedEigenspace, Examples) {
  EXPECT_EQ(generalized_eigenspace_numeric(NumMat::Identity(3, 3), 1.0).cols(), 3);
  NumMat j = NumMat::Zero(2, 2);
  j(0, 1) = 1;
  EXPECT_EQ(generalized_eigenspace_numeric(j, 0.0).cols(), 2);
  NumMat d = NumMat::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 2;
  const NumMat e = generalized_eigenspace_numeric(d, 1.0);
  ASSERT_EQ(e.cols(), 1);
  EXPECT_NEAR(std::abs(e(0, 0)), 1, 1e-9);
  EXPECT_NEAR(std::abs(e(1, 0)), 0, 1e-9);
  EXPECT_EQ(generalized_eigenspace_numeric(d, 5.0).cols(), 0);
}

TEST(GeneralizedEigenspace, DimensionsMatchMultiplicities) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 40; ++t) {
    harness::Rng hr(t);
    const std::size_t n = 2 + t % 3;
    // Repeated integer eigenvalues on the diagonal, conjugated.
    Mat u = harness::random_upper_triangular(hr, n, true);
    for (std::size_t k = 0; k < n; ++k) u(k, k) = Scalar(static_cast<std::int64_t>(k % 2));
    const auto g = harness::random_unimodular(hr, n);
    const NumMat a = to_numeric(g.first * u * g.second);
    std::size_t total = 0;
    for (int lambda = 0; lambda < 2; ++lambda) {
      const NumMat e = generalized_eigenspace_numeric(a, static_cast<double>(lambda));
      total += static_cast<std::size_t>(e.cols());
      const std::size_t mult = (n + (lambda == 0 ? 1 : 0)) / 2;
      EXPECT_EQ(static_cast<std::size_t>(e.cols()), mult) << "trial " << t;
    }
    EXPECT_EQ(total, n);
  }
}

TEST(AssocClosure, Examples) {
  EXPECT_EQ(assoc_closure_dim(std::vector<Mat>{}, 3), 1u);
  const auto p = harness::pauli();
  EXPECT_EQ(assoc_closure_dim(std::vector<Mat>{p.a, p.b, p.c}, 2), 4u);
  const std::size_t h = assoc_closure_dim(harness::heisenberg(), 3);
  EXPECT_LE(h, 6u);
  EXPECT_EQ(h, 4u);  // I, E12, E13, E23
}

TEST(AssocClosure, MonotoneAndCapped) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 4;
    std::vector<Mat> mats;
    std::size_t last = assoc_closure_dim(mats, n);
    for (int k = 0; k < 3; ++k) {
      harness::Rng hr(t * 7 + k);
      mats.push_back(harness::random_small_matrix(hr, n, 0.3));
      const std::size_t now = assoc_closure_dim(mats, n);
      EXPECT_GE(now, last);
      EXPECT_LE(now, n * n);
      last = now;
    }
  }
}

TEST(Irreducible, Examples) {
  const IrreducibilityVerdict id = decide_irreducible(std::vector<Mat>{Mat::identity(2)}, 2);
  EXPECT_FALSE(id.irreducible);
  EXPECT_EQ(id.assoc_dim, 1u);
  ASSERT_TRUE(id.witness.has_value());
  EXPECT_EQ(id.witness->dim(), 1u);

  const auto p = harness::pauli();
  const IrreducibilityVerdict pv = decide_irreducible(std::vector<Mat>{p.a, p.b, p.c}, 2);
  EXPECT_TRUE(pv.irreducible);
  EXPECT_EQ(pv.assoc_dim, 4u);
  EXPECT_FALSE(pv.witness.has_value());

  const auto m = harness::e2();
  const LieAlgebra l = lie_closure(std::vector<Mat>{m.a, m.b}, 3);
  const IrreducibilityVerdict ev = decide_irreducible(l.basis(), 3);
  EXPECT_TRUE(ev.irreducible);
  EXPECT_EQ(ev.assoc_dim, 9u);

  const IrreducibilityVerdict hv = decide_irreducible(harness::heisenberg(), 3);
  EXPECT_FALSE(hv.irreducible);
  ASSERT_TRUE(hv.witness.has_value());
  EXPECT_TRUE(is_invariant(harness::heisenberg(), *hv.witness));
}

TEST(Irreducible, SplitsOnlyOverALargerField) {
  // Eigenvalues ±√2: reducible over C, no invariant line over Q(i).
  Mat a(2, 2);
  a(0, 1) = Scalar(2);
  a(1, 0) = Scalar(1);
  try {
    decide_irreducible(std::vector<Mat>{a}, 2);
    FAIL() << "expected WitnessSearchError";
  } catch (const WitnessSearchError& e) {
    EXPECT_EQ(e.assoc_dim(), 2u);
  }
}

TEST(Irreducible, WitnessesAndProbeConsistency) {
  int irreducible = 0, reducible = 0;
  for (std::uint64_t t = 0; t < 120; ++t) {
    harness::Rng rng(harness::substream_seed(35, t));
    const std::size_t n = 2 + t % 2;
    std::vector<Mat> mats;
    if (t % 3 == 0) {
      const LieAlgebra l = harness::gen_conjugated_upper(rng, n);
      mats = l.basis();
    } else {
      for (int k = 0; k < 2; ++k) mats.push_back(harness::random_small_matrix(rng, n, 0.35));
    }
    IrreducibilityVerdict v;
    try {
      v = decide_irreducible(mats, n);
    } catch (const WitnessSearchError&) {
      continue;
    }
    EXPECT_EQ(v.irreducible, v.assoc_dim == n * n);
    if (!v.irreducible) {
      ++reducible;
      ASSERT_TRUE(v.witness.has_value());
      EXPECT_GT(v.witness->dim(), 0u);
      EXPECT_LT(v.witness->dim(), n);
      for (const auto& m : mats)
        for (const auto& w : v.witness->basis()) EXPECT_TRUE(v.witness->contains(m * w));
      continue;
    }
    ++irreducible;
    // Every nonzero probe with entries in {-1, 0, 1, i} generates C^n.
    const std::vector<Scalar> vals = {Scalar(-1), Scalar(0), Scalar(1), Scalar::i()};
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      Vec probe(n);
      for (std::size_t k = 0; k < n; ++k) probe[k] = vals[idx[k]];
      if (!is_zero(probe)) EXPECT_EQ(orbit_span(mats, probe).dim(), n);
      std::size_t k = 0;
      while (k < n && idx[k] == vals.size() - 1) idx[k++] = 0;
      if (k == n) break;
      ++idx[k];
    }
  }
  EXPECT_GT(irreducible, 20);
  EXPECT_GT(reducible, 20);
}

TEST(Triangularize, Examples) {
  const LieAlgebra diag = LieAlgebra::from_basis({Mat::unit(3, 0, 0), Mat::unit(3, 1, 1)}, 3);
  const Flag df = triangularize_solvable(diag);
  ASSERT_TRUE(df.is_exact());
  EXPECT_TRUE(verify_flag(diag.basis(), df, 0).pass);
  for (const auto& v : df.chain()) {
    // Every member of the flag is spanned by coordinate vectors.
    std::size_t coordinate = 0;
    for (std::size_t i = 0; i < 3; ++i) coordinate += v.contains(unit_vec(3, i)) ? 1 : 0;
    EXPECT_EQ(coordinate, v.dim());
  }

  const LieAlgebra h = lie_closure(harness::heisenberg(), 3);
  const Flag hf = triangularize_solvable(h);
  ASSERT_TRUE(hf.is_exact());
  const auto chain = hf.chain();
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_EQ(chain[0], span_vecs({unit_vec(3, 0)}, 3));
  EXPECT_EQ(chain[1], span_vecs({unit_vec(3, 0), unit_vec(3, 1)}, 3));
  EXPECT_TRUE(verify_flag(h.basis(), hf, 1e-9).pass);

  EXPECT_THROW(triangularize_solvable(lie_closure(harness::sl2(), 2)), PreconditionError);
}

TEST(Triangularize, IrrationalEigenvaluesGiveNumericFlag) {
  Mat a(2, 2);
  a(0, 1) = Scalar(2);
  a(1, 0) = Scalar(1);
  const LieAlgebra l = LieAlgebra::from_basis({a}, 2);
  const Flag f = triangularize_solvable(l);
  EXPECT_FALSE(f.is_exact());
  const FlagReport r = verify_flag(l.basis(), f, 1e-9);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.exact);
}

TEST(Triangularize, ConjugatedUpperFlagsVerify) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    harness::Rng rng(harness::substream_seed(36, t));
    const LieAlgebra l = harness::gen_conjugated_upper(rng, 2 + t % 3);
    const Flag f = triangularize_solvable(l);
    const FlagReport r = verify_flag(l.basis(), f, 1e-9);
    EXPECT_TRUE(r.pass) << "trial " << t;
    EXPECT_EQ(r.per_matrix.size(), l.dim());
    if (f.is_exact()) {
      const auto chain = f.chain();
      for (std::size_t k = 0; k < chain.size(); ++k) {
        EXPECT_EQ(chain[k].dim(), k + 1);
        EXPECT_TRUE(is_invariant(l.basis(), chain[k]));
      }
    }
  }
}

TEST(VerifyFlag, RejectsSl2) {
  const auto sl2 = harness::sl2();
  Mat swap(2, 2);
  swap(0, 1) = Scalar(1);
  swap(1, 0) = Scalar(1);
  EXPECT_FALSE(verify_flag(sl2, Flag::exact(Mat::identity(2)), 0).pass);
  EXPECT_FALSE(verify_flag(sl2, Flag::exact(swap), 0).pass);
  std::mt19937_64 rng(37);
  for (int t = 0; t < 30; ++t) {
    const Mat b = oracle::random_matrix(rng, 2, 2, -3, 3, true);
    if (determinant(b).is_zero()) continue;
    EXPECT_FALSE(verify_flag(sl2, Flag::exact(b), 0).pass);
    EXPECT_FALSE(verify_flag(sl2, Flag::numeric(to_numeric(b)), 1e-9).pass);
  }
  const std::vector<Mat> upper = {Mat::unit(2, 0, 0), Mat::unit(2, 0, 1)};
  const FlagReport ok = verify_flag(upper, Flag::exact(Mat::identity(2)), 0);
  EXPECT_TRUE(ok.pass);
  EXPECT_TRUE(ok.exact);
}

}  // namespace
