#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "gradelie/error.hpp"
#include "gradelie/harness/examples.hpp"
#include "gradelie/numeric.hpp"
#include "gradelie/subspace.hpp"
#include "oracles.hpp"

namespace {

using namespace gradelie;

Vec vec(std::initializer_list<std::int64_t> xs) {
  Vec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

TEST(Rational, LowestTermsAndSign) {
  const Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, PromotesPastSixtyFourBits) {
  Rational big(std::numeric_limits<std::int64_t>::max());
  const Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq / big, big);
  EXPECT_TRUE((sq / big).is_small());
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
}

TEST(Rational, ParseGrammar) {
  EXPECT_EQ(Rational::parse("-7/3"), Rational(-7, 3));
  EXPECT_EQ(Rational::parse("+5"), Rational(5));
  EXPECT_THROW(Rational::parse("2/4", true), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Gaussian, ParseAndPrintRoundTrip) {
  for (const char* text : {"0", "1/2", "-3i", "1/2+1/3i", "-1-1i", "2/3-5/7i", "i"}) {
    SCOPED_TRACE(text);
    if (std::string(text) == "i") {
      EXPECT_THROW(Scalar::parse(text), std::invalid_argument);
      continue;
    }
    const Scalar z = Scalar::parse(text);
    EXPECT_EQ(Scalar::parse(z.to_string()), z);
  }
  EXPECT_EQ(Scalar::parse("1i"), Scalar::i());
  EXPECT_THROW(Scalar::parse("2/4i"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("-1-i"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("0.5"), std::invalid_argument);
}

TEST(Gaussian, FieldOperations) {
  const Scalar i = Scalar::i();
  EXPECT_EQ(i * i, Scalar(-1));
  const Scalar z(Rational(3), Rational(-4));
  EXPECT_EQ(z * z.conj(), Scalar(25));
  EXPECT_EQ(z / z, Scalar(1));
  EXPECT_EQ((Scalar(1) + i) / (Scalar(1) - i), i);
  EXPECT_THROW(z / Scalar(0), std::domain_error);
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize({}, 3).dim(), 0u);
  const std::vector<Vec> swapped = {vec({0, 1}), vec({1, 0})};
  const Subspace full = canonicalize(swapped, 2);
  EXPECT_TRUE(full.is_full());
  EXPECT_EQ(full.basis_rows(), Mat::identity(2));
  const std::vector<Vec> three = {vec({1, 1, 0}), vec({2, 2, 0}), vec({0, 0, 3})};
  const Subspace s = canonicalize(three, 3);
  ASSERT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.basis()[0], vec({1, 1, 0}));
  EXPECT_EQ(s.basis()[1], vec({0, 0, 1}));
  EXPECT_THROW(canonicalize(std::vector<Vec>{vec({1, 2})}, 3), DimensionError);
}

TEST(Canonicalize, ProjectionAndOrderIndependence) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<Vec> vs;
    for (int k = 0; k < 3; ++k) vs.push_back(oracle::random_matrix(rng, 1, 5, -2, 2, t % 2 == 1).row(0));
    const Subspace s = canonicalize(vs, 5);
    EXPECT_EQ(canonicalize(s.basis(), 5), s);
    std::vector<Vec> reversed(vs.rbegin(), vs.rend());
    EXPECT_EQ(canonicalize(reversed, 5), s);
    for (const auto& p : s.pivots()) EXPECT_TRUE(s.basis()[&p - s.pivots().data()][p].is_one());
  }
}

TEST(SubspaceSum, Examples) {
  const Subspace a = Subspace::span_of(std::vector<Vec>{vec({1, 1})}, 2);
  const Subspace b = Subspace::span_of(std::vector<Vec>{vec({1, -1})}, 2);
  EXPECT_TRUE(subspace_sum(a, b).is_full());
  EXPECT_EQ(subspace_sum(a, Subspace::zero(2)), a);
  EXPECT_THROW(subspace_sum(a, Subspace::zero(3)), DimensionError);
}

TEST(SubspaceIntersect, Examples) {
  const Subspace e1 = Subspace::span_of(std::vector<Vec>{vec({1, 0})}, 2);
  const Subspace e2 = Subspace::span_of(std::vector<Vec>{vec({0, 1})}, 2);
  const Subspace diag = Subspace::span_of(std::vector<Vec>{vec({1, 1})}, 2);
  EXPECT_TRUE(subspace_intersect(e1, e2).is_zero());
  EXPECT_EQ(subspace_intersect(Subspace::full(2), diag), diag);
  EXPECT_EQ(subspace_intersect(diag, diag), diag);
}

TEST(SubspaceDimensions, ModularIdentity) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t ka = rng() % 4, kb = rng() % 4;
    std::vector<Vec> va, vb;
    // Shared vectors make the intersection nontrivial in some trials.
    const Vec shared = oracle::random_matrix(rng, 1, 5, -1, 1, true).row(0);
    for (std::size_t k = 0; k < ka; ++k) va.push_back(oracle::random_matrix(rng, 1, 5, -1, 1, true).row(0));
    for (std::size_t k = 0; k < kb; ++k) vb.push_back(oracle::random_matrix(rng, 1, 5, -1, 1, true).row(0));
    if (t % 2 == 0) {
      va.push_back(shared);
      vb.push_back(shared);
    }
    const Subspace a = canonicalize(va, 5), b = canonicalize(vb, 5);
    const Subspace sum = subspace_sum(a, b), meet = subspace_intersect(a, b);
    EXPECT_EQ(sum.dim() + meet.dim(), a.dim() + b.dim());
    for (const auto& v : meet.basis()) {
      EXPECT_TRUE(a.contains(v));
      EXPECT_TRUE(b.contains(v));
    }
  }
}

TEST(SubspaceContains, Examples) {
  const Subspace x = Subspace::span_of(std::vector<Vec>{vec({1, 0})}, 2);
  EXPECT_TRUE(subspace_contains(x, vec({0, 0})));
  EXPECT_FALSE(subspace_contains(x, vec({1, 1})));
  const Subspace ones = Subspace::span_of(std::vector<Vec>{vec({1, 1, 1})}, 3);
  EXPECT_TRUE(subspace_contains(ones, vec({3, 3, 3})));
  EXPECT_THROW((void)subspace_contains(ones, vec({1, 1})), DimensionError);
}

TEST(Bracket, PaperExamples) {
  const auto p = harness::pauli();
  EXPECT_TRUE(bracket(p.a, p.a).is_zero());
  EXPECT_EQ(bracket(p.a, p.b), Scalar(2) * p.c);
  EXPECT_EQ(bracket(p.b, p.c), Scalar(2) * p.a);
  EXPECT_EQ(bracket(p.c, p.a), Scalar(2) * p.b);
  const auto e = harness::e1();
  EXPECT_EQ(bracket(e.g, e.e), e.e);
  EXPECT_EQ(bracket(e.e, e.f), e.g);
  EXPECT_EQ(bracket(e.g, e.f), -e.f);
  EXPECT_THROW(bracket(Mat::identity(2), Mat::identity(3)), DimensionError);
}

TEST(Bracket, TraceVanishes) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const Mat a = oracle::random_matrix(rng, n, n, -3, 3, true);
    const Mat b = oracle::random_matrix(rng, n, n, -3, 3, true);
    EXPECT_TRUE(bracket(a, b).trace().is_zero());
    EXPECT_EQ(trace_of_product(a, b), (a * b).trace());
  }
}

TEST(Nilpotent, Examples) {
  Mat upper(3, 3);
  upper(0, 1) = Scalar(4);
  upper(0, 2) = Scalar(-1);
  upper(1, 2) = Scalar::i();
  EXPECT_TRUE(is_nilpotent_exact(upper));
  EXPECT_FALSE(is_nilpotent_exact(Mat::identity(3)));
  const auto m = harness::e2();
  const Mat s = m.a + m.b;
  EXPECT_TRUE(is_nilpotent_exact(s));
  EXPECT_TRUE(power(s, 3).is_zero());
}

TEST(Nilpotent, AgreesWithCharacteristicPolynomial) {
  std::mt19937_64 rng(14);
  int nilpotent = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 5;
    Mat a = oracle::random_matrix(rng, n, n, -2, 2, t % 3 == 0);
    if (t % 2 == 0) {
      // Conjugate a strictly upper matrix so half the sample is nilpotent.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) a(i, j) = Scalar(0);
      Mat g = Mat::identity(n);
      for (std::size_t i = 0; i + 1 < n; ++i) g(i + 1, i) = Scalar(static_cast<std::int64_t>(rng() % 3));
      a = g * a * *inverse(g);
    }
    const bool expected = oracle::nilpotent_by_char_poly(a);
    nilpotent += expected ? 1 : 0;
    EXPECT_EQ(is_nilpotent_exact(a), expected);
  }
  EXPECT_GT(nilpotent, 100);
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const Mat a = oracle::random_matrix(rng, n, n, -3, 3, t % 2 == 0);
    const Scalar det = determinant(a);
    EXPECT_EQ(det, oracle::det_cofactor(a));
    EXPECT_EQ(det, (n % 2 == 0 ? Scalar(1) : Scalar(-1)) * oracle::char_poly(a)[0]);
    const auto inv = inverse(a);
    EXPECT_EQ(inv.has_value(), !det.is_zero());
    if (inv) EXPECT_EQ(a * *inv, Mat::identity(n));
  }
}

TEST(Kernel, RankNullity) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    const Mat m = oracle::random_matrix(rng, r, c, -1, 1);
    const auto ker = kernel(m);
    EXPECT_EQ(ker.size() + rank(m), c);
    for (const auto& v : ker) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(Flatten, Examples) {
  EXPECT_EQ(flatten(Mat::identity(2)), vec({1, 0, 0, 1}));
  const Scalar i = Scalar::i();
  EXPECT_EQ(flatten(harness::pauli().c), (Vec{-i, Scalar(0), Scalar(0), i}));
  std::mt19937_64 rng(17);
  const Mat a = oracle::random_matrix(rng, 3, 3, -2, 2, true);
  EXPECT_EQ(unflatten(flatten(a), 3), a);
  EXPECT_THROW(unflatten(vec({1, 2, 3}), 2), DimensionError);
}

TEST(ToNumeric, Examples) {
  Mat m(1, 3);
  m(0, 1) = Scalar(Rational(1, 2), Rational(1, 2));
  m(0, 2) = Scalar(Rational(1, 3));
  const NumMat x = to_numeric(m);
  EXPECT_EQ(x(0, 0), Complex(0, 0));
  EXPECT_EQ(x(0, 1), Complex(0.5, 0.5));
  EXPECT_EQ(x(0, 2).real(), 1.0 / 3.0);
}

TEST(ToNumeric, OverflowAndNonFinite) {
  Rational huge(1);
  for (int k = 0; k < 40; ++k) huge *= Rational(std::numeric_limits<std::int64_t>::max());
  Mat m(1, 1);
  m(0, 0) = Scalar(huge);
  EXPECT_THROW(to_numeric(m), std::overflow_error);
  NumMat bad = NumMat::Zero(1, 1);
  bad(0, 0) = Complex(std::numeric_limits<double>::quiet_NaN(), 0);
  EXPECT_THROW(require_finite(bad), NumericError);
}

TEST(Rationalize, RecoversSmallFractions) {
  EXPECT_EQ(rationalize(0.75), Rational(3, 4));
  EXPECT_EQ(rationalize(-1.0 / 3.0), Rational(-1, 3));
  EXPECT_FALSE(rationalize(3.14159265358979, 1e-12, 100).has_value());
  EXPECT_EQ(rationalize(Complex(0.5, -2.0)), Scalar(Rational(1, 2), Rational(-2)));
}

TEST(NumericKernel, MatchesExactNullity) {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 30; ++t) {
    const Mat m = oracle::random_matrix(rng, 3, 5, -2, 2);
    const NumMat ker = numeric_kernel(to_numeric(m), 1e-9);
    EXPECT_EQ(static_cast<std::size_t>(ker.cols()), kernel(m).size());
    EXPECT_LT((to_numeric(m) * ker).norm(), 1e-9);
  }
}

}  // namespace
