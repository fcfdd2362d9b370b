#include <gtest/gtest.h>

#include "gradelie/grading.hpp"
#include "gradelie/harness/examples.hpp"
#include "gradelie/harness/generators.hpp"
#include "gradelie/lie_algebra.hpp"
#include "gradelie/nil.hpp"
#include "gradelie/spectral.hpp"
#include "gradelie/structures.hpp"

namespace {

using namespace gradelie;

MatSubspace subspace(std::vector<Mat> mats, std::size_t n) { return MatSubspace(mats, n); }

Mat sym_offdiag() { return Mat::unit(2, 0, 1) + Mat::unit(2, 1, 0); }
Mat h2() { return Mat::diagonal({Scalar(1), Scalar(-1)}); }

TEST(TripleSystem, Examples) {
  EXPECT_TRUE(is_lie_triple_system(subspace(harness::sl2(), 2)));
  EXPECT_TRUE(is_lie_triple_system(subspace({Mat::unit(2, 0, 1)}, 2)));
  // [b,[a,a]] stays in M but e.g. [a,[a,b]] does not; fixed by a bracket table
  // evaluated outside the library.
  const auto m = harness::e2();
  EXPECT_FALSE(is_lie_triple_system(subspace({m.a, m.b}, 3)));
}

TEST(ProductSystem, Powers) {
  const MatSubspace ab = subspace({Mat::unit(2, 0, 0), Mat::unit(2, 1, 1)}, 2);
  for (const auto& x : m_bracket_powers(ab, 2)) EXPECT_TRUE(x.is_zero());

  const auto e = harness::e1();
  const auto p2 = m_bracket_powers(subspace({e.e, e.f}, 2), 2);
  EXPECT_TRUE(Subspace::span_of_matrices(p2, 2).contains(e.g));

  const auto m = harness::e2();
  const MatSubspace mm = subspace({m.a, m.b}, 3);
  for (const auto& x : m_bracket_powers(mm, 5)) EXPECT_TRUE(mm.contains(x));
  EXPECT_TRUE(is_lie_n_product_system(mm, 5));
  EXPECT_FALSE(is_lie_n_product_system(mm, 2));
  EXPECT_FALSE(mm.contains(Mat::diagonal({Scalar(1), Scalar(-2), Scalar(1)})));
  EXPECT_EQ(bracket(m.a, m.b), Mat::diagonal({Scalar(1), Scalar(-2), Scalar(1)}));
  for (std::size_t k : {3u, 4u, 6u}) EXPECT_FALSE(is_lie_n_product_system(mm, k)) << k;
  EXPECT_THROW(is_lie_n_product_system(mm, 1), PreconditionError);

  const MatSubspace sl2 = subspace(harness::sl2(), 2);
  for (std::size_t k = 2; k < 7; ++k) EXPECT_TRUE(is_lie_n_product_system(sl2, k));
}

TEST(TripleEnvelope, Examples) {
  const LieAlgebra h = triple_envelope(subspace(harness::heisenberg(), 3));
  EXPECT_EQ(h.dim(), 3u);
  const LieAlgebra s = triple_envelope(subspace({h2(), sym_offdiag()}, 2));
  EXPECT_EQ(s.span(), lie_closure(harness::sl2(), 2).span());
  const LieAlgebra t = triple_envelope(subspace({Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)}, 2));
  EXPECT_EQ(t.span(), lie_closure(harness::sl2(), 2).span());
  const auto m = harness::e2();
  EXPECT_THROW(triple_envelope(subspace({m.a, m.b}, 3)), PreconditionError);
}

TEST(TripleToZ2, Examples) {
  const SubgradedAlgebra ab = triple_to_z2(subspace({Mat::unit(2, 0, 0), Mat::unit(2, 1, 1)}, 2));
  const FinAbGroup z2 = FinAbGroup::cyclic(2);
  EXPECT_TRUE(ab.component(z2.zero()).is_zero());

  const SubgradedAlgebra t = triple_to_z2(subspace({Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)}, 2));
  EXPECT_EQ(t.component(z2.zero()), Subspace::span_of_matrices(std::vector<Mat>{h2()}, 2));
  EXPECT_EQ(t.component(z2.element({1})).dim(), 2u);
  EXPECT_TRUE(t.is_direct());

  const SubgradedAlgebra s = triple_to_z2(subspace(harness::sl2(), 2));
  EXPECT_EQ(s.component(z2.zero()), s.component(z2.element({1})));
  EXPECT_FALSE(s.is_direct());
}

TEST(Jordan, Examples) {
  EXPECT_TRUE(is_jordan_algebra(subspace({Mat::unit(2, 0, 0), sym_offdiag(), Mat::unit(2, 1, 1)}, 2)));
  EXPECT_TRUE(is_jordan_algebra(MatSubspace(Subspace::full(9), 3)));
  EXPECT_FALSE(is_jordan_algebra(subspace({Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)}, 2)));
  const MatSubspace upper = subspace(harness::jordan_upper(), 2);
  const MatSubspace e12 = subspace({Mat::unit(2, 0, 1)}, 2);
  EXPECT_TRUE(is_jordan_algebra(upper));
  EXPECT_TRUE(is_jordan_ideal(upper, e12));
  EXPECT_FALSE(is_jordan_ideal(upper, subspace({Mat::unit(2, 0, 0)}, 2)));
  EXPECT_THROW(is_jordan_ideal(e12, upper), PreconditionError);
}

TEST(JordanToZ2, Examples) {
  const FinAbGroup z2 = FinAbGroup::cyclic(2);
  const SubgradedAlgebra d = jordan_to_z2(subspace({Mat::unit(2, 0, 0), Mat::unit(2, 1, 1)}, 2));
  EXPECT_TRUE(d.component(z2.zero()).is_zero());

  const SubgradedAlgebra n = jordan_to_z2(subspace({Mat::unit(2, 0, 1)}, 2));
  EXPECT_EQ(n.algebra().dim(), 1u);
  EXPECT_TRUE(n.component(z2.zero()).is_zero());
  EXPECT_TRUE(triangularize_solvable(n.algebra()).is_exact());

  // Symmetric 2×2: [J, J] is the antisymmetric line, so L = gl(2).
  const SubgradedAlgebra sym = jordan_to_z2(subspace({Mat::unit(2, 0, 0), sym_offdiag(), Mat::unit(2, 1, 1)}, 2));
  EXPECT_EQ(sym.algebra().dim(), 4u);
  EXPECT_EQ(sym.component(z2.zero()).dim(), 1u);
  EXPECT_TRUE(sym.is_direct());
  EXPECT_THROW(jordan_to_z2(subspace({Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)}, 2)), PreconditionError);
}

TEST(JordanIdealChain, Examples) {
  const MatSubspace upper = subspace(harness::jordan_upper(), 2);
  const MatSubspace e12 = subspace({Mat::unit(2, 0, 1)}, 2);
  const JordanIdealChain c = jordan_ideal_chain(upper, e12);
  EXPECT_EQ(c.li.span(), e12.span());
  EXPECT_EQ(c.lji.span(), e12.span());
  EXPECT_EQ(c.lj.span(), upper.span());

  const JordanIdealChain same = jordan_ideal_chain(upper, upper);
  EXPECT_EQ(same.li.span(), same.lj.span());
  EXPECT_EQ(same.lji.span(), same.lj.span());

  const JordanIdealChain zero = jordan_ideal_chain(upper, MatSubspace(std::vector<Mat>{}, 2));
  EXPECT_EQ(zero.li.dim(), 0u);
  EXPECT_EQ(zero.lji.dim(), 0u);
  EXPECT_EQ(zero.lj.span(), upper.span());

  EXPECT_THROW(jordan_ideal_chain(upper, subspace({Mat::unit(2, 0, 0)}, 2)), PreconditionError);
}

TEST(Jordan, EveryJordanAlgebraIsATripleSystem) {
  int tested = 0;
  for (std::uint64_t t = 0; t < 80; ++t) {
    harness::Rng rng(harness::substream_seed(41, t));
    const std::size_t n = 2 + t % 3;
    const MatSubspace j = t % 2 == 0 ? harness::gen_nilpotent_jordan(rng, n)
                                     : harness::jordan_closure({harness::random_small_matrix(rng, n, 0.3)}, n);
    if (j.dim() > 4) continue;
    ++tested;
    ASSERT_TRUE(is_jordan_algebra(j));
    EXPECT_TRUE(is_lie_triple_system(j)) << "trial " << t;
    const SubgradedAlgebra z = jordan_to_z2(j);
    EXPECT_NO_THROW(verify_subgrading(z.algebra(), z.group(), z.components()));
  }
  EXPECT_GT(tested, 40);
}

TEST(TripleSystem, NilpotentTriplesHaveSolvableEnvelopes) {
  for (std::uint64_t t = 0; t < 80; ++t) {
    harness::Rng rng(harness::substream_seed(42, t));
    const MatSubspace m = harness::gen_nilpotent_triple(rng, 2 + t % 3);
    ASSERT_TRUE(is_lie_triple_system(m));
    ASSERT_TRUE(is_nil_subspace(m.basis()));
    const SubgradedAlgebra z = triple_to_z2(m);
    EXPECT_NO_THROW(verify_subgrading(z.algebra(), z.group(), z.components()));
    EXPECT_EQ(z.algebra().span(), triple_envelope(m).span());
    EXPECT_TRUE(is_solvable(z.algebra())) << "trial " << t;
    EXPECT_TRUE(verify_flag(z.algebra().basis(), triangularize_solvable(z.algebra()), 1e-9).pass);
  }
}

TEST(Jordan, NilpotentJordanAlgebrasHaveSolvableEnvelopes) {
  for (std::uint64_t t = 0; t < 80; ++t) {
    harness::Rng rng(harness::substream_seed(43, t));
    const MatSubspace j = harness::gen_nilpotent_jordan(rng, 2 + t % 3);
    ASSERT_TRUE(is_nil_subspace(j.basis()));
    EXPECT_TRUE(is_solvable(jordan_to_z2(j).algebra())) << "trial " << t;
  }
}

TEST(JordanIdealChain, InclusionsHoldOnFuzzedPairs) {
  for (std::uint64_t t = 0; t < 80; ++t) {
    harness::Rng rng(harness::substream_seed(44, t));
    const auto [j, i] = harness::gen_jordan_pair(rng, 2 + t % 3);
    ASSERT_TRUE(is_jordan_ideal(j, i));
    const JordanIdealChain c = jordan_ideal_chain(j, i);
    EXPECT_TRUE(c.lji.span().contains(c.li.span()));
    EXPECT_TRUE(c.lj.span().contains(c.lji.span()));
    EXPECT_TRUE(is_ideal(c.lji, c.li.span()));
    EXPECT_TRUE(is_ideal(c.lj, c.lji.span()));
  }
}

}  // namespace
