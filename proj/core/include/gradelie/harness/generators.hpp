#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gradelie/grading.hpp"
#include "gradelie/structures.hpp"

namespace gradelie::harness {

using Rng = std::mt19937_64;

/// Seed of the independent substream for one trial of a campaign.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial);

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);
/// Entries uniform in {lo..hi}; each entry is zeroed with probability 1 − density.
Mat random_small_matrix(Rng& rng, std::size_t n, double density = 1.0, std::int64_t lo = -2, std::int64_t hi = 2);
Mat random_upper_triangular(Rng& rng, std::size_t n, bool strict);
/// Product of elementary integer matrices; the inverse is integral too.
std::pair<Mat, Mat> random_unimodular(Rng& rng, std::size_t n);

/// Smallest subspace containing `gens` and closed under [a, [b, c]].
MatSubspace triple_closure(const std::vector<Mat>& gens, std::size_t n);
/// Smallest subspace containing `gens` and closed under a∘b.
MatSubspace jordan_closure(const std::vector<Mat>& gens, std::size_t n);
/// Smallest subspace containing `x` with J∘I ⊆ I.
MatSubspace jordan_ideal_closure(const MatSubspace& j, const Mat& x);

/// The grading of the Lie closure of homogeneous generators, with E_ij in
/// degree weights[i] − weights[j]. Throws PreconditionError if a generator
/// is not homogeneous.
SubgradedAlgebra weight_graded(std::size_t n, const FinAbGroup& group, const std::vector<GroupElem>& weights,
                               const std::vector<Mat>& generators);
/// Random weights and one to three random homogeneous generators. About a
/// third of the instances use only nonzero degrees, which keeps L₀ small.
SubgradedAlgebra gen_weight_graded(std::size_t n, const std::vector<std::int64_t>& moduli, std::uint64_t seed);

/// Lie closure of one to three random small-integer matrices, drawn from a
/// mix of dense, sparse and conjugated triangular shapes so that both
/// solvable and non-solvable closures occur.
LieAlgebra gen_random_lie(Rng& rng, std::size_t n);
/// Lie closure of conjugated upper triangular generators; always solvable.
LieAlgebra gen_conjugated_upper(Rng& rng, std::size_t n);
/// Conjugated triple closure of strictly upper triangular generators.
MatSubspace gen_nilpotent_triple(Rng& rng, std::size_t n);
/// Conjugated Jordan closure of strictly upper triangular generators.
MatSubspace gen_nilpotent_jordan(Rng& rng, std::size_t n);
/// A Jordan algebra of conjugated upper triangular matrices and the Jordan
/// ideal generated by a random element of it.
std::pair<MatSubspace, MatSubspace> gen_jordan_pair(Rng& rng, std::size_t n);
/// span{g₁N₁g₁⁻¹, g₂N₂g₂⁻¹} for random strictly upper N₁, N₂.
MatSubspace gen_nilpotent_pair_span(Rng& rng, std::size_t n);

/// A pair with [a, [a, b]] = 0: b is a random member of ker (ad a)².
std::pair<Mat, Mat> gen_double_commutant_pair(Rng& rng, std::size_t n);

}  // namespace gradelie::harness
