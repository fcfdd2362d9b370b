#pragma once

#include <span>
#include <vector>

#include "gradelie/matrix.hpp"
#include "gradelie/subspace.hpp"

namespace gradelie {

/// Exact decision whether every element of span(spanning) is nilpotent.
///
/// The decision rests on the polarized trace identities: V is nil iff
/// tr(x^k) vanishes identically on V for k = 1..n, and the coefficient of
/// t^α in tr((Σ t_i v_i)^k) is the symmetrized sum of traces of all words
/// with content α. Before polarizing, the family is refuted by exact
/// non-nilpotent witnesses when one is found among small integer
/// combinations, and split along any invariant subspace found cheaply, since
/// a block-triangular family is nil iff both diagonal blocks are.
bool is_nil_subspace(std::span<const Mat> spanning);
bool is_nil_subspace(const Subspace& v, std::size_t n);

/// The bare polarization test with no refutation or splitting shortcuts.
bool nil_by_polarization(std::span<const Mat> spanning);

/// Bilinear family {Σ s_i t_j grid[i][j]}: true iff every member is
/// nilpotent for all coefficient vectors s, t. This is the exact test for
/// "every commutator [a, b] with a ∈ A, b ∈ B is ad-nilpotent" when
/// grid[i][j] = ad [a_i, b_j].
bool is_nil_bilinear(const std::vector<std::vector<Mat>>& grid);
bool nil_bilinear_by_polarization(const std::vector<std::vector<Mat>>& grid);

}  // namespace gradelie
