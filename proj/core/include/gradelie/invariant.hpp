#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gradelie/matrix.hpp"
#include "gradelie/subspace.hpp"

namespace gradelie {

/// Smallest subspace containing `v` and invariant under every matrix in `mats`
/// (the cyclic module A·v over the unital algebra A they generate).
Subspace orbit_span(std::span<const Mat> mats, const Vec& v);
/// Same closure seeded with a whole subspace.
Subspace orbit_span(std::span<const Mat> mats, const Subspace& seed);

/// True iff m·w ∈ w_space for every m in `mats` and every basis vector w.
bool is_invariant(std::span<const Mat> mats, const Subspace& w_space);

/// Common kernel ⋂ ker(m) over `mats`.
Subspace common_kernel(std::span<const Mat> mats, std::size_t n);
/// Sum of the column spaces of `mats`.
Subspace image_sum(std::span<const Mat> mats, std::size_t n);

/// Block-triangular split of a family along an invariant subspace W:
/// `sub` is the action on W in its echelon basis, `quotient` the induced
/// action on C^n / W.
struct BlockSplit {
  std::vector<Mat> sub;
  std::vector<Mat> quotient;
};
BlockSplit split_along(std::span<const Mat> mats, const Subspace& invariant);

/// Cheap search for a proper nonzero invariant subspace: common kernel,
/// image sum, then orbits of kernel vectors of individual matrices and of
/// standard basis vectors. Returns nullopt when none of these is proper;
/// that does not prove irreducibility.
std::optional<Subspace> find_proper_invariant_subspace(std::span<const Mat> mats, std::size_t n);

}  // namespace gradelie
