#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gradelie/harness/document.hpp"

namespace gradelie::harness {

/// Basis a, b, c of a 2×2 algebra with [a,b] = 2c, [b,c] = 2a, [c,a] = 2b.
struct PauliMatrices {
  Mat a, b, c;
};
PauliMatrices pauli();

/// e = E₁₂, f = ½E₂₁, g = diag(½, −½): [e,f] = g, [g,e] = e, [g,f] = −f.
struct E1Matrices {
  Mat e, f, g;
};
E1Matrices e1();

/// The two 3×3 matrices spanning a Lie 5-product system of nilpotents.
struct E2Matrices {
  Mat a, b;
};
E2Matrices e2();

/// E₁₂, E₁₃, E₂₃ in gl(3).
std::vector<Mat> heisenberg();
/// E₁₂, E₂₁, diag(1, −1).
std::vector<Mat> sl2();
/// E₁₁, E₁₂, E₂₂: the upper triangular 2×2 matrices.
std::vector<Mat> jordan_upper();

const std::vector<std::string>& example_names();
/// pauli and e1 are emitted as their gradings, e2 as the Z₄-subgrading by
/// M^[i], heisenberg and sl2 as Lie generators, jordan_upper as a Jordan
/// algebra. Throws PreconditionError for unknown names.
AlgebraDocument build_example(std::string_view name);

}  // namespace gradelie::harness
