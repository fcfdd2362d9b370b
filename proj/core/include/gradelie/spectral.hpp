#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gradelie/lie_algebra.hpp"
#include "gradelie/numeric.hpp"

namespace gradelie {

/// Eigenvalues with multiplicity, from a complex Schur reduction with an
/// iteration budget of 100·n. Throws NumericError if the reduction does not
/// converge or its backward residual exceeds tol·max(1, ‖a‖).
std::vector<Complex> eig_numeric(const NumMat& a, double tol = 1e-9);
double spectral_radius(const NumMat& a, double tol = 1e-9);

struct EigenCluster {
  Complex center;  // mean of the members
  std::size_t multiplicity = 0;
};
/// Groups eigenvalues lying within `radius` of a cluster member
/// (single linkage), in order of first appearance.
std::vector<EigenCluster> cluster_eigenvalues(const std::vector<Complex>& values, double radius);

/// Orthonormal basis (columns) of ker (a − λ)^n, of dimension equal to the
/// number of eigenvalues within the cluster radius max(tol, 1e-5)·max(1, ‖a‖)
/// of λ. Returns an n×0 matrix when λ is not near the spectrum.
NumMat generalized_eigenspace_numeric(const NumMat& a, Complex lambda, double tol = 1e-9);

/// Basis of the unital associative algebra generated by `mats`, as words in
/// discovery order starting from the identity.
std::vector<Mat> assoc_closure(std::span<const Mat> mats, std::size_t n);
std::size_t assoc_closure_dim(std::span<const Mat> mats, std::size_t n);

struct IrreducibilityVerdict {
  bool irreducible = false;
  std::size_t assoc_dim = 0;
  std::optional<Subspace> witness;
};

/// Irreducible iff the associative closure is all of M_n. When it is not, a
/// proper invariant subspace over Q(i) is searched for and verified exactly;
/// WitnessSearchError is thrown when none is found, which happens for
/// families that split only over a larger field.
IrreducibilityVerdict decide_irreducible(std::span<const Mat> mats, std::size_t n);

/// A maximal invariant flag given by a basis: the k-th member is the span of
/// the first k columns. Exact when every eigenvalue met during construction
/// lies in Q(i); otherwise numeric with orthonormal columns.
class Flag {
 public:
  static Flag exact(Mat basis);
  static Flag numeric(NumMat basis);

  [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(numeric_.rows()); }
  [[nodiscard]] bool is_exact() const { return exact_.has_value(); }
  [[nodiscard]] const std::optional<Mat>& exact_basis() const { return exact_; }
  [[nodiscard]] const NumMat& numeric_basis() const { return numeric_; }
  /// Members of dimensions 1..n−1; exact flags only.
  [[nodiscard]] std::vector<Subspace> chain() const;

 private:
  std::optional<Mat> exact_;
  NumMat numeric_;
};

/// Simultaneous triangularization of a solvable Lie algebra by repeated
/// common eigenvectors. Throws PreconditionError if L is not solvable and
/// NumericError if a numeric step fails verification.
Flag triangularize_solvable(const LieAlgebra& lie, double tol = 1e-9);

struct FlagReport {
  bool pass = true;
  bool exact = false;
  std::vector<bool> per_matrix;
  /// Largest strictly-lower entry of basis⁻¹·a·basis, 0 in exact mode.
  std::vector<double> residuals;
};
/// Exact when the flag and the matrices are exact; otherwise each
/// strictly-lower residual is compared against tol·max(1, ‖a‖).
FlagReport verify_flag(std::span<const Mat> mats, const Flag& flag, double tol = 1e-9);

}  // namespace gradelie
