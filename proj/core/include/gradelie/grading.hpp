#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gradelie/error.hpp"
#include "gradelie/group.hpp"
#include "gradelie/lie_algebra.hpp"
#include "gradelie/numeric.hpp"

namespace gradelie {

using ComponentMap = std::map<GroupElem, Subspace>;

/// A rejected grading. For a violated grading law, `gamma`, `delta` and
/// `witness` hold the first component pair and the offending bracket.
class GradingError : public Error {
 public:
  enum class Kind { kBadKey, kOutsideAlgebra, kSumMismatch, kLawViolated };

  GradingError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  GradingError(const std::string& what, GroupElem gamma, GroupElem delta, Mat witness)
      : Error(what), kind_(Kind::kLawViolated), gamma_(std::move(gamma)), delta_(std::move(delta)),
        witness_(std::move(witness)) {}

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const std::optional<GroupElem>& gamma() const { return gamma_; }
  [[nodiscard]] const std::optional<GroupElem>& delta() const { return delta_; }
  [[nodiscard]] const std::optional<Mat>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::optional<GroupElem> gamma_, delta_;
  std::optional<Mat> witness_;
};

/// A Lie algebra written as a sum of components indexed by a finite abelian
/// group with [L_γ, L_δ] ⊆ L_{γ+δ}. Only obtainable through
/// verify_subgrading, so every instance satisfies the grading law.
class SubgradedAlgebra {
 public:
  [[nodiscard]] const LieAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] const FinAbGroup& group() const { return group_; }
  [[nodiscard]] std::size_t ambient_dim() const { return algebra_.ambient_dim(); }
  /// One entry per group element; absent degrees hold the zero subspace.
  [[nodiscard]] const ComponentMap& components() const { return components_; }
  [[nodiscard]] const Subspace& component(const GroupElem& g) const;
  [[nodiscard]] std::vector<Mat> component_basis(const GroupElem& g) const;
  /// Σ dim L_γ = dim L.
  [[nodiscard]] bool is_direct() const { return is_direct_; }

 private:
  friend SubgradedAlgebra verify_subgrading(const LieAlgebra&, const FinAbGroup&, const ComponentMap&);
  SubgradedAlgebra(LieAlgebra algebra, FinAbGroup group, ComponentMap components, bool direct)
      : algebra_(std::move(algebra)), group_(std::move(group)), components_(std::move(components)),
        is_direct_(direct) {}

  LieAlgebra algebra_;
  FinAbGroup group_;
  ComponentMap components_;
  bool is_direct_;
};

/// Checks keys, containment in L, Σ L_γ = L and the grading law on
/// component bases. Throws GradingError describing the first failure.
SubgradedAlgebra verify_subgrading(const LieAlgebra& algebra, const FinAbGroup& group, const ComponentMap& components);

/// L^π with components L_γ ⊗ π(γ) for the regular representation π, on
/// ambient dimension n·|Γ|.
struct AmpliationResult {
  SubgradedAlgebra ampliated;
  /// Per degree: (a ⊗ π(γ), a) for each basis element a of L_γ.
  std::map<GroupElem, std::vector<std::pair<Mat, Mat>>> back_map_table;
};
AmpliationResult ampliate(const SubgradedAlgebra& s);

/// f_π(Σ a_γ ⊗ π(γ)) = Σ a_γ. `u` must have size n·|Γ|.
Mat f_pi(const Mat& u, std::size_t n, const FinAbGroup& group);

struct MaptriReport {
  bool ampliated_engel = false;
  bool original_engel = false;
  bool ampliated_solvable = false;
  bool original_solvable = false;

  [[nodiscard]] bool consistent() const {
    return (!ampliated_engel || original_engel) && (!ampliated_solvable || original_solvable);
  }
};
MaptriReport check_maptri(const SubgradedAlgebra& s);

struct HomogeneousCommutator {
  GroupElem left, right, degree;
  Mat value;
};
/// Brackets of all component-basis pairs, tagged with γ, δ and γ+δ.
std::vector<HomogeneousCommutator> homogeneous_commutators(const SubgradedAlgebra& s);

/// Replaces L₀ by Σ_γ [L_γ, L_−γ] (l_prime) or by the same sum over γ ≠ 0
/// (l_double_prime). The result is verified to be an ideal of L.
SubgradedAlgebra l_prime(const SubgradedAlgebra& s);
SubgradedAlgebra l_double_prime(const SubgradedAlgebra& s);

/// Z_n-grading by the eigenspaces L_k = {x : φx = θᵏx}, θ = e^{2πi/n}, for an
/// automorphism φ given on L's basis coordinates. Exact for n ∈ {1, 2, 4};
/// otherwise numeric eigenspaces are rationalized at tol and the grading is
/// re-verified exactly. Eigenvector entries must rationalize with
/// denominators at most 1000.
SubgradedAlgebra grading_from_automorphism(const LieAlgebra& lie, const Mat& phi, std::int64_t n, double tol = 1e-9);

struct CoarseningResult {
  SubgradedAlgebra coarsened;
  GroupQuotient projection;
  bool quotient_cyclic = false;
};
/// M_α = Σ_{γ ↦ α} L_γ over G/H, H generated by `subgroup_generators`.
CoarseningResult coarsen_by_subgroup(const SubgradedAlgebra& s, const std::vector<GroupElem>& subgroup_generators);

struct EndoViolation {
  Complex lambda, mu;
  double residual = 0;
};
struct EndoReport {
  std::vector<Complex> eigenvalues;  // cluster centers
  std::size_t pairs_checked = 0;
  std::vector<EndoViolation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};
/// For an endomorphism φ of L (given on L's basis coordinates), checks
/// [E_λ, E_μ] ⊆ E_{λμ} for generalized eigenspaces, numerically within tol.
/// Throws PreconditionError if φ does not preserve brackets.
EndoReport endo_eigenspace_product_check(const LieAlgebra& lie, const Mat& phi, double tol = 1e-9);

}  // namespace gradelie
