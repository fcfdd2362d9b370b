#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gradelie/harness/document.hpp"

namespace gradelie::harness {

/// Outcome of one property check on one instance. A check passes unless its
/// hypotheses hold and a conclusion fails. Failing reports carry the full
/// instance as a payload accepted by replay_check.
struct CheckReport {
  std::string check;
  std::string digest;
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::vector<std::pair<std::string, bool>> conclusions;
  bool hypothesis_met = false;
  bool pass = true;
  std::string note;
  std::optional<nlohmann::ordered_json> counterexample;
};

nlohmann::ordered_json to_json(const CheckReport& report);
std::string to_text(const CheckReport& report);

/// Associative closure of L is a proper subalgebra of M_n (Burnside).
bool is_reducible(const LieAlgebra& lie);

/// Throws PreconditionError unless the group is cyclic.
CheckReport check_lemma_prime(const SubgradedAlgebra& s);
/// Every homogeneous Engel basis element lies in the radical, and L is
/// reducible when such an element is non-scalar.
CheckReport check_cart(const SubgradedAlgebra& s);
enum class FinsubMode { kAllComponents, kCyclicZero };
CheckReport check_finsubgraded(const SubgradedAlgebra& s, FinsubMode mode);
CheckReport check_L0_triang(const SubgradedAlgebra& s);
/// Throws PreconditionError unless the group is Z₂.
CheckReport check_findim2(const SubgradedAlgebra& s);
CheckReport check_lieset(const SubgradedAlgebra& s);
CheckReport check_multiset(const SubgradedAlgebra& s);
/// Ampliation is direct, f_π is a surjective homomorphism onto L and the
/// Engel and solvability implications hold.
CheckReport check_ampliation(const SubgradedAlgebra& s);

/// Solvable L: sums of sampled nilpotent members stay nilpotent. For
/// non-solvable L the sums are reported but not asserted.
CheckReport check_crit12(const LieAlgebra& lie);
CheckReport check_cartan(const LieAlgebra& lie);
/// Solvable L: sums of sampled Engel members stay Engel.
CheckReport check_engel_sum(const LieAlgebra& lie);
/// [a, [a, b]] = 0 implies [a, b] nilpotent.
CheckReport check_kleinecke_shirokov(const Mat& a, const Mat& b);

/// Nil Lie triple system: L(M) solvable and the Z₂ construction verified.
CheckReport check_tripvolt(const MatSubspace& m);
/// Nil Jordan algebra: [J, J] + J solvable and the Z₂ construction verified.
CheckReport check_jordvolt(const MatSubspace& j);
CheckReport check_jorideals(const MatSubspace& j, const MatSubspace& i);

/// Reruns the named check on a counterexample payload.
CheckReport replay_check(std::string_view check, const nlohmann::ordered_json& payload);

/// Members of the grid {Σ c_k b_k : c_k ∈ coeffs, at most `support` nonzero}
/// over a basis, in a fixed enumeration order.
std::vector<Mat> grid_combinations(const std::vector<Mat>& basis, const std::vector<Scalar>& coeffs,
                                   std::size_t support);

}  // namespace gradelie::harness
