#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gradelie/matrix.hpp"

namespace gradelie {

struct GroupElem {
  std::vector<std::int64_t> residues;

  auto operator<=>(const GroupElem&) const = default;
  bool operator==(const GroupElem&) const = default;
};

/// Z_{n₁} × … × Z_{n_k}. The empty product and moduli {1} are both the
/// trivial group.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<std::int64_t> moduli);
  static FinAbGroup cyclic(std::int64_t n) { return FinAbGroup({n}); }

  [[nodiscard]] const std::vector<std::int64_t>& moduli() const { return moduli_; }
  [[nodiscard]] std::size_t rank() const { return moduli_.size(); }
  [[nodiscard]] std::int64_t order() const;

  [[nodiscard]] GroupElem zero() const { return GroupElem{std::vector<std::int64_t>(rank(), 0)}; }
  /// Reduces arbitrary integers to least residues; throws DimensionError on
  /// a length mismatch.
  [[nodiscard]] GroupElem element(std::vector<std::int64_t> values) const;
  [[nodiscard]] bool is_canonical(const GroupElem& g) const;
  /// All elements in lexicographic order of residues.
  [[nodiscard]] std::vector<GroupElem> elements() const;
  /// Position of g in elements().
  [[nodiscard]] std::size_t index_of(const GroupElem& g) const;

  [[nodiscard]] GroupElem add(const GroupElem& a, const GroupElem& b) const;
  [[nodiscard]] GroupElem negate(const GroupElem& a) const;
  [[nodiscard]] GroupElem multiple(const GroupElem& a, std::int64_t k) const;
  [[nodiscard]] std::int64_t order_of(const GroupElem& a) const;

  /// Elements of the subgroup generated by `gens`, sorted.
  [[nodiscard]] std::vector<GroupElem> subgroup(const std::vector<GroupElem>& gens) const;
  /// Cyclic iff the nontrivial moduli are pairwise coprime.
  [[nodiscard]] bool is_cyclic() const;

  bool operator==(const FinAbGroup&) const = default;

 private:
  void require(const GroupElem& g) const;
  std::vector<std::int64_t> moduli_;
};

/// "1,0" for residues (1, 0); the empty string for the rank-0 group.
std::string to_key(const GroupElem& g);
/// Inverse of to_key; the result is reduced into `group`.
GroupElem parse_key(const FinAbGroup& group, std::string_view key);

/// Invariant factors d₁ | d₂ | … of the group with factors equal to 1
/// dropped, computed by Smith normal form.
std::vector<std::int64_t> invariant_factors(const FinAbGroup& group);

/// (α, β) such that the subgroup generated by α and β is not cyclic.
/// Symmetric; ordered by (index α, index β).
std::vector<std::pair<GroupElem, GroupElem>> gamma_sharp(const FinAbGroup& group);
bool in_gamma_sharp(const FinAbGroup& group, const GroupElem& a, const GroupElem& b);

/// The regular representation: π(γ) e_δ = e_{γ+δ}, indices from
/// FinAbGroup::index_of.
Mat regular_rep(const FinAbGroup& group, const GroupElem& g);
std::map<GroupElem, Mat> regular_rep(const FinAbGroup& group);

/// The projection G → G/H with G/H in invariant-factor form.
struct GroupQuotient {
  FinAbGroup quotient;
  /// images[i] is the image of the i-th standard generator of G.
  std::vector<GroupElem> images;

  [[nodiscard]] GroupElem project(const GroupElem& g) const;
};

/// Throws PreconditionError if a generator is not an element of `group`.
GroupQuotient quotient_by_subgroup(const FinAbGroup& group, const std::vector<GroupElem>& generators);

}  // namespace gradelie
