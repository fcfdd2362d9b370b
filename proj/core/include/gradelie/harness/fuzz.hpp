#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gradelie/harness/checks.hpp"
#include "gradelie/harness/generators.hpp"

namespace gradelie::harness {

struct CampaignOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t dim_max = 4;
};

struct CampaignResult {
  std::string lemma;
  std::size_t trials = 0;
  std::size_t hypothesis_met = 0;
  std::size_t passed = 0;
  /// Failing reports in trial order.
  std::vector<CheckReport> violations;
  std::string note;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Names accepted by run_campaign.
const std::vector<std::string>& campaign_lemmas();

/// Cyclic moduli {2}..{5} when `cyclic_only`, otherwise a mix that also
/// contains non-cyclic groups; n in [2, dim_max].
SubgradedAlgebra campaign_graded_instance(std::uint64_t seed, std::uint64_t trial, std::size_t dim_max,
                                          bool cyclic_only);

/// Runs `trials` independent checks; trial t draws its instance from
/// substream_seed(seed, t), so results depend only on the options.
/// "n3-search" looks for Z₃-subgraded algebras generated by a nil
/// component L₁ and records their reducibility without asserting anything.
CampaignResult run_campaign(std::string_view lemma, const CampaignOptions& options);

nlohmann::ordered_json to_json(const CampaignResult& result);

}  // namespace gradelie::harness
