#include "gradelie/harness/fuzz.hpp"

#include <functional>

#include "gradelie/nil.hpp"

namespace gradelie::harness {
namespace {

const std::vector<std::vector<std::int64_t>> kCyclicModuli = {{2}, {3}, {4}, {5}};
const std::vector<std::vector<std::int64_t>> kMixedModuli = {{2}, {3}, {4}, {5}, {2, 2}, {2, 3}, {3, 3}, {2, 4}};

std::size_t pick_dim(Rng& rng, std::size_t dim_max) {
  const auto hi = static_cast<std::int64_t>(std::max<std::size_t>(dim_max, 2));
  return static_cast<std::size_t>(uniform(rng, 2, hi));
}

using TrialFn = std::function<CheckReport(std::uint64_t trial_seed, std::uint64_t trial)>;

CampaignResult drive(std::string_view lemma, const CampaignOptions& o, const TrialFn& fn) {
  CampaignResult result;
  result.lemma = std::string(lemma);
  result.trials = o.trials;
  for (std::size_t t = 0; t < o.trials; ++t) {
    CheckReport r = fn(substream_seed(o.seed, t), t);
    if (r.hypothesis_met) ++result.hypothesis_met;
    if (r.pass)
      ++result.passed;
    else
      result.violations.push_back(std::move(r));
  }
  return result;
}

// Z₃-subgraded algebras generated by degree-one elements for integer
// weights mod 3. L₁ is then a Lie 4-product system; the search records
// those with L₁ nil and whether L is reducible.
CampaignResult n3_search(const CampaignOptions& o) {
  CampaignResult result;
  result.lemma = "n3-search";
  result.trials = o.trials;
  const FinAbGroup z3 = FinAbGroup::cyclic(3);
  std::size_t found = 0, irreducible = 0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    Rng rng(substream_seed(o.seed, t));
    const std::size_t n = pick_dim(rng, o.dim_max);
    std::vector<GroupElem> weights;
    for (std::size_t i = 0; i < n; ++i) weights.push_back(z3.element({uniform(rng, 0, 2)}));
    const GroupElem one = z3.element({1});
    std::vector<Mat> gens;
    const auto count = uniform(rng, 1, 3);
    for (std::int64_t k = 0; k < count; ++k) {
      Mat m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (z3.add(weights[i], z3.negate(weights[j])) == one) m(i, j) = Scalar(uniform(rng, -2, 2));
      if (!m.is_zero()) gens.push_back(std::move(m));
    }
    ++result.passed;
    if (gens.empty()) continue;
    const SubgradedAlgebra s = weight_graded(n, z3, weights, gens);
    const MatSubspace l1(s.component(one), n);
    if (!is_nil_subspace(l1.basis())) continue;
    ++found;
    if (!is_reducible(s.algebra())) ++irreducible;
  }
  result.hypothesis_met = found;
  result.note = std::to_string(found) + " nil degree-one component(s) found, " + std::to_string(irreducible) +
                " generating an irreducible algebra";
  return result;
}

}  // namespace

const std::vector<std::string>& campaign_lemmas() {
  static const std::vector<std::string> kNames = {
      "prime",   "cart",     "finsubgraded-i", "finsubgraded-ii", "L0-triang",          "findim2",
      "lieset",  "multiset", "maptri",         "crit12",          "cartan",             "engel-sum",
      "tripvolt", "jordvolt", "jorideals",     "kleinecke-shirokov", "n3-search"};
  return kNames;
}

SubgradedAlgebra campaign_graded_instance(std::uint64_t seed, std::uint64_t trial, std::size_t dim_max,
                                          bool cyclic_only) {
  Rng rng(substream_seed(seed, trial));
  const auto& pool = cyclic_only ? kCyclicModuli : kMixedModuli;
  const auto& moduli = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
  const std::size_t n = pick_dim(rng, dim_max);
  return gen_weight_graded(n, moduli, rng());
}

CampaignResult run_campaign(std::string_view lemma, const CampaignOptions& o) {
  auto graded = [&](bool cyclic_only, std::function<CheckReport(const SubgradedAlgebra&)> check) {
    return drive(lemma, o, [&, cyclic_only](std::uint64_t, std::uint64_t t) {
      return check(campaign_graded_instance(o.seed, t, o.dim_max, cyclic_only));
    });
  };
  auto with_rng = [&](std::function<CheckReport(Rng&, std::size_t)> check) {
    return drive(lemma, o, [&](std::uint64_t s, std::uint64_t) {
      Rng rng(s);
      const std::size_t n = pick_dim(rng, o.dim_max);
      return check(rng, n);
    });
  };

  if (lemma == "prime") return graded(true, check_lemma_prime);
  if (lemma == "cart") return graded(false, check_cart);
  if (lemma == "finsubgraded-i")
    return graded(false, [](const SubgradedAlgebra& s) { return check_finsubgraded(s, FinsubMode::kAllComponents); });
  if (lemma == "finsubgraded-ii")
    return graded(true, [](const SubgradedAlgebra& s) { return check_finsubgraded(s, FinsubMode::kCyclicZero); });
  if (lemma == "L0-triang") return graded(false, check_L0_triang);
  if (lemma == "findim2") {
    return drive(lemma, o, [&](std::uint64_t s, std::uint64_t) {
      Rng rng(s);
      return check_findim2(gen_weight_graded(pick_dim(rng, o.dim_max), {2}, rng()));
    });
  }
  if (lemma == "lieset") return graded(false, check_lieset);
  if (lemma == "multiset") return graded(false, check_multiset);
  if (lemma == "maptri") return graded(false, check_ampliation);
  if (lemma == "crit12") return with_rng([](Rng& rng, std::size_t n) { return check_crit12(gen_random_lie(rng, n)); });
  if (lemma == "cartan") return with_rng([](Rng& rng, std::size_t n) { return check_cartan(gen_random_lie(rng, n)); });
  if (lemma == "engel-sum")
    return with_rng([](Rng& rng, std::size_t n) { return check_engel_sum(gen_conjugated_upper(rng, n)); });
  if (lemma == "tripvolt")
    return with_rng([](Rng& rng, std::size_t n) { return check_tripvolt(gen_nilpotent_triple(rng, n)); });
  if (lemma == "jordvolt")
    return with_rng([](Rng& rng, std::size_t n) { return check_jordvolt(gen_nilpotent_jordan(rng, n)); });
  if (lemma == "jorideals") {
    return with_rng([](Rng& rng, std::size_t n) {
      const auto [j, i] = gen_jordan_pair(rng, n);
      return check_jorideals(j, i);
    });
  }
  if (lemma == "kleinecke-shirokov") {
    return with_rng([](Rng& rng, std::size_t n) {
      const auto [a, b] = gen_double_commutant_pair(rng, n);
      return check_kleinecke_shirokov(a, b);
    });
  }
  if (lemma == "n3-search") return n3_search(o);
  throw PreconditionError("unknown lemma '" + std::string(lemma) + "'");
}

nlohmann::ordered_json to_json(const CampaignResult& result) {
  nlohmann::ordered_json j;
  j["lemma"] = result.lemma;
  j["trials"] = result.trials;
  j["hypothesis_met"] = result.hypothesis_met;
  j["passed"] = result.passed;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& r : result.violations) j["violations"].push_back(to_json(r));
  if (!result.note.empty()) j["note"] = result.note;
  return j;
}

}  // namespace gradelie::harness
