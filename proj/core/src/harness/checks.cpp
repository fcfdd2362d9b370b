#include "gradelie/harness/checks.hpp"

#include <functional>
#include <sstream>

#include "gradelie/nil.hpp"
#include "gradelie/spectral.hpp"

namespace gradelie::harness {
namespace {

using nlohmann::ordered_json;

constexpr std::size_t kNilSampleCap = 40;
constexpr std::size_t kEngelSampleCap = 30;

struct Builder {
  CheckReport r;

  Builder(std::string check, const AlgebraDocument& instance) {
    r.check = std::move(check);
    r.digest = digest(instance);
    payload = to_json(instance);
  }
  Builder(std::string check, std::string dig, ordered_json p) : payload(std::move(p)) {
    r.check = std::move(check);
    r.digest = std::move(dig);
  }

  void hyp(std::string name, bool v) { r.hypotheses.emplace_back(std::move(name), v); }
  void con(std::string name, bool v) { r.conclusions.emplace_back(std::move(name), v); }

  CheckReport finish() {
    r.hypothesis_met = true;
    for (const auto& [k, v] : r.hypotheses) r.hypothesis_met = r.hypothesis_met && v;
    bool conclusions = true;
    for (const auto& [k, v] : r.conclusions) conclusions = conclusions && v;
    r.pass = !r.hypothesis_met || conclusions;
    if (!r.pass) r.counterexample = payload;
    return std::move(r);
  }

  ordered_json payload;
};

std::size_t n_of(const SubgradedAlgebra& s) { return s.ambient_dim(); }

bool engel_component(const LieAlgebra& lie, const Subspace& v) {
  if (v.is_zero()) return true;
  return is_nil_subspace(ad_image(lie, v));
}

// ad [a_i, b_j] over component bases; the exact bilinear nil test decides
// whether every commutator of the two components is Engel.
bool commutators_engel(const SubgradedAlgebra& s, const GroupElem& g, const GroupElem& d) {
  const auto left = s.component_basis(g);
  const auto right = s.component_basis(d);
  if (left.empty() || right.empty()) return true;
  std::vector<std::vector<Mat>> grid;
  for (const auto& a : left) {
    std::vector<Mat> row;
    for (const auto& b : right) row.push_back(ad_matrix(s.algebra(), bracket(a, b)));
    grid.push_back(std::move(row));
  }
  return is_nil_bilinear(grid);
}

bool pairs_engel(const SubgradedAlgebra& s, const std::function<bool(const GroupElem&, const GroupElem&)>& selected) {
  const auto elements = s.group().elements();
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i; j < elements.size(); ++j)
      if (selected(elements[i], elements[j]) && !commutators_engel(s, elements[i], elements[j])) return false;
  return true;
}

std::vector<Mat> sample(const std::vector<Mat>& basis, const std::vector<Scalar>& coeffs, std::size_t cap,
                        const std::function<bool(const Mat&)>& keep) {
  std::vector<Mat> out;
  for (auto& m : grid_combinations(basis, coeffs, 2)) {
    if (out.size() >= cap) break;
    if (keep(m)) out.push_back(std::move(m));
  }
  return out;
}

bool sums_closed(const std::vector<Mat>& members, const std::function<bool(const Mat&)>& property) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!property(members[i] + members[j])) return false;
  return true;
}

AlgebraDocument pair_document(const Mat& a, const Mat& b) {
  AlgebraDocument doc;
  doc.ambient_dim = a.rows();
  doc.structure = Structure::kLie;
  doc.generators = {a, b};
  return doc;
}

const GroupElem& z2_one(const SubgradedAlgebra& s, GroupElem& storage) {
  if (s.group().moduli() != std::vector<std::int64_t>{2}) throw PreconditionError("check requires the group Z2");
  storage = s.group().element({1});
  return storage;
}

}  // namespace

ordered_json to_json(const CheckReport& report) {
  ordered_json j;
  j["check"] = report.check;
  j["digest"] = report.digest;
  j["hypothesis_met"] = report.hypothesis_met;
  j["pass"] = report.pass;
  ordered_json hyps = ordered_json::object();
  for (const auto& [k, v] : report.hypotheses) hyps[k] = v;
  j["hypotheses"] = std::move(hyps);
  ordered_json cons = ordered_json::object();
  for (const auto& [k, v] : report.conclusions) cons[k] = v;
  j["conclusions"] = std::move(cons);
  if (!report.note.empty()) j["note"] = report.note;
  if (report.counterexample) j["counterexample"] = *report.counterexample;
  return j;
}

std::string to_text(const CheckReport& report) {
  std::ostringstream out;
  out << report.check << " [" << report.digest << "]: "
      << (!report.pass ? "FAIL" : report.hypothesis_met ? "pass" : "pass (hypothesis not met)") << "\n";
  for (const auto& [k, v] : report.hypotheses) out << "  hypothesis " << k << ": " << (v ? "yes" : "no") << "\n";
  for (const auto& [k, v] : report.conclusions) out << "  conclusion " << k << ": " << (v ? "yes" : "no") << "\n";
  if (!report.note.empty()) out << "  note: " << report.note << "\n";
  if (report.counterexample) out << "  counterexample: " << report.counterexample->dump() << "\n";
  return out.str();
}

bool is_reducible(const LieAlgebra& lie) {
  const std::size_t n = lie.ambient_dim();
  return assoc_closure_dim(lie.basis(), n) < n * n;
}

std::vector<Mat> grid_combinations(const std::vector<Mat>& basis, const std::vector<Scalar>& coeffs,
                                   std::size_t support) {
  std::vector<Mat> out;
  if (basis.empty()) return out;
  const std::size_t n = basis.front().rows();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& c : coeffs) out.push_back(c * basis[i]);
  if (support < 2) return out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      for (const auto& c : coeffs)
        for (const auto& d : coeffs) {
          Mat m(n, n);
          m += c * basis[i];
          m += d * basis[j];
          out.push_back(std::move(m));
        }
  return out;
}

CheckReport check_lemma_prime(const SubgradedAlgebra& s) {
  if (!s.group().is_cyclic()) throw PreconditionError("prime: the grading group is not cyclic; use cart");
  Builder b("prime", document_from_grading(s));
  b.hyp("graded", s.is_direct());
  b.hyp("L0_scalar", is_scalar_set(s.component(s.group().zero()), n_of(s)));
  b.con("solvable", is_solvable(s.algebra()));
  return b.finish();
}

CheckReport check_cart(const SubgradedAlgebra& s) {
  const LieAlgebra& lie = s.algebra();
  const std::size_t n = n_of(s);
  Builder b("cart", document_from_grading(s));
  std::vector<Mat> engel;
  for (const auto& [g, sub] : s.components())
    for (const auto& a : s.component_basis(g))
      if (is_engel_element(lie, a)) engel.push_back(a);
  b.hyp("graded", s.is_direct());
  b.hyp("L0_scalar", is_scalar_set(s.component(s.group().zero()), n));
  b.hyp("homogeneous_engel_element", !engel.empty());
  if (b.r.hypotheses[0].second && b.r.hypotheses[1].second && !engel.empty()) {
    const Subspace radical = solvable_radical(lie);
    bool in_radical = true;
    bool nonscalar = false;
    for (const auto& a : engel) {
      in_radical = in_radical && radical.contains(a);
      nonscalar = nonscalar || !a.is_scalar_multiple_of_identity();
    }
    b.con("engel_in_radical", in_radical);
    b.con("reducible_if_nonscalar", !nonscalar || is_reducible(lie));
    b.r.note = std::to_string(engel.size()) + " Engel basis element(s)";
  }
  return b.finish();
}

CheckReport check_finsubgraded(const SubgradedAlgebra& s, FinsubMode mode) {
  const LieAlgebra& lie = s.algebra();
  if (mode == FinsubMode::kAllComponents) {
    Builder b("finsubgraded-i", document_from_grading(s));
    bool all = true;
    for (const auto& [g, sub] : s.components()) all = all && engel_component(lie, sub);
    b.hyp("components_engel", all);
    if (all) b.con("solvable", is_solvable(lie));
    return b.finish();
  }
  Builder b("finsubgraded-ii", document_from_grading(s));
  b.hyp("cyclic", s.group().is_cyclic());
  const bool l0 = engel_component(lie, s.component(s.group().zero()));
  b.hyp("L0_engel", l0);
  if (s.group().is_cyclic() && l0) b.con("solvable", is_solvable(lie));
  return b.finish();
}

CheckReport check_L0_triang(const SubgradedAlgebra& s) {
  const std::size_t n = n_of(s);
  const Subspace& l0 = s.component(s.group().zero());
  Builder b("L0-triang", document_from_grading(s));
  b.hyp("graded", s.is_direct());
  b.hyp("L0_solvable", is_solvable(LieAlgebra::from_subspace(l0, n)));
  b.hyp("L0_noncommutative", !commutator_subspace(l0, l0, n).is_zero());
  if (b.r.hypotheses[0].second && b.r.hypotheses[1].second && b.r.hypotheses[2].second) {
    b.con("nonscalar_solvable_ideal", !is_scalar_set(solvable_radical(s.algebra()), n));
    b.con("reducible", is_reducible(s.algebra()));
  }
  return b.finish();
}

CheckReport check_findim2(const SubgradedAlgebra& s) {
  GroupElem one;
  const Subspace& l1 = s.component(z2_one(s, one));
  Builder b("findim2", document_from_grading(s));
  const bool engel = engel_component(s.algebra(), l1);
  b.hyp("L1_engel", engel);
  if (engel) {
    b.con("L_double_prime_solvable", is_solvable(l_double_prime(s).algebra()));
    const bool nonscalar = !is_scalar_set(l1, n_of(s));
    b.con("reducible_if_L1_nonscalar", !nonscalar || is_reducible(s.algebra()));
  }
  return b.finish();
}

CheckReport check_lieset(const SubgradedAlgebra& s) {
  const FinAbGroup& group = s.group();
  Builder b("lieset", document_from_grading(s));
  b.hyp("selected_commutators_engel", pairs_engel(s, [&](const GroupElem& g, const GroupElem& d) {
          return group.add(g, d) == group.zero() || in_gamma_sharp(group, g, d);
        }));
  if (b.r.hypotheses[0].second) b.con("solvable", is_solvable(s.algebra()));
  return b.finish();
}

CheckReport check_multiset(const SubgradedAlgebra& s) {
  Builder b("multiset", document_from_grading(s));
  b.hyp("homogeneous_commutators_engel", pairs_engel(s, [](const GroupElem&, const GroupElem&) { return true; }));
  if (b.r.hypotheses[0].second) b.con("solvable", is_solvable(s.algebra()));
  return b.finish();
}

CheckReport check_ampliation(const SubgradedAlgebra& s) {
  const std::size_t n = n_of(s);
  const AmpliationResult amp = ampliate(s);
  const auto& basis = amp.ampliated.algebra().basis();
  Builder b("maptri", document_from_grading(s));
  std::vector<Mat> images;
  for (const auto& u : basis) images.push_back(f_pi(u, n, s.group()));
  bool homomorphism = true;
  for (std::size_t i = 0; i < basis.size() && homomorphism; ++i)
    for (std::size_t j = i + 1; j < basis.size() && homomorphism; ++j)
      homomorphism = f_pi(bracket(basis[i], basis[j]), n, s.group()) == bracket(images[i], images[j]);
  const MaptriReport maptri = gradelie::check_maptri(s);
  b.con("ampliation_direct", amp.ampliated.is_direct());
  b.con("f_pi_surjective", Subspace::span_of_matrices(images, n) == s.algebra().span());
  b.con("f_pi_homomorphism", homomorphism);
  b.con("implications_hold", maptri.consistent());
  b.r.note = std::string("ampliation ") + (maptri.ampliated_solvable ? "solvable" : "not solvable") + ", " +
             (maptri.ampliated_engel ? "Engel" : "not Engel");
  return b.finish();
}

CheckReport check_crit12(const LieAlgebra& lie) {
  Builder b("crit12", document_from_algebra(lie));
  const Scalar i = Scalar::i();
  const auto nil = sample(lie.basis(), {Scalar(1), Scalar(-1), i, -i}, kNilSampleCap,
                          [](const Mat& m) { return is_nilpotent_exact(m); });
  const bool closed = sums_closed(nil, [](const Mat& m) { return is_nilpotent_exact(m); });
  b.hyp("solvable", is_solvable(lie));
  b.con("nilpotent_sums_nilpotent", closed);
  b.r.note = std::to_string(nil.size()) + " sampled nilpotent member(s)";
  return b.finish();
}

CheckReport check_cartan(const LieAlgebra& lie) {
  Builder b("cartan", document_from_algebra(lie));
  const bool cartan = cartan_test(lie);
  const bool solvable = is_solvable(lie);
  b.con("cartan_test_equals_solvable", cartan == solvable);
  b.r.note = solvable ? "solvable" : "not solvable";
  return b.finish();
}

CheckReport check_engel_sum(const LieAlgebra& lie) {
  Builder b("engel-sum", document_from_algebra(lie));
  const auto engel = sample(lie.basis(), {Scalar(1), Scalar(-1)}, kEngelSampleCap,
                            [&](const Mat& m) { return is_engel_element(lie, m); });
  b.hyp("solvable", is_solvable(lie));
  b.con("engel_sums_engel", sums_closed(engel, [&](const Mat& m) { return is_engel_element(lie, m); }));
  b.r.note = std::to_string(engel.size()) + " sampled Engel member(s)";
  return b.finish();
}

CheckReport check_kleinecke_shirokov(const Mat& a, const Mat& b_mat) {
  Builder b("kleinecke-shirokov", pair_document(a, b_mat));
  const Mat ab = bracket(a, b_mat);
  b.hyp("a_commutes_with_ab", bracket(a, ab).is_zero());
  b.con("ab_nilpotent", is_nilpotent_exact(ab));
  return b.finish();
}

CheckReport check_tripvolt(const MatSubspace& m) {
  Builder b("tripvolt", document_from_subspace(m, Structure::kTriple));
  b.hyp("triple_system", is_lie_triple_system(m));
  b.hyp("nil", is_nil_subspace(m.basis()));
  if (b.r.hypotheses[0].second && b.r.hypotheses[1].second) {
    b.con("envelope_solvable", is_solvable(triple_envelope(m)));
    const SubgradedAlgebra z2 = triple_to_z2(m);
    const CheckReport chained = check_findim2(z2);
    b.con("z2_L_double_prime_solvable", chained.hypothesis_met && chained.pass);
  }
  return b.finish();
}

CheckReport check_jordvolt(const MatSubspace& j) {
  Builder b("jordvolt", document_from_subspace(j, Structure::kJordan));
  b.hyp("jordan_algebra", is_jordan_algebra(j));
  b.hyp("nil", is_nil_subspace(j.basis()));
  if (b.r.hypotheses[0].second && b.r.hypotheses[1].second) {
    const SubgradedAlgebra z2 = jordan_to_z2(j);
    b.con("lie_algebra_solvable", is_solvable(z2.algebra()));
  }
  return b.finish();
}

CheckReport check_jorideals(const MatSubspace& j, const MatSubspace& i) {
  const AlgebraDocument jd = document_from_subspace(j, Structure::kJordan);
  const AlgebraDocument id = document_from_subspace(i, Structure::kJordan);
  ordered_json payload;
  payload["jordan"] = to_json(jd);
  payload["ideal"] = to_json(id);
  Builder b("jorideals", digest(jd) + "/" + digest(id), std::move(payload));
  const bool jordan = is_jordan_algebra(j);
  b.hyp("jordan_algebra", jordan);
  b.hyp("jordan_ideal", jordan && j.span().contains(i.span()) && is_jordan_ideal(j, i));
  if (b.r.hypotheses[0].second && b.r.hypotheses[1].second) {
    bool chain = true;
    try {
      const JordanIdealChain c = jordan_ideal_chain(j, i);
      b.r.note = "dims " + std::to_string(c.li.dim()) + " <= " + std::to_string(c.lji.dim()) + " <= " +
                 std::to_string(c.lj.dim());
    } catch (const InvariantViolation& e) {
      chain = false;
      b.r.note = e.what();
    }
    b.con("ideal_chain", chain);
  }
  return b.finish();
}

CheckReport replay_check(std::string_view check, const ordered_json& payload) {
  if (check == "jorideals") {
    return check_jorideals(document_subspace(parse_document(payload.at("jordan").dump())),
                           document_subspace(parse_document(payload.at("ideal").dump())));
  }
  const AlgebraDocument doc = parse_document(payload.dump());
  if (check == "prime") return check_lemma_prime(document_grading(doc));
  if (check == "cart") return check_cart(document_grading(doc));
  if (check == "finsubgraded-i") return check_finsubgraded(document_grading(doc), FinsubMode::kAllComponents);
  if (check == "finsubgraded-ii") return check_finsubgraded(document_grading(doc), FinsubMode::kCyclicZero);
  if (check == "L0-triang") return check_L0_triang(document_grading(doc));
  if (check == "findim2") return check_findim2(document_grading(doc));
  if (check == "lieset") return check_lieset(document_grading(doc));
  if (check == "multiset") return check_multiset(document_grading(doc));
  if (check == "maptri") return check_ampliation(document_grading(doc));
  if (check == "crit12") return check_crit12(document_algebra(doc));
  if (check == "cartan") return check_cartan(document_algebra(doc));
  if (check == "engel-sum") return check_engel_sum(document_algebra(doc));
  if (check == "tripvolt") return check_tripvolt(document_subspace(doc));
  if (check == "jordvolt") return check_jordvolt(document_subspace(doc));
  if (check == "kleinecke-shirokov") {
    if (doc.generators.size() != 2) throw PreconditionError("kleinecke-shirokov payload needs two generators");
    return check_kleinecke_shirokov(doc.generators[0], doc.generators[1]);
  }
  throw PreconditionError("unknown check '" + std::string(check) + "'");
}

}  // namespace gradelie::harness
