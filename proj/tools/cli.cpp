#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "../vendor/CLI11.hpp"
#include "gradelie/harness/checks.hpp"
#include "gradelie/harness/examples.hpp"
#include "gradelie/harness/fuzz.hpp"
#include "gradelie/nil.hpp"
#include "gradelie/spectral.hpp"

namespace gradelie::cli {
namespace {

using harness::AlgebraDocument;
using harness::CheckReport;
using harness::Structure;
using nlohmann::ordered_json;

constexpr std::size_t kMaxProductOrder = 8;

struct Options {
  std::string input;
  std::string positional;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t dim_max = 4;
  std::string report = "text";
  bool emit = false;
  std::string lemma;
  std::string name;

  [[nodiscard]] bool json() const { return report == "json"; }
  [[nodiscard]] std::string path() const {
    if (!input.empty()) return input;
    if (!positional.empty()) return positional;
    throw harness::DocumentError("arguments", "an input file is required");
  }
};

// Flattened "key: value" rendering of a report object for text mode.
void print_text(std::ostream& out, const ordered_json& j, const std::string& indent = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << indent << k << ":\n";
      print_text(out, v, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << indent << k << ":\n";
      for (const auto& item : v) {
        out << indent << "  -\n";
        print_text(out, item, indent + "    ");
      }
    } else if (v.is_string()) {
      out << indent << k << ": " << v.get<std::string>() << "\n";
    } else {
      out << indent << k << ": " << v.dump() << "\n";
    }
  }
}

void print(std::ostream& out, const Options& o, const ordered_json& j) {
  if (o.json())
    out << j.dump(2) << "\n";
  else
    print_text(out, j);
}

std::vector<std::size_t> product_orders(const MatSubspace& m) {
  std::vector<std::size_t> orders;
  if (m.dim() == 0) return orders;
  for (std::size_t k = 2; k <= kMaxProductOrder; ++k)
    if (is_lie_n_product_system(m, k)) orders.push_back(k);
  return orders;
}

ordered_json series_json(const SeriesReport& s) {
  ordered_json dims = ordered_json::array();
  for (auto d : s.dims()) dims.push_back(d);
  return dims;
}

ordered_json irreducibility_json(const LieAlgebra& lie) {
  ordered_json j;
  try {
    const IrreducibilityVerdict v = decide_irreducible(lie.basis(), lie.ambient_dim());
    j["irreducible"] = v.irreducible;
    j["assoc_closure_dim"] = v.assoc_dim;
    if (v.witness) {
      ordered_json basis = ordered_json::array();
      for (const auto& vec : v.witness->basis()) {
        ordered_json row = ordered_json::array();
        for (const auto& x : vec) row.push_back(x.to_string());
        basis.push_back(std::move(row));
      }
      j["invariant_subspace"] = std::move(basis);
    }
  } catch (const WitnessSearchError& e) {
    j["irreducible"] = false;
    j["assoc_closure_dim"] = e.assoc_dim();
    j["invariant_subspace"] = nullptr;
    j["note"] = "reducible over C; no invariant subspace over Q(i) was found";
  }
  return j;
}

ordered_json analyze_json(const AlgebraDocument& doc) {
  const LieAlgebra lie = harness::document_algebra(doc);
  const std::size_t n = doc.ambient_dim;
  ordered_json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["digest"] = harness::digest(doc);
  j["ambient_dim"] = n;
  j["structure"] = std::string(harness::to_string(doc.structure));
  j["dim"] = lie.dim();
  j["solvable"] = is_solvable(lie);
  j["nilpotent"] = is_nilpotent_lie(lie);
  j["cartan_test"] = cartan_test(lie);
  j["derived_series"] = series_json(derived_series(lie));
  j["lower_central_series"] = series_json(lower_central_series(lie));
  j["irreducibility"] = irreducibility_json(lie);

  if (doc.structure == Structure::kTriple || doc.structure == Structure::kJordan) {
    const MatSubspace m = harness::document_subspace(doc);
    if (doc.structure == Structure::kTriple)
      j["lie_triple_system"] = is_lie_triple_system(m);
    else
      j["jordan_algebra"] = is_jordan_algebra(m);
    j["nil"] = is_nil_subspace(m.basis());
    j["product_orders"] = product_orders(m);
  }
  if (doc.structure != Structure::kLie) {
    const SubgradedAlgebra s = harness::document_grading(doc);
    ordered_json g;
    g["moduli"] = s.group().moduli();
    g["direct"] = s.is_direct();
    ordered_json comps = ordered_json::array();
    for (const auto& [elem, sub] : s.components()) {
      const MatSubspace m(sub, n);
      ordered_json c;
      c["key"] = to_key(elem);
      c["dim"] = m.dim();
      c["nil"] = is_nil_subspace(m.basis());
      c["scalar"] = is_scalar_set(sub, n);
      c["engel"] = sub.is_zero() || is_nil_subspace(ad_image(lie, sub));
      c["product_orders"] = product_orders(m);
      comps.push_back(std::move(c));
    }
    g["components"] = std::move(comps);
    j["grading"] = std::move(g);
  }
  return j;
}

int cmd_example(const Options& o, std::ostream& out) {
  const AlgebraDocument doc = harness::build_example(o.name);
  if (o.emit) {
    out << harness::emit_document(doc);
    return kExitPass;
  }
  print(out, o, analyze_json(doc));
  return kExitPass;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  print(out, o, analyze_json(harness::load_document(o.path())));
  return kExitPass;
}

int cmd_grade_check(const Options& o, std::ostream& out) {
  const AlgebraDocument doc = harness::load_document(o.path());
  ordered_json j;
  j["digest"] = harness::digest(doc);
  const SubgradedAlgebra s = harness::document_grading(doc);
  j["valid"] = true;
  j["direct"] = s.is_direct();
  std::vector<CheckReport> reports;
  if (s.group().is_cyclic()) reports.push_back(harness::check_lemma_prime(s));
  reports.push_back(harness::check_cart(s));
  reports.push_back(harness::check_finsubgraded(s, harness::FinsubMode::kAllComponents));
  reports.push_back(harness::check_finsubgraded(s, harness::FinsubMode::kCyclicZero));
  reports.push_back(harness::check_L0_triang(s));
  if (s.group().moduli() == std::vector<std::int64_t>{2}) reports.push_back(harness::check_findim2(s));
  reports.push_back(harness::check_lieset(s));
  reports.push_back(harness::check_multiset(s));
  reports.push_back(harness::check_ampliation(s));
  bool pass = true;
  ordered_json checks = ordered_json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    checks.push_back(harness::to_json(r));
  }
  j["checks"] = std::move(checks);
  j["pass"] = pass;
  if (o.json()) {
    out << j.dump(2) << "\n";
  } else {
    out << "grading: valid, " << (s.is_direct() ? "direct" : "not direct") << "\n";
    for (const auto& r : reports) out << harness::to_text(r);
  }
  return pass ? kExitPass : kExitViolation;
}

ordered_json numeric_json(const NumMat& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_triangularize(const Options& o, std::ostream& out) {
  const AlgebraDocument doc = harness::load_document(o.path());
  const LieAlgebra lie = harness::document_algebra(doc);
  const Flag flag = triangularize_solvable(lie, o.tol);
  const FlagReport report = verify_flag(lie.basis(), flag, o.tol);
  ordered_json j;
  j["digest"] = harness::digest(doc);
  j["exact"] = flag.is_exact();
  j["basis"] = flag.is_exact() ? harness::matrix_to_json(*flag.exact_basis()) : numeric_json(flag.numeric_basis());
  j["verified"] = report.pass;
  j["max_residual"] = report.residuals.empty() ? 0.0 : *std::max_element(report.residuals.begin(), report.residuals.end());
  print(out, o, j);
  return report.pass ? kExitPass : kExitViolation;
}

int cmd_irreducible(const Options& o, std::ostream& out) {
  const AlgebraDocument doc = harness::load_document(o.path());
  ordered_json j;
  j["digest"] = harness::digest(doc);
  j.update(irreducibility_json(harness::document_algebra(doc)));
  print(out, o, j);
  return kExitPass;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  const auto& known = harness::campaign_lemmas();
  std::vector<std::string> lemmas;
  if (o.lemma == "all")
    lemmas = known;
  else
    lemmas.push_back(o.lemma);
  const harness::CampaignOptions opts{o.seed, o.trials, o.dim_max};
  bool ok = true;
  ordered_json all = ordered_json::array();
  for (const auto& lemma : lemmas) {
    const harness::CampaignResult r = harness::run_campaign(lemma, opts);
    ok = ok && r.ok();
    if (o.json()) {
      all.push_back(harness::to_json(r));
      continue;
    }
    out << lemma << ": trials " << r.trials << ", hypothesis met " << r.hypothesis_met << ", violations "
        << r.violations.size() << "\n";
    if (!r.note.empty()) out << "  note: " << r.note << "\n";
    for (const auto& v : r.violations) out << harness::to_text(v);
  }
  if (o.json()) out << (all.size() == 1 ? all.front() : all).dump(2) << "\n";
  return ok ? kExitPass : kExitViolation;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("file", o.positional, "Input document");
  sub->add_option("--input", o.input, "Input document");
}

void add_report(CLI::App* sub, Options& o) {
  sub->add_option("--report", o.report, "Report format")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of subgraded Lie algebras of matrices", "gradelie"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "Structure report for a document");
  add_input(analyze, o);
  auto* grade = app.add_subcommand("grade-check", "Verify a grading and run the graded lemma checks");
  add_input(grade, o);
  auto* tri = app.add_subcommand("triangularize", "Flag certificate for a solvable algebra");
  add_input(tri, o);
  auto* irr = app.add_subcommand("irreducible", "Decide irreducibility and find an invariant subspace");
  add_input(irr, o);
  auto* fuzz = app.add_subcommand("fuzz", "Seeded property campaign");
  fuzz->add_option("--lemma", o.lemma, "Lemma name or 'all'")->required();
  auto* example = app.add_subcommand("example", "Built-in example");
  example->add_option("name", o.name, "Example name")->required()->check(CLI::IsMember(harness::example_names()));
  for (auto* sub : {analyze, grade, tri, irr, fuzz, example}) {
    add_report(sub, o);
    sub->add_option("--tol", o.tol, "Numeric tolerance")->check(CLI::PositiveNumber);
  }
  for (auto* sub : {fuzz}) {
    sub->add_option("--seed", o.seed, "Campaign seed");
    sub->add_option("--trials", o.trials, "Campaign trials");
    sub->add_option("--dim-max", o.dim_max, "Largest matrix size")->check(CLI::Range(2, 6));
  }
  example->add_flag("--emit", o.emit, "Write the example document");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (example->parsed()) return cmd_example(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (grade->parsed()) return cmd_grade_check(o, out);
    if (tri->parsed()) return cmd_triangularize(o, out);
    if (irr->parsed()) return cmd_irreducible(o, out);
    if (fuzz->parsed()) {
      const auto& known = harness::campaign_lemmas();
      if (o.lemma != "all" && std::find(known.begin(), known.end(), o.lemma) == known.end()) {
        err << "error: unknown lemma '" << o.lemma << "'\n";
        return kExitInput;
      }
      return cmd_fuzz(o, out);
    }
  } catch (const harness::DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GradingError& e) {
    err << "violation: invalid grading: " << e.what() << "\n";
    return kExitViolation;
  } catch (const PreconditionError& e) {
    err << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const InvariantViolation& e) {
    err << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace gradelie::cli
