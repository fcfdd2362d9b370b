#include "gradelie/harness/examples.hpp"

namespace gradelie::harness {
namespace {

const Scalar kI = Scalar::i();
const Scalar kHalf = Scalar(Rational(1, 2));

AlgebraDocument subgraded(std::string name, std::size_t n, std::vector<std::int64_t> moduli,
                          std::vector<std::pair<std::vector<std::int64_t>, std::vector<Mat>>> parts) {
  AlgebraDocument doc;
  doc.name = std::move(name);
  doc.ambient_dim = n;
  doc.structure = Structure::kSubgraded;
  const FinAbGroup group(moduli);
  doc.moduli = std::move(moduli);
  for (auto& [residues, mats] : parts) doc.components.emplace_back(group.element(residues), std::move(mats));
  return doc;
}

AlgebraDocument generated(std::string name, std::size_t n, Structure s, std::vector<Mat> gens) {
  AlgebraDocument doc;
  doc.name = std::move(name);
  doc.ambient_dim = n;
  doc.structure = s;
  doc.generators = std::move(gens);
  return doc;
}

}  // namespace

PauliMatrices pauli() {
  return {Mat{{0, 1}, {-1, 0}}, Mat{{0, -kI}, {-kI, 0}}, Mat{{-kI, 0}, {0, kI}}};
}

E1Matrices e1() {
  return {Mat{{0, 1}, {0, 0}}, Mat{{0, 0}, {kHalf, 0}}, Mat{{kHalf, 0}, {0, -kHalf}}};
}

E2Matrices e2() {
  return {Mat{{0, 1, 0}, {0, 0, -1}, {0, 0, 0}}, Mat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}};
}

std::vector<Mat> heisenberg() { return {Mat::unit(3, 0, 1), Mat::unit(3, 0, 2), Mat::unit(3, 1, 2)}; }

std::vector<Mat> sl2() { return {Mat::unit(2, 0, 1), Mat::unit(2, 1, 0), Mat{{1, 0}, {0, -1}}}; }

std::vector<Mat> jordan_upper() { return {Mat::unit(2, 0, 0), Mat::unit(2, 0, 1), Mat::unit(2, 1, 1)}; }

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> kNames = {"pauli", "e1", "e2", "heisenberg", "sl2", "jordan_upper"};
  return kNames;
}

AlgebraDocument build_example(std::string_view name) {
  if (name == "pauli") {
    const auto p = pauli();
    return subgraded("pauli", 2, {2, 2}, {{{0, 0}, {}}, {{0, 1}, {p.a}}, {{1, 0}, {p.b}}, {{1, 1}, {p.c}}});
  }
  if (name == "e1") {
    const auto m = e1();
    return subgraded("e1", 2, {3}, {{{0}, {m.g}}, {{1}, {m.e}}, {{2}, {m.f}}});
  }
  if (name == "e2") {
    const auto m = e2();
    const MatSubspace space(std::vector<Mat>{m.a, m.b}, 3);
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<Mat>>> parts;
    parts.push_back({{0}, m_bracket_powers(space, 4)});
    parts.push_back({{1}, {m.a, m.b}});
    for (std::int64_t k = 2; k < 4; ++k) parts.push_back({{k}, m_bracket_powers(space, static_cast<std::size_t>(k))});
    return subgraded("e2", 3, {4}, std::move(parts));
  }
  if (name == "heisenberg") return generated("heisenberg", 3, Structure::kLie, heisenberg());
  if (name == "sl2") return generated("sl2", 2, Structure::kLie, sl2());
  if (name == "jordan_upper") return generated("jordan_upper", 2, Structure::kJordan, jordan_upper());
  throw PreconditionError("unknown example '" + std::string(name) + "'");
}

}  // namespace gradelie::harness
