#include "gradelie/harness/document.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gradelie::harness {
namespace {

using nlohmann::ordered_json;

std::string pointer_child(const std::string& base, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~')
      escaped += "~0";
    else if (c == '/')
      escaped += "~1";
    else
      escaped += c;
  }
  return base + "/" + escaped;
}

std::string pointer_child(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

// Depth-first search for the first floating-point literal.
std::optional<std::string> find_float(const ordered_json& j, const std::string& where) {
  if (j.is_number_float()) return where;
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      if (auto hit = find_float(v, pointer_child(where, k))) return hit;
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      if (auto hit = find_float(j[i], pointer_child(where, i))) return hit;
  }
  return std::nullopt;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::int64_t require_int(const ordered_json& j, const std::string& where, std::int64_t min) {
  if (!j.is_number_integer()) throw DocumentError(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < min) throw DocumentError(where, "expected an integer >= " + std::to_string(min));
  return v;
}

Mat parse_matrix(const ordered_json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw DocumentError(where, "expected " + std::to_string(n) + " rows");
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string row_at = pointer_child(where, r);
    if (!j[r].is_array() || j[r].size() != n)
      throw DocumentError(row_at, "expected a row of " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const std::string at = pointer_child(row_at, c);
      if (!j[r][c].is_string()) throw DocumentError(at, "matrix entries must be strings");
      try {
        m(r, c) = Scalar::parse(j[r][c].get<std::string>());
      } catch (const std::exception& e) {
        throw DocumentError(at, e.what());
      }
    }
  }
  return m;
}

std::vector<Mat> parse_matrix_list(const ordered_json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where, "expected an array of matrices");
  std::vector<Mat> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(parse_matrix(j[k], n, pointer_child(where, k)));
  return out;
}

FinAbGroup document_group(const AlgebraDocument& doc) {
  return doc.moduli ? FinAbGroup(*doc.moduli) : FinAbGroup();
}

}  // namespace

std::string_view to_string(Structure s) {
  switch (s) {
    case Structure::kLie:
      return "lie";
    case Structure::kSubgraded:
      return "subgraded";
    case Structure::kTriple:
      return "triple";
    case Structure::kJordan:
      return "jordan";
  }
  return "lie";
}

AlgebraDocument parse_document(std::string_view text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text.begin(), text.end());
  } catch (const ordered_json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw DocumentError(line_column(text, byte), "JSON syntax error");
  }
  if (auto at = find_float(root, "")) throw DocumentError(*at, "floating-point literals are rejected in exact mode");
  if (!root.is_object()) throw DocumentError("/", "top level must be an object");

  static const char* const kKnown[] = {"name", "ambient_dim", "structure", "mode", "group", "generators", "components"};
  for (const auto& [k, v] : root.items()) {
    bool known = false;
    for (const char* name : kKnown) known = known || k == name;
    if (!known) throw DocumentError(pointer_child("", k), "unknown field");
  }

  AlgebraDocument doc;
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw DocumentError("/name", "expected a string");
    doc.name = root["name"].get<std::string>();
  }
  if (!root.contains("ambient_dim")) throw DocumentError("/ambient_dim", "missing field");
  doc.ambient_dim = static_cast<std::size_t>(require_int(root["ambient_dim"], "/ambient_dim", 1));
  if (!root.contains("structure") || !root["structure"].is_string())
    throw DocumentError("/structure", "expected one of lie, subgraded, triple, jordan");
  const std::string structure = root["structure"].get<std::string>();
  if (structure == "lie")
    doc.structure = Structure::kLie;
  else if (structure == "subgraded")
    doc.structure = Structure::kSubgraded;
  else if (structure == "triple")
    doc.structure = Structure::kTriple;
  else if (structure == "jordan")
    doc.structure = Structure::kJordan;
  else
    throw DocumentError("/structure", "expected one of lie, subgraded, triple, jordan");
  if (root.contains("mode") && root["mode"] != "exact") throw DocumentError("/mode", "only \"exact\" mode is supported");

  if (root.contains("group")) {
    const auto& g = root["group"];
    if (!g.is_object() || !g.contains("moduli") || !g["moduli"].is_array())
      throw DocumentError("/group", "expected {\"moduli\": [...]}");
    std::vector<std::int64_t> moduli;
    for (std::size_t k = 0; k < g["moduli"].size(); ++k)
      moduli.push_back(require_int(g["moduli"][k], pointer_child("/group/moduli", k), 1));
    doc.moduli = std::move(moduli);
  }

  const std::size_t n = doc.ambient_dim;
  if (doc.structure == Structure::kSubgraded) {
    if (root.contains("generators")) throw DocumentError("/generators", "subgraded documents use components");
    if (!doc.moduli) throw DocumentError("/group", "subgraded documents need a group");
    if (!root.contains("components") || !root["components"].is_object())
      throw DocumentError("/components", "expected an object keyed by group elements");
    const FinAbGroup group(*doc.moduli);
    for (const auto& [key, mats] : root["components"].items()) {
      const std::string at = pointer_child("/components", key);
      GroupElem g;
      try {
        g = parse_key(group, key);
      } catch (const Error& e) {
        throw DocumentError(at, e.what());
      }
      for (const auto& [existing, unused] : doc.components)
        if (existing == g) throw DocumentError(at, "duplicate component");
      doc.components.emplace_back(std::move(g), parse_matrix_list(mats, n, at));
    }
  } else {
    if (root.contains("components")) throw DocumentError("/components", "only subgraded documents have components");
    if (!root.contains("generators")) throw DocumentError("/generators", "missing field");
    doc.generators = parse_matrix_list(root["generators"], n, "/generators");
  }
  return doc;
}

AlgebraDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

ordered_json matrix_to_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json to_json(const AlgebraDocument& doc) {
  ordered_json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["ambient_dim"] = doc.ambient_dim;
  j["structure"] = std::string(to_string(doc.structure));
  j["mode"] = "exact";
  if (doc.moduli) j["group"] = {{"moduli", *doc.moduli}};
  if (doc.structure == Structure::kSubgraded) {
    ordered_json comps = ordered_json::object();
    for (const auto& [g, mats] : doc.components) {
      ordered_json list = ordered_json::array();
      for (const auto& m : mats) list.push_back(matrix_to_json(m));
      comps[to_key(g)] = std::move(list);
    }
    j["components"] = std::move(comps);
  } else {
    ordered_json list = ordered_json::array();
    for (const auto& m : doc.generators) list.push_back(matrix_to_json(m));
    j["generators"] = std::move(list);
  }
  return j;
}

std::string emit_document(const AlgebraDocument& doc) { return to_json(doc).dump(2) + "\n"; }

AlgebraDocument document_from_algebra(const LieAlgebra& lie, std::string name) {
  AlgebraDocument doc;
  doc.name = std::move(name);
  doc.ambient_dim = lie.ambient_dim();
  doc.structure = Structure::kLie;
  doc.generators = lie.basis();
  return doc;
}

AlgebraDocument document_from_grading(const SubgradedAlgebra& s, std::string name) {
  AlgebraDocument doc;
  doc.name = std::move(name);
  doc.ambient_dim = s.ambient_dim();
  doc.structure = Structure::kSubgraded;
  doc.moduli = s.group().moduli();
  for (const auto& [g, sub] : s.components()) doc.components.emplace_back(g, sub.basis_matrices(s.ambient_dim()));
  return doc;
}

AlgebraDocument document_from_subspace(const MatSubspace& m, Structure structure, std::string name) {
  AlgebraDocument doc;
  doc.name = std::move(name);
  doc.ambient_dim = m.ambient_dim();
  doc.structure = structure;
  doc.generators = m.basis();
  return doc;
}

LieAlgebra document_algebra(const AlgebraDocument& doc) {
  if (doc.structure != Structure::kSubgraded) return lie_closure(doc.generators, doc.ambient_dim);
  std::vector<Mat> all;
  for (const auto& [g, mats] : doc.components) all.insert(all.end(), mats.begin(), mats.end());
  return lie_closure(all, doc.ambient_dim);
}

SubgradedAlgebra document_grading(const AlgebraDocument& doc) {
  switch (doc.structure) {
    case Structure::kSubgraded: {
      const FinAbGroup group = document_group(doc);
      const std::size_t n = doc.ambient_dim;
      ComponentMap comps;
      for (const auto& [g, mats] : doc.components) comps[g] = Subspace::span_of_matrices(mats, n);
      return verify_subgrading(document_algebra(doc), group, comps);
    }
    case Structure::kTriple:
      return triple_to_z2(document_subspace(doc));
    case Structure::kJordan:
      return jordan_to_z2(document_subspace(doc));
    case Structure::kLie:
      break;
  }
  throw PreconditionError("lie documents carry no grading");
}

MatSubspace document_subspace(const AlgebraDocument& doc) {
  if (doc.structure == Structure::kSubgraded) throw PreconditionError("subgraded documents carry no single subspace");
  return MatSubspace(doc.generators, doc.ambient_dim);
}

std::string digest(const AlgebraDocument& doc) {
  AlgebraDocument anonymous = doc;
  anonymous.name.clear();
  const std::string text = to_json(anonymous).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gradelie::harness
