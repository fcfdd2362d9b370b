#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gradelie/error.hpp"
#include "gradelie/grading.hpp"
#include "gradelie/structures.hpp"

namespace gradelie::harness {

enum class Structure { kLie, kSubgraded, kTriple, kJordan };

std::string_view to_string(Structure s);

/// Serializable description of one instance. `generators` is used by the
/// lie, triple and jordan structures; `components` by subgraded documents.
struct AlgebraDocument {
  std::string name;  // optional label, emitted only when non-empty
  std::size_t ambient_dim = 0;
  Structure structure = Structure::kLie;
  std::optional<std::vector<std::int64_t>> moduli;
  std::vector<Mat> generators;
  std::vector<std::pair<GroupElem, std::vector<Mat>>> components;
};

/// Malformed input. `where()` is either "line L, column C" or a JSON
/// pointer to the offending value.
class DocumentError : public Error {
 public:
  DocumentError(const std::string& where, const std::string& what)
      : Error(where + ": " + what), where_(where) {}
  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

AlgebraDocument parse_document(std::string_view text);
AlgebraDocument load_document(const std::string& path);

nlohmann::ordered_json to_json(const AlgebraDocument& doc);
/// Two-space indented JSON with a trailing newline.
std::string emit_document(const AlgebraDocument& doc);

nlohmann::ordered_json matrix_to_json(const Mat& m);

AlgebraDocument document_from_algebra(const LieAlgebra& lie, std::string name = {});
AlgebraDocument document_from_grading(const SubgradedAlgebra& s, std::string name = {});
AlgebraDocument document_from_subspace(const MatSubspace& m, Structure structure, std::string name = {});

/// The Lie algebra a document describes: the closure of its generators, or
/// of all component matrices for subgraded documents.
LieAlgebra document_algebra(const AlgebraDocument& doc);
/// The subgraded algebra of a subgraded document, or the Z₂ construction of
/// a triple or Jordan document. Throws GradingError on invalid data and
/// PreconditionError for lie documents.
SubgradedAlgebra document_grading(const AlgebraDocument& doc);
MatSubspace document_subspace(const AlgebraDocument& doc);

/// FNV-1a digest of the canonical JSON, as 16 hex digits.
std::string digest(const AlgebraDocument& doc);

}  // namespace gradelie::harness
