#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "homcoh/cochain.hpp"
#include "homcoh/deformation.hpp"
#include "homcoh/hom_algebra.hpp"

namespace homcoh::cli {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

enum class DocumentKind { hom_associative, hom_lie, hom_poisson };

std::string_view to_string(DocumentKind kind);

// Algebra file: {"schema_version", "kind", "dim", "mu": [{i,j,k,value}],
// "bracket" (hom-poisson only), "alpha": [[row], ...]}. Indices are
// zero-based; scalars are strings "p/q" or "n".
struct AlgebraDocument {
  std::string schema_version{kSchemaVersion};
  DocumentKind kind = DocumentKind::hom_associative;
  std::size_t dim = 0;
  StructureConstants mu;
  std::optional<StructureConstants> bracket;
  TwistMap alpha;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

// Deformation file: {"schema_version", "base": <algebra> or "path",
// "order", "terms": [[{i,j,k,value}], ...]}.
struct DeformationDocument {
  std::string schema_version{kSchemaVersion};
  AlgebraDocument base;
  std::optional<std::string> base_reference;
  std::size_t order = 0;
  std::vector<Cochain> terms;

  friend bool operator==(const DeformationDocument&, const DeformationDocument&) = default;
};

// Cochain file: {"schema_version", "dim", "arity", "entries": [{args, k, value}]}.
struct CochainDocument {
  std::string schema_version{kSchemaVersion};
  Cochain value;

  friend bool operator==(const CochainDocument&, const CochainDocument&) = default;
};

json read_json_file(const std::filesystem::path& path);
json parse_json_text(std::string_view text, std::string_view source = "<input>");

AlgebraDocument parse_algebra(const json& j);
// `base_dir` resolves a base given as a file reference.
DeformationDocument parse_deformation(const json& j, const std::filesystem::path& base_dir = {});
CochainDocument parse_cochain(const json& j);

AlgebraDocument load_algebra(const std::filesystem::path& path);
DeformationDocument load_deformation(const std::filesystem::path& path);
CochainDocument load_cochain(const std::filesystem::path& path);

json to_json(const AlgebraDocument& doc);
json to_json(const DeformationDocument& doc);
json to_json(const CochainDocument& doc);

// Nonzero coefficients as [{args, k, value}].
json cochain_entries(const Cochain& c);
// Nonzero coefficients of a bilinear map as [{i, j, k, value}].
json bilinear_entries(const Cochain& c);
json vector_json(const Vector& v);

HomAlgebra to_algebra(const AlgebraDocument& doc);
HomPoissonAlgebra to_poisson(const AlgebraDocument& doc);
Deformation to_deformation(const DeformationDocument& doc);

AlgebraDocument document_from(const HomAlgebra& a);
AlgebraDocument document_from(const HomPoissonAlgebra& p);
DeformationDocument document_from(const Deformation& d);

}  // namespace homcoh::cli
