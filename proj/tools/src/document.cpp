#include "homcoh/cli/document.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "homcoh/errors.hpp"

namespace homcoh::cli {

namespace fs = std::filesystem;

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::hom_associative:
      return "hom-associative";
    case DocumentKind::hom_lie:
      return "hom-lie";
    case DocumentKind::hom_poisson:
      return "hom-poisson";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + msg);
}

void require_object(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (auto a : allowed) known = known || it.key() == a;
    if (!known) fail(path, "unknown field \"" + it.key() + "\"");
  }
}

const json& field(const json& j, std::string_view key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field \"" + std::string(key) + "\"");
  return *it;
}

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

Scalar parse_scalar(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return Scalar::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }
  if (v.is_number_integer()) return Scalar(v.get<long>());
  fail(path, "expected a scalar string such as \"3\" or \"-2/5\"");
}

std::size_t parse_count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::size_t parse_index(const json& v, std::size_t dim, const std::string& path) {
  std::size_t i = parse_count(v, path);
  if (i >= dim) fail(path, "index " + std::to_string(i) + " out of range [0, " + std::to_string(dim) + ")");
  return i;
}

void check_version(const json& j, const std::string& path) {
  const json& v = field(j, "schema_version", path);
  if (!v.is_string() || v.get<std::string>() != kSchemaVersion)
    fail(child(path, "schema_version"), "unsupported schema version (expected \"" + std::string(kSchemaVersion) + "\")");
}

StructureConstants parse_bilinear(const json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of {i, j, k, value} entries");
  StructureConstants sc(dim);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const std::string p = child(path, n);
    const json& e = j[n];
    require_object(e, p, {"i", "j", "k", "value"});
    std::size_t i = parse_index(field(e, "i", p), dim, child(p, "i"));
    std::size_t jj = parse_index(field(e, "j", p), dim, child(p, "j"));
    std::size_t k = parse_index(field(e, "k", p), dim, child(p, "k"));
    if (!seen.insert({i, jj, k}).second)
      fail(p, "duplicate entry (" + std::to_string(i) + "," + std::to_string(jj) + "," + std::to_string(k) + ")");
    sc.at(i, jj, k) = parse_scalar(field(e, "value", p), child(p, "value"));
  }
  return sc;
}

TwistMap parse_matrix(const json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array() || j.size() != dim) fail(path, "expected " + std::to_string(dim) + " rows");
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != dim) fail(child(path, r), "expected " + std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = parse_scalar(row[c], child(child(path, r), c));
  }
  return TwistMap(std::move(m));
}

DocumentKind parse_kind(const json& v, const std::string& path) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "hom-associative") return DocumentKind::hom_associative;
    if (s == "hom-lie") return DocumentKind::hom_lie;
    if (s == "hom-poisson") return DocumentKind::hom_poisson;
  }
  fail(path, "kind must be \"hom-associative\", \"hom-lie\" or \"hom-poisson\"");
}

AlgebraDocument parse_algebra_at(const json& j, const std::string& path) {
  require_object(j, path, {"schema_version", "kind", "dim", "mu", "bracket", "alpha"});
  check_version(j, path);
  AlgebraDocument doc;
  doc.kind = parse_kind(field(j, "kind", path), child(path, "kind"));
  doc.dim = parse_count(field(j, "dim", path), child(path, "dim"));
  if (doc.dim == 0) fail(child(path, "dim"), "dimension must be positive");
  doc.mu = parse_bilinear(field(j, "mu", path), doc.dim, child(path, "mu"));
  if (doc.kind == DocumentKind::hom_poisson) {
    doc.bracket = parse_bilinear(field(j, "bracket", path), doc.dim, child(path, "bracket"));
  } else if (j.contains("bracket")) {
    fail(child(path, "bracket"), "only hom-poisson documents carry a bracket");
  }
  doc.alpha = parse_matrix(field(j, "alpha", path), doc.dim, child(path, "alpha"));
  return doc;
}

json scalar_json(const Scalar& s) { return s.str(); }

}  // namespace

json parse_json_text(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(source) + ": " + e.what());
  }
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path.string());
}

AlgebraDocument parse_algebra(const json& j) { return parse_algebra_at(j, ""); }

DeformationDocument parse_deformation(const json& j, const fs::path& base_dir) {
  require_object(j, "", {"schema_version", "base", "order", "terms"});
  check_version(j, "");
  DeformationDocument doc;
  const json& base = field(j, "base", "");
  if (base.is_string()) {
    doc.base_reference = base.get<std::string>();
    fs::path p = fs::path(*doc.base_reference);
    if (p.is_relative()) p = base_dir / p;
    json inner = read_json_file(p);
    try {
      doc.base = parse_algebra(inner);
    } catch (const ParseError& e) {
      throw ParseError(p.string() + " (referenced from /base): " + e.what());
    }
  } else {
    doc.base = parse_algebra_at(base, "/base");
  }
  if (doc.base.kind == DocumentKind::hom_poisson) fail("/base/kind", "a deformation base must be hom-associative or hom-lie");
  doc.order = parse_count(field(j, "order", ""), "/order");
  const json& terms = field(j, "terms", "");
  if (!terms.is_array()) fail("/terms", "expected a list of bilinear terms");
  if (terms.size() != doc.order)
    fail("/terms", "term count " + std::to_string(terms.size()) + " does not match order " + std::to_string(doc.order));
  for (std::size_t t = 0; t < terms.size(); ++t)
    doc.terms.push_back(parse_bilinear(terms[t], doc.base.dim, child("/terms", t)).as_cochain());
  return doc;
}

CochainDocument parse_cochain(const json& j) {
  require_object(j, "", {"schema_version", "dim", "arity", "entries"});
  check_version(j, "");
  std::size_t dim = parse_count(field(j, "dim", ""), "/dim");
  std::size_t arity = parse_count(field(j, "arity", ""), "/arity");
  if (dim == 0) fail("/dim", "dimension must be positive");
  if (arity == 0) fail("/arity", "arity must be at least 1");
  CochainDocument doc;
  doc.value = Cochain(arity, dim);
  const json& entries = field(j, "entries", "");
  if (!entries.is_array()) fail("/entries", "expected a list of {args, k, value} entries");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  Indices args(arity);
  for (std::size_t n = 0; n < entries.size(); ++n) {
    const std::string p = child("/entries", n);
    const json& e = entries[n];
    require_object(e, p, {"args", "k", "value"});
    const json& a = field(e, "args", p);
    if (!a.is_array() || a.size() != arity) fail(child(p, "args"), "expected " + std::to_string(arity) + " indices");
    for (std::size_t q = 0; q < arity; ++q) args[q] = parse_index(a[q], dim, child(child(p, "args"), q));
    std::size_t k = parse_index(field(e, "k", p), dim, child(p, "k"));
    std::size_t flat = doc.value.flat_input(args);
    if (!seen.insert({flat, k}).second) fail(p, "duplicate entry");
    doc.value.at_flat(flat, k) = parse_scalar(field(e, "value", p), child(p, "value"));
  }
  return doc;
}

AlgebraDocument load_algebra(const fs::path& path) {
  json j = read_json_file(path);
  try {
    return parse_algebra(j);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

DeformationDocument load_deformation(const fs::path& path) {
  json j = read_json_file(path);
  try {
    return parse_deformation(j, path.parent_path());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

CochainDocument load_cochain(const fs::path& path) {
  json j = read_json_file(path);
  try {
    return parse_cochain(j);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

json cochain_entries(const Cochain& c) {
  json out = json::array();
  std::size_t flat = 0;
  for_each_tuple(c.arity(), c.dim(), [&](std::span<const std::size_t> idx) {
    for (std::size_t k = 0; k < c.dim(); ++k) {
      const Scalar& v = c.at_flat(flat, k);
      if (v.is_zero()) continue;
      json e;
      e["args"] = json(std::vector<std::size_t>(idx.begin(), idx.end()));
      e["k"] = k;
      e["value"] = scalar_json(v);
      out.push_back(std::move(e));
    }
    ++flat;
  });
  return out;
}

json bilinear_entries(const Cochain& c) {
  if (c.arity() != 2) throw DimensionMismatch("bilinear_entries: cochain must be bilinear");
  json out = json::array();
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j)
      for (std::size_t k = 0; k < c.dim(); ++k) {
        const std::size_t idx[2] = {i, j};
        const Scalar& v = c.at(idx, k);
        if (v.is_zero()) continue;
        json e;
        e["i"] = i;
        e["j"] = j;
        e["k"] = k;
        e["value"] = scalar_json(v);
        out.push_back(std::move(e));
      }
  return out;
}

json to_json(const AlgebraDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["kind"] = std::string(to_string(doc.kind));
  j["dim"] = doc.dim;
  j["mu"] = bilinear_entries(doc.mu.as_cochain());
  if (doc.bracket) j["bracket"] = bilinear_entries(doc.bracket->as_cochain());
  json rows = json::array();
  for (std::size_t r = 0; r < doc.dim; ++r) rows.push_back(vector_json(doc.alpha.matrix().row(r)));
  j["alpha"] = std::move(rows);
  return j;
}

json to_json(const DeformationDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  if (doc.base_reference)
    j["base"] = *doc.base_reference;
  else
    j["base"] = to_json(doc.base);
  j["order"] = doc.order;
  json terms = json::array();
  for (const auto& t : doc.terms) terms.push_back(bilinear_entries(t));
  j["terms"] = std::move(terms);
  return j;
}

json to_json(const CochainDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["dim"] = doc.value.dim();
  j["arity"] = doc.value.arity();
  j["entries"] = cochain_entries(doc.value);
  return j;
}

HomAlgebra to_algebra(const AlgebraDocument& doc) {
  switch (doc.kind) {
    case DocumentKind::hom_associative:
      return HomAlgebra(AlgebraKind::associative, doc.mu, doc.alpha);
    case DocumentKind::hom_lie:
      return HomAlgebra(AlgebraKind::lie, doc.mu, doc.alpha);
    case DocumentKind::hom_poisson:
      break;
  }
  throw ParseError("a hom-poisson document does not describe a single Hom-algebra");
}

HomPoissonAlgebra to_poisson(const AlgebraDocument& doc) {
  if (doc.kind != DocumentKind::hom_poisson || !doc.bracket) throw ParseError("document is not hom-poisson");
  return HomPoissonAlgebra(doc.mu, *doc.bracket, doc.alpha);
}

Deformation to_deformation(const DeformationDocument& doc) {
  try {
    return Deformation(to_algebra(doc.base), doc.terms);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

AlgebraDocument document_from(const HomAlgebra& a) {
  AlgebraDocument doc;
  doc.kind = a.kind() == AlgebraKind::associative ? DocumentKind::hom_associative : DocumentKind::hom_lie;
  doc.dim = a.dim();
  doc.mu = a.mu();
  doc.alpha = a.alpha();
  return doc;
}

AlgebraDocument document_from(const HomPoissonAlgebra& p) {
  AlgebraDocument doc;
  doc.kind = DocumentKind::hom_poisson;
  doc.dim = p.dim();
  doc.mu = p.mu();
  doc.bracket = p.bracket();
  doc.alpha = p.alpha();
  return doc;
}

DeformationDocument document_from(const Deformation& d) {
  DeformationDocument doc;
  doc.base = document_from(d.base());
  doc.order = d.order();
  doc.terms = d.terms();
  return doc;
}

}  // namespace homcoh::cli
