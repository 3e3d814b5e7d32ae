#include <gtest/gtest.h>

#include <string>

#include "homcoh/cli/document.hpp"
#include "homcoh/errors.hpp"
#include "support/corpus.hpp"

using namespace homcoh;
using namespace homcoh::cli;

namespace {

std::string data(const char* name) { return std::string(HOMCOH_TEST_DATA_DIR) + "/" + name; }

json algebra_json() { return read_json_file(data("assoc2dim_1_m1.json")); }

void expect_parse_error(const json& j, const std::string& fragment) {
  try {
    parse_algebra(j);
    ADD_FAILURE() << "expected a parse error containing " << fragment;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(AlgebraDocument, ParsesTheWorkedExample) {
  AlgebraDocument doc = load_algebra(data("assoc2dim_1_m1.json"));
  EXPECT_EQ(doc.kind, DocumentKind::hom_associative);
  EXPECT_EQ(doc.dim, 2u);
  EXPECT_EQ(to_algebra(doc), homcoh::testing::assoc2dim(1, -1));
}

TEST(AlgebraDocument, RoundTripsThroughJson) {
  for (const char* f : {"assoc2dim_1_m1.json", "assoc2dim_1_2.json", "sl2_zero_twist.json", "zero_dim1.json",
                        "hompoisson3_all_ones.json", "poisson_witness_base.json"}) {
    AlgebraDocument doc = load_algebra(data(f));
    json once = to_json(doc);
    AlgebraDocument again = parse_algebra(once);
    EXPECT_EQ(again, doc) << f;
    EXPECT_EQ(to_json(again), once) << f;
  }
}

TEST(AlgebraDocument, RoundTripsTheCorpus) {
  for (const auto& [name, a] : homcoh::testing::associative_corpus())
    EXPECT_EQ(to_algebra(parse_algebra(to_json(document_from(a)))), a) << name;
  for (const auto& [name, a] : homcoh::testing::lie_corpus())
    EXPECT_EQ(to_algebra(parse_algebra(to_json(document_from(a)))), a) << name;
}

TEST(AlgebraDocument, IntegerScalarsAccepted) {
  json j = algebra_json();
  j["alpha"] = json::array({json::array({1, 0}), json::array({-1, 0})});
  EXPECT_EQ(to_algebra(parse_algebra(j)), homcoh::testing::assoc2dim(1, -1));
}

TEST(AlgebraDocument, Diagnostics) {
  json j = algebra_json();
  j["extra"] = 1;
  expect_parse_error(j, "unknown field \"extra\"");

  j = algebra_json();
  j.erase("alpha");
  expect_parse_error(j, "missing field \"alpha\"");

  j = algebra_json();
  j["schema_version"] = "2";
  expect_parse_error(j, "/schema_version");

  j = algebra_json();
  j["mu"].push_back(j["mu"][0]);
  expect_parse_error(j, "duplicate entry (0,0,0)");

  j = algebra_json();
  j["mu"][1]["k"] = 2;
  expect_parse_error(j, "/mu/1/k");

  j = algebra_json();
  j["mu"][0]["value"] = "1/0";
  expect_parse_error(j, "/mu/0/value");

  j = algebra_json();
  j["mu"][0]["value"] = 0.5;
  expect_parse_error(j, "/mu/0/value");

  j = algebra_json();
  j["alpha"][1] = json::array({"1"});
  expect_parse_error(j, "/alpha/1");

  j = algebra_json();
  j["kind"] = "hom-jordan";
  expect_parse_error(j, "/kind");

  j = algebra_json();
  j["bracket"] = json::array();
  expect_parse_error(j, "only hom-poisson documents carry a bracket");

  j = algebra_json();
  j["dim"] = 0;
  expect_parse_error(j, "/dim");
}

TEST(AlgebraDocument, MalformedTextReportsSource) {
  try {
    parse_json_text("{\"dim\": ", "broken.json");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("broken.json"), std::string::npos);
  }
  EXPECT_THROW(load_algebra(data("no_such_file.json")), ParseError);
}

TEST(AlgebraDocument, PoissonConversion) {
  AlgebraDocument doc = load_algebra(data("hompoisson3_valid.json"));
  const Scalar p[10] = {0, 1, 0, 0, 0, 0, 0, 0, 0, 1};
  EXPECT_EQ(to_poisson(doc), std::get<HomPoissonAlgebra>(build_example(ExampleName::hompoisson3, p)));
  EXPECT_THROW(to_algebra(doc), ParseError);
  EXPECT_THROW(to_poisson(load_algebra(data("assoc2dim_1_m1.json"))), ParseError);
}

TEST(DeformationDocument, FileReferenceBase) {
  DeformationDocument doc = load_deformation(data("poisson_witness_order1.json"));
  EXPECT_EQ(doc.order, 1u);
  ASSERT_TRUE(doc.base_reference.has_value());
  EXPECT_EQ(*doc.base_reference, "poisson_witness_base.json");
  Deformation d = to_deformation(doc);
  EXPECT_EQ(d.base(), homcoh::testing::poisson_witness_base());
  EXPECT_EQ(d.term(1), homcoh::testing::poisson_witness_term());
}

TEST(DeformationDocument, RoundTrip) {
  for (const char* f : {"poisson_witness_order1.json", "worked_example_zero_terms.json"}) {
    DeformationDocument doc = load_deformation(data(f));
    json once = to_json(doc);
    DeformationDocument again = parse_deformation(once, HOMCOH_TEST_DATA_DIR);
    EXPECT_EQ(to_deformation(again), to_deformation(doc)) << f;
    EXPECT_EQ(to_json(again), once) << f;
  }
  Deformation d(homcoh::testing::poisson_witness_base(), {homcoh::testing::poisson_witness_term()});
  EXPECT_EQ(to_deformation(parse_deformation(to_json(document_from(d)))), d);
}

TEST(DeformationDocument, Diagnostics) {
  json j = read_json_file(data("worked_example_zero_terms.json"));
  j["order"] = 3;
  EXPECT_THROW(parse_deformation(j, HOMCOH_TEST_DATA_DIR), ParseError);

  j = read_json_file(data("worked_example_zero_terms.json"));
  j["base"] = "missing_base.json";
  EXPECT_THROW(parse_deformation(j, HOMCOH_TEST_DATA_DIR), ParseError);

  j = read_json_file(data("worked_example_zero_terms.json"));
  j["base"] = read_json_file(data("hompoisson3_valid.json"));
  EXPECT_THROW(parse_deformation(j, HOMCOH_TEST_DATA_DIR), ParseError);

  // A term that is not alpha-equivariant is rejected on conversion.
  j = read_json_file(data("worked_example_zero_terms.json"));
  j["terms"][0] = json::array({{{"i", 1}, {"j", 1}, {"k", 0}, {"value", "1"}}});
  EXPECT_THROW(to_deformation(parse_deformation(j, HOMCOH_TEST_DATA_DIR)), ParseError);
}

TEST(CochainDocument, ParseAndRoundTrip) {
  CochainDocument doc = load_cochain(data("assoc2dim_mu_cochain.json"));
  EXPECT_EQ(doc.value, homcoh::testing::assoc2dim(1, -1).mu().as_cochain());
  EXPECT_EQ(parse_cochain(to_json(doc)), doc);
  EXPECT_TRUE(load_cochain(data("zero_bilinear_cochain.json")).value.is_zero());
}

TEST(CochainDocument, Diagnostics) {
  json j = read_json_file(data("assoc2dim_mu_cochain.json"));
  j["entries"][0]["args"] = json::array({0});
  EXPECT_THROW(parse_cochain(j), ParseError);
  j = read_json_file(data("assoc2dim_mu_cochain.json"));
  j["entries"].push_back(j["entries"][0]);
  EXPECT_THROW(parse_cochain(j), ParseError);
  j = read_json_file(data("assoc2dim_mu_cochain.json"));
  j["arity"] = 0;
  EXPECT_THROW(parse_cochain(j), ParseError);
}

TEST(Entries, SparseAndExact) {
  Cochain c(1, 2);
  c.at(Indices{1}, 0) = Scalar(-2, 6);
  json e = cochain_entries(c);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0]["args"], json::array({1}));
  EXPECT_EQ(e[0]["k"], 0);
  EXPECT_EQ(e[0]["value"], "-1/3");
  EXPECT_THROW(bilinear_entries(c), DimensionMismatch);
}
