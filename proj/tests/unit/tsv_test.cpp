// Copyright 2026 The sssomkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <fstream>
#include <iterator>
#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "sssom/errors.hpp"
#include "sssom/tsv.hpp"

namespace sssom {
namespace {

std::string slurp(const std::string& name) {
  std::ifstream f(std::string(SSSOM_TEST_DATA_DIR) + "/" + name, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

bool has_code(const std::vector<Diagnostic>& diags, std::string_view code) {
  return std::any_of(diags.begin(), diags.end(), [&](const auto& d) { return d.code == code; });
}

constexpr std::string_view kColumns = "subject_id\tpredicate_id\tobject_id\tmatch_type\n";

TEST(Tsv, EctoFixture) {
  const auto doc = parse_embedded(slurp("ecto.sssom.tsv"));
  ASSERT_EQ(doc.set.mappings.size(), 6u);
  const Mapping& first = doc.set.mappings[0];
  EXPECT_EQ(first.subject_id, (Curie{"CHEBI", "33282"}));
  EXPECT_EQ(first.predicate_id, (Curie{"owl", "equivalentClass"}));
  EXPECT_EQ(first.object_id, (Curie{"XCO", "0000483"}));
  EXPECT_EQ(first.confidence->text(), "0.500024776");
  EXPECT_EQ(first.subject_match_field, std::vector<Curie>{(Curie{"dc", "identifier"})});
  EXPECT_EQ(doc.set.license, "https://creativecommons.org/publicdomain/zero/1.0/");
  EXPECT_EQ(doc.set.mapping_date->str(), "2021-04-20");
  EXPECT_EQ(doc.rows_read, 6u);
  EXPECT_EQ(doc.rejected_rows, 0u);
}

TEST(Tsv, LexicalStemmingBecomesLexicalPlusStemming) {
  const auto doc = parse_embedded(slurp("ecto.sssom.tsv"));
  const Mapping& third = doc.set.mappings[2];
  EXPECT_EQ(third.match_type, MatchType::Lexical);
  EXPECT_EQ(third.preprocessing, std::vector<std::string>{"Stemming"});
  EXPECT_THROW(parse_embedded(slurp("ecto.sssom.tsv"), ParseMode::Strict), FatalParse);
}

TEST(Tsv, SetDefaultsFillRows) {
  const auto doc = parse_embedded(slurp("ecto.sssom.tsv"));
  for (const auto& m : doc.set.mappings) {
    EXPECT_EQ(m.mapping_tool, "rdf_matcher");  // the row cell overrides
    EXPECT_EQ(m.mapping_date->str(), "2021-04-20");
  }
}

TEST(Tsv, EmptyTable) {
  const auto doc = parse_embedded("#license: \"x\"\n" + std::string(kColumns));
  EXPECT_TRUE(doc.set.mappings.empty());
  EXPECT_EQ(doc.set.license, "x");
  for (const auto& d : doc.diagnostics) EXPECT_EQ(d.severity, Severity::Info) << d.code;
  EXPECT_TRUE(has_code(doc.diagnostics, "P006"));
}

TEST(Tsv, UnparseableConfidence) {
  const std::string text = std::string(kColumns.substr(0, kColumns.size() - 1)) +
                           "\tconfidence\nEX:1\tskos:exactMatch\tEX:2\tLexical\thigh\n";
  const auto doc = parse_embedded(text);
  ASSERT_EQ(doc.set.mappings.size(), 1u);
  EXPECT_FALSE(doc.set.mappings[0].confidence);
  EXPECT_TRUE(has_code(doc.diagnostics, "E012"));
  EXPECT_THROW(parse_embedded(text, ParseMode::Strict), FatalParse);
}

TEST(Tsv, ExternalModeMatchesEmbedded) {
  const auto embedded = parse_embedded(slurp("ecto.sssom.tsv"));
  const auto external = parse_external(slurp("ecto.tsv"), slurp("ecto.yml"));
  EXPECT_EQ(external.set, embedded.set);
  EXPECT_EQ(external.diagnostics, embedded.diagnostics);
  const auto combined = parse_embedded(embed(slurp("ecto.tsv"), slurp("ecto.yml")));
  EXPECT_EQ(combined.set, external.set);
  EXPECT_EQ(combined.set.mappings.size(), 6u);
}

TEST(Tsv, EmptyExternalHeader) {
  const auto doc = parse_external(slurp("ecto.tsv"), "");
  EXPECT_TRUE(doc.set.license.empty());
  EXPECT_TRUE(doc.set.curie_map.empty());
  EXPECT_TRUE(has_code(doc.diagnostics, "P005"));
  EXPECT_EQ(embed(slurp("ecto.tsv"), ""), slurp("ecto.tsv"));
}

TEST(Tsv, ConflictingHeadersEmbeddedWins) {
  const std::string body = "#license: A\n" + std::string(kColumns);
  const auto doc = parse_external(body, "license: B\n");
  EXPECT_EQ(doc.set.license, "A");
  EXPECT_TRUE(has_code(doc.diagnostics, "P004"));
  EXPECT_TRUE(has_code(doc.diagnostics, "P007"));
}

TEST(Tsv, FatalStructure) {
  EXPECT_THROW(parse_embedded("\xFF\xFE"), FatalParse);
  EXPECT_THROW(parse_embedded("#license: x\n"), FatalParse);
  EXPECT_THROW(parse_embedded("subject_id\tpredicate_id\tobject_id\n"), FatalParse);
  EXPECT_THROW(parse_embedded("subject_id\tsubject_id\tpredicate_id\tobject_id\tmatch_type\n"),
               FatalParse);
  EXPECT_THROW(parse_embedded(std::string(kColumns) + "#late: x\n"), FatalParse);
}

TEST(Tsv, BomAndCrlf) {
  const std::string text = "\xEF\xBB\xBF#license: \"x\"\r\nsubject_id\tpredicate_id\tobject_id\tmatch_type\r\n"
                           "EX:1\tskos:exactMatch\tEX:2\tLexical\r\n";
  const auto doc = parse_embedded(text);
  ASSERT_EQ(doc.set.mappings.size(), 1u);
  EXPECT_EQ(doc.set.mappings[0].match_type, MatchType::Lexical);
  EXPECT_TRUE(has_code(doc.diagnostics, "P002"));
  EXPECT_EQ(serialize_canonical(doc.set).find('\r'), std::string::npos);
}

TEST(Tsv, RowAccounting) {
  const std::string text = std::string(kColumns.substr(0, kColumns.size() - 1)) +
                           "\tpredicate_modifier\tconfidence\n"
                           "EX:1\tskos:exactMatch\tEX:2\tLexical\t\t0.5\n"   // kept
                           "EX:1\tskos:exactMatch\tEX:3\tLexical\n"          // P001
                           "EX 1\tskos:exactMatch\tEX:4\tLexical\t\t\n"      // E008, required
                           "EX:1\tskos:exactMatch\tEX:5\tLexical\tMaybe\t\n" // E010
                           "EX:1\tskos:exactMatch\tEX:6\tLexical\t\thigh\n"; // E012, kept
  const auto doc = parse_embedded(text);
  EXPECT_EQ(doc.rows_read, 5u);
  EXPECT_EQ(doc.set.mappings.size(), 2u);
  EXPECT_EQ(doc.rejected_rows, 3u);
  EXPECT_EQ(doc.rows_read, doc.set.mappings.size() + doc.rejected_rows);
  EXPECT_EQ(doc.source_rows, (std::vector<std::size_t>{1, 5}));
}

TEST(Tsv, UnknownColumnsAndKeysAreKept) {
  const std::string text = "#my_key: v\n" + std::string(kColumns.substr(0, kColumns.size() - 1)) +
                           "\tnote\nEX:1\tskos:exactMatch\tEX:2\tLexical\thello\n";
  const auto doc = parse_embedded(text);
  EXPECT_EQ(doc.set.set_extensions.at("my_key").scalar, "v");
  EXPECT_EQ(doc.set.mappings[0].extensions.at("note"), "hello");
  EXPECT_NE(serialize_canonical(doc.set).find("\tnote\n"), std::string::npos);
}

TEST(Tsv, SerializeEmptySet) {
  MappingSet set;
  set.license = "x";
  EXPECT_EQ(serialize_canonical(set), "#license: \"x\"\n" + std::string(kColumns));
}

TEST(Tsv, SerializeIsIndependentOfInputOrder) {
  const std::string a = "subject_id\tpredicate_id\tobject_id\tmatch_type\tcomment\n"
                        "EX:2\tskos:exactMatch\tEX:3\tLexical\tb\n"
                        "EX:1\tskos:exactMatch\tEX:3\tLexical\ta\n";
  const std::string b = "comment\tmatch_type\tobject_id\tpredicate_id\tsubject_id\n"
                        "a\tLexical\tEX:3\tskos:exactMatch\tEX:1\n"
                        "b\tLexical\tEX:3\tskos:exactMatch\tEX:2\n";
  EXPECT_EQ(serialize_canonical(parse_embedded(a).set), serialize_canonical(parse_embedded(b).set));
}

TEST(Tsv, SerializeRejectsUnrepresentableValues) {
  MappingSet set;
  Mapping m;
  m.subject_id = {"EX", "1"};
  m.predicate_id = {"skos", "exactMatch"};
  m.object_id = {"EX", "2"};
  m.match_type = MatchType::Lexical;
  m.comment = "a\tb";
  set.mappings.push_back(m);
  EXPECT_THROW(serialize_canonical(set), SerializationError);
  set.mappings[0].comment.clear();
  set.mappings[0].match_string = {"a|b"};
  EXPECT_THROW(serialize_canonical(set), SerializationError);
  set.mappings[0].match_string.clear();
  set.mappings[0].extensions["comment"] = "shadow";
  EXPECT_THROW(serialize_canonical(set), SerializationError);
}

TEST(Tsv, EctoIsAFixedPoint) {
  const auto once = serialize_canonical(parse_embedded(slurp("ecto.sssom.tsv")).set);
  EXPECT_EQ(serialize_canonical(parse_embedded(once).set), once);
  EXPECT_NE(once.find("0.500042380"), std::string::npos);
}

TEST(TsvProperty, RoundTripSmallSample) {
  testing::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const MappingSet s = testing::random_mapping_set(rng);
    const std::string text = serialize_canonical(s);
    const auto doc = parse_embedded(text);
    ASSERT_EQ(doc.set, s) << text;
    ASSERT_EQ(serialize_canonical(doc.set), text);
  }
}

TEST(TsvProperty, EmbedThenParseEqualsExternal) {
  testing::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const std::string text = serialize_canonical(testing::random_mapping_set(rng));
    const auto split = text.find("subject_id\t");
    std::string header;
    for (std::size_t pos = 0; pos < split;) {
      const auto eol = text.find('\n', pos);
      header += text.substr(pos + 1, eol - pos);
      pos = eol + 1;
    }
    const std::string body = text.substr(split);
    const auto a = parse_external(body, header);
    const auto b = parse_embedded(embed(body, header));
    EXPECT_EQ(a.set, b.set);
    EXPECT_EQ(a.set, parse_embedded(text).set);
  }
}

}  // namespace
}  // namespace sssom
