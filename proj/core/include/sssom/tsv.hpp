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

#ifndef SSSOM_TSV_HPP_
#define SSSOM_TSV_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sssom/diagnostic.hpp"
#include "sssom/model.hpp"
#include "sssom/vocabulary.hpp"

namespace sssom {

struct ParsedDocument {
  MappingSet set;
  std::vector<std::string> column_order;
  std::vector<Diagnostic> diagnostics;
  // Data row (1-based, as counted in the file) behind each entry of set.mappings.
  std::vector<std::size_t> source_rows;
  std::size_t rows_read = 0;
  std::size_t rejected_rows = 0;
};

// Reads a TSV file whose metadata header is embedded as leading `#` lines.
//
// Row problems are diagnostics in lenient mode; in strict mode any
// Error-severity diagnostic, or a match_type outside the five canonical
// values, throws FatalParse. Structural problems (invalid UTF-8, missing or
// duplicate columns, a `#` line after the column header) always throw.
ParsedDocument parse_embedded(std::string_view input, ParseMode mode = ParseMode::Lenient);

// External mode: the header is a separate YAML file. Identical to
// parse_embedded(embed(tsv, header)), plus P007 when the body carries its
// own header and P004 for every key both sources define differently (the
// embedded value wins).
ParsedDocument parse_external(std::string_view tsv, std::string_view header,
                              ParseMode mode = ParseMode::Lenient);

// Prefixes every header line with `#` and appends the body byte for byte.
std::string embed(std::string_view tsv, std::string_view header);

// Deterministic rendering of a set. Throws SerializationError for values
// that TSV cannot carry (tab, CR, LF; `|` or empty items in list slots).
std::string serialize_canonical(const MappingSet& set);

// Canonical row order: rendered cells compared column by column.
void sort_canonical(std::vector<Mapping>& mappings);

}  // namespace sssom

#endif  // SSSOM_TSV_HPP_
