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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "sssom/errors.hpp"
#include "sssom/export.hpp"
#include "sssom/matcher.hpp"
#include "sssom/transforms.hpp"
#include "sssom/tsv.hpp"
#include "sssom/validator.hpp"
#include "sssom/walker.hpp"

namespace sssom::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  // Global.
  std::string set_id;
  std::string license;
  bool strict = false;

  std::vector<std::string> files;
  std::string header;

  // validate
  std::string format = "text";
  bool no_fail = false;
  std::string cardinality;
  std::vector<std::string> severities;

  // convert
  std::string to = "tsv";
  bool emit_direct = false;

  // merge
  std::string on_prefix_conflict = "error";

  // filter
  std::optional<double> min_confidence;
  std::vector<std::string> predicates;
  std::vector<std::string> tiers;
  std::vector<std::string> match_types;
  std::vector<std::string> subject_prefixes;
  std::vector<std::string> object_prefixes;
  bool exclude_negated = false;

  // walk, closure
  std::vector<std::string> starts;
  std::optional<std::size_t> max_distance;
  std::string tool_name;

  // match
  std::string left;
  std::string right;
  std::vector<std::string> preprocess;
  std::vector<std::string> pairs;
  std::string predicate = "skos:exactMatch";
  std::string tool_version;
  std::string date;

  // embed
  std::string tsv;
};

bool builtin_prefixes_enabled() {
  const char* value = std::getenv("SSSOM_BUILTIN_PREFIXES");
  return !(value && std::string_view(value) == "off");
}

class Session {
 public:
  Session(const Options& opts, std::ostream& out, std::ostream& err, std::istream& in)
      : opts_(opts), out_(out), err_(err), in_(in) {}

  ParseMode mode() const { return opts_.strict ? ParseMode::Strict : ParseMode::Lenient; }

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw UsageError("standard input can only be read once");
      stdin_used_ = true;
      return std::string(std::istreambuf_iterator<char>(in_), {});
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
  }

  ParsedDocument load_document(const std::string& path, const std::string& header = "") {
    const std::string body = read(path);
    if (header.empty()) return parse_embedded(body, mode());
    return parse_external(body, read(header), mode());
  }

  // Parse findings at Warning level or above go to stderr.
  MappingSet load(const std::string& path, const std::string& header = "") {
    ParsedDocument doc = load_document(path, header);
    std::vector<Diagnostic> shown;
    for (const auto& d : doc.diagnostics)
      if (d.severity != Severity::Info) shown.push_back(d);
    report(path, shown);
    return std::move(doc.set);
  }

  void report(const std::string& path, const std::vector<Diagnostic>& diagnostics) {
    std::istringstream lines(format_text(diagnostics));
    for (std::string line; std::getline(lines, line);) err_ << path << ": " << line << '\n';
  }

  void emit(MappingSet set) {
    if (!opts_.set_id.empty()) set.mapping_set_id = opts_.set_id;
    if (!opts_.license.empty()) set.license = opts_.license;
    out_ << serialize_canonical(set);
  }

  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
  std::istream& in_;
  bool stdin_used_ = false;
};

Curie parse_curie_arg(const std::string& text, std::string_view what) {
  auto c = Curie::parse(text);
  if (!c || !c->well_formed()) throw UsageError(std::string(what) + ": malformed CURIE '" + text + "'");
  return *c;
}

std::set<PredicateTier> parse_tiers(const std::vector<std::string>& names) {
  std::set<PredicateTier> tiers;
  for (const auto& name : names) {
    auto t = parse_tier(name);
    if (!t || *t == PredicateTier::Unknown) throw UsageError("unknown tier '" + name + "'");
    tiers.insert(*t);
  }
  return tiers;
}

WalkQuery walk_query(const Options& o, std::size_t default_distance) {
  WalkQuery q;
  q.max_distance = o.max_distance.value_or(default_distance);
  if (!o.tiers.empty()) q.tier_filter = parse_tiers(o.tiers);
  if (o.min_confidence) q.min_confidence = *o.min_confidence;
  return q;
}

std::string confidence_text(double value) { return Decimal::from_double(value).text(); }

// ---------------------------------------------------------------------------
// Subcommands

int cmd_parse(Session& s) {
  s.emit(s.load(s.opts_.files.front(), s.opts_.header));
  return kExitOk;
}

int cmd_validate(Session& s) {
  const Options& o = s.opts_;
  RuleConfig cfg;
  cfg.mode = s.mode();
  cfg.use_builtin_prefixes = builtin_prefixes_enabled();
  if (!o.cardinality.empty()) {
    if (o.cardinality == "subject-unique") cfg.cardinality = CardinalityPolicy::SubjectUnique;
    else if (o.cardinality == "object-unique") cfg.cardinality = CardinalityPolicy::ObjectUnique;
    else if (o.cardinality == "one-to-one") cfg.cardinality = CardinalityPolicy::OneToOne;
    else throw UsageError("unknown cardinality policy '" + o.cardinality + "'");
  }
  for (const auto& spec : o.severities) {
    const auto eq = spec.find('=');
    const auto level = eq == std::string::npos ? std::nullopt : parse_severity(spec.substr(eq + 1));
    if (!level) throw UsageError("--severity expects CODE=error|warning|info, got '" + spec + "'");
    cfg.severity_overrides[spec.substr(0, eq)] = *level;
  }

  // Strict parsing must still report findings rather than abort, so parse
  // leniently and let the validator apply strict severities.
  const std::string body = s.read(o.files.front());
  ParsedDocument doc = o.header.empty() ? parse_embedded(body, ParseMode::Lenient)
                                        : parse_external(body, s.read(o.header), ParseMode::Lenient);
  if (s.mode() == ParseMode::Strict) {
    for (auto& d : doc.diagnostics)
      if (d.code == "E005") d.severity = Severity::Error;
  }
  const auto diagnostics = validate_document(doc, cfg);
  s.out_ << (o.format == "json" ? format_json(diagnostics) + "\n" : format_text(diagnostics));
  return has_errors(diagnostics) && !o.no_fail ? kExitFindings : kExitOk;
}

int cmd_convert(Session& s) {
  const Options& o = s.opts_;
  MappingSet set = s.load(o.files.front(), o.header);
  if (!o.set_id.empty()) set.mapping_set_id = o.set_id;
  if (!o.license.empty()) set.license = o.license;
  if (o.to == "tsv")
    s.out_ << serialize_canonical(set);
  else if (o.to == "json")
    s.out_ << to_json(set);
  else
    s.out_ << to_ntriples(set, o.emit_direct, builtin_prefixes_enabled());
  return kExitOk;
}

int cmd_merge(Session& s) {
  const Options& o = s.opts_;
  std::vector<MappingSet> sets;
  for (const auto& f : o.files) sets.push_back(s.load(f));
  const auto policy =
      o.on_prefix_conflict == "first-wins" ? PrefixConflictPolicy::FirstWins : PrefixConflictPolicy::Error;
  auto result = merge(sets, policy, o.set_id.empty() ? std::nullopt : std::optional(o.set_id));
  s.report("merge", result.warnings);
  s.emit(std::move(result.set));
  return kExitOk;
}

void write_keys(std::ostream& out, const char* marker, const std::vector<MappingKey>& keys) {
  for (const auto& k : keys) out << marker << ' ' << k.str() << '\n';
}

int cmd_diff(Session& s) {
  const Options& o = s.opts_;
  if (o.files.size() != 2) throw UsageError("diff takes exactly two files");
  const auto report = diff(s.load(o.files[0]), s.load(o.files[1]));
  if (o.format == "json") {
    auto keys = [](const std::vector<MappingKey>& ks) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& k : ks) arr.push_back(k.str());
      return arr;
    };
    nlohmann::ordered_json j;
    j["common"] = keys(report.common);
    j["only_left"] = keys(report.only_left);
    j["only_right"] = keys(report.only_right);
    j["predicate_conflicts"] = nlohmann::ordered_json::array();
    for (const auto& c : report.predicate_conflicts)
      j["predicate_conflicts"].push_back({{"subject_id", c.subject_id.str()},
                                          {"object_id", c.object_id.str()},
                                          {"left_predicate", c.left_predicate.str()},
                                          {"right_predicate", c.right_predicate.str()}});
    s.out_ << j.dump(2) << '\n';
    return kExitOk;
  }
  s.out_ << "common " << report.common.size() << '\n'
         << "only_left " << report.only_left.size() << '\n'
         << "only_right " << report.only_right.size() << '\n'
         << "predicate_conflicts " << report.predicate_conflicts.size() << '\n';
  write_keys(s.out_, "<", report.only_left);
  write_keys(s.out_, ">", report.only_right);
  for (const auto& c : report.predicate_conflicts)
    s.out_ << "! " << c.subject_id.str() << ' ' << c.object_id.str() << ' '
           << c.left_predicate.str() << ' ' << c.right_predicate.str() << '\n';
  return kExitOk;
}

int cmd_invert(Session& s) {
  auto result = invert(s.load(s.opts_.files.front(), s.opts_.header));
  for (const auto& k : result.dropped)
    s.err_ << "invert: no inverse for predicate, dropped " << k.str() << '\n';
  s.emit(std::move(result.set));
  return kExitOk;
}

int cmd_filter(Session& s) {
  const Options& o = s.opts_;
  FilterCriteria c;
  c.min_confidence = o.min_confidence;
  if (!o.predicates.empty()) {
    c.predicates.emplace();
    for (const auto& p : o.predicates) c.predicates->insert(parse_curie_arg(p, "--predicate"));
  }
  if (!o.tiers.empty()) c.tiers = parse_tiers(o.tiers);
  if (!o.match_types.empty()) {
    c.match_types.emplace();
    for (const auto& name : o.match_types) {
      auto t = parse_match_type(name);
      if (!t) throw UsageError("unknown match type '" + name + "'");
      c.match_types->insert(*t);
    }
  }
  if (!o.subject_prefixes.empty())
    c.subject_prefixes.emplace(o.subject_prefixes.begin(), o.subject_prefixes.end());
  if (!o.object_prefixes.empty())
    c.object_prefixes.emplace(o.object_prefixes.begin(), o.object_prefixes.end());
  c.exclude_negated = o.exclude_negated;

  auto result = filter(s.load(o.files.front(), o.header), c);
  if (result.skipped_without_confidence > 0)
    s.err_ << "filter: " << result.skipped_without_confidence
           << " rows without confidence did not pass --min-confidence\n";
  s.emit(std::move(result.set));
  return kExitOk;
}

MappingGraph load_graph(Session& s) {
  std::vector<MappingSet> sets;
  for (const auto& f : s.opts_.files) sets.push_back(s.load(f));
  return build_graph(sets);
}

int cmd_walk(Session& s) {
  const Options& o = s.opts_;
  if (o.starts.size() != 1) throw UsageError("walk takes exactly one --start");
  const Curie start = parse_curie_arg(o.starts.front(), "--start");
  const MappingGraph graph = load_graph(s);
  for (const auto& r : neighbors(graph, start, walk_query(o, 1)))
    s.out_ << r.target.str() << '\t' << to_string(r.tier) << '\t' << r.distance << '\t'
           << confidence_text(r.confidence) << '\t' << render_path(r) << '\n';
  return kExitOk;
}

int cmd_closure(Session& s) {
  const Options& o = s.opts_;
  std::vector<Curie> starts;
  for (const auto& c : o.starts) starts.push_back(parse_curie_arg(c, "--start"));
  const std::string tool = o.tool_name.empty() ? "sssom-closure" : o.tool_name;
  s.emit(closure(load_graph(s), walk_query(o, 2), tool, starts));
  return kExitOk;
}

TermTable load_terms(Session& s, const std::string& path) {
  auto loaded = load_term_table(s.read(path));
  s.report(path, loaded.notes);
  return std::move(loaded.table);
}

int cmd_match(Session& s) {
  const Options& o = s.opts_;
  MatchConfig cfg;
  for (const auto& name : o.preprocess) {
    auto t = parse_preprocessing_token(name);
    if (!t) throw UsageError("unknown preprocessing token '" + name + "'");
    cfg.preprocessing.push_back(*t);
  }
  if (!o.pairs.empty()) {
    cfg.field_pairs.clear();
    for (const auto& name : o.pairs) {
      auto p = parse_field_pair(name);
      if (!p) throw UsageError("unknown field pair '" + name + "'");
      cfg.field_pairs.insert(*p);
    }
  }
  cfg.predicate = parse_curie_arg(o.predicate, "--predicate");
  if (!o.tool_name.empty()) cfg.tool_name = o.tool_name;
  cfg.tool_version = o.tool_version;
  if (!o.date.empty()) {
    cfg.run_date = Date::parse(o.date);
    if (!cfg.run_date) throw UsageError("--date expects YYYY-MM-DD, got '" + o.date + "'");
  }
  const TermTable left = load_terms(s, o.left);
  const TermTable right = load_terms(s, o.right);
  s.emit(match(left, right, cfg));
  return kExitOk;
}

int cmd_embed(Session& s) {
  const Options& o = s.opts_;
  const std::string body = s.read(o.tsv);
  const std::string header = s.read(o.header);
  const std::string embedded = embed(body, header);
  // Refuse to write something that would not read back.
  parse_embedded(embedded, s.mode());
  s.out_ << embedded;
  return kExitOk;
}

int cmd_stats(Session& s) {
  const MappingSet set = s.load(s.opts_.files.front(), s.opts_.header);
  std::map<std::string, std::size_t> predicates, tiers, match_types;
  std::map<std::pair<std::string, std::string>, std::size_t> sources;
  for (const auto& m : set.mappings) {
    ++predicates[m.predicate_id.str()];
    ++tiers[std::string(to_string(predicate_tier(m.predicate_id)))];
    ++match_types[m.match_type ? std::string(to_string(*m.match_type))
                               : m.unknown_match_type.empty() ? "-" : m.unknown_match_type];
    ++sources[{m.subject_source.empty() ? "-" : m.subject_source,
               m.object_source.empty() ? "-" : m.object_source}];
  }
  s.out_ << "rows\t" << set.mappings.size() << '\n';
  for (const auto& [k, n] : predicates) s.out_ << "predicate\t" << k << '\t' << n << '\n';
  for (const auto& [k, n] : tiers) s.out_ << "tier\t" << k << '\t' << n << '\n';
  for (const auto& [k, n] : match_types) s.out_ << "match_type\t" << k << '\t' << n << '\n';
  for (const auto& [k, n] : sources)
    s.out_ << "source_pair\t" << k.first << '\t' << k.second << '\t' << n << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  Options o;
  CLI::App app{"Read, validate, transform, walk and generate SSSOM mapping sets."};
  app.name("sssom");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default(false);
  app.add_option("--set-id", o.set_id, "mapping_set_id of the written set");
  app.add_option("--license", o.license, "license of the written set");
  app.add_flag("--strict", o.strict, "reject rows with unknown match types and fail on parse errors");

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", o.files, "SSSOM TSV file, or - for stdin")->required()->expected(1);
  };
  auto header_arg = [&](CLI::App* sub) {
    sub->add_option("--header", o.header, "external YAML metadata file");
  };
  auto walk_args = [&](CLI::App* sub) {
    sub->add_option("files", o.files, "SSSOM TSV files forming the graph")->required();
    sub->add_option("--max-distance", o.max_distance, "maximum hop count (walk 1, closure 2)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tier", o.tiers, "keep results of this tier (repeatable)");
    sub->add_option("--min-confidence", o.min_confidence, "minimum path confidence");
  };

  auto* parse = app.add_subcommand("parse", "write the canonical TSV form");
  file_arg(parse);
  header_arg(parse);

  auto* validate = app.add_subcommand("validate", "report rule violations");
  file_arg(validate);
  header_arg(validate);
  validate->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  validate->add_flag("--no-fail", o.no_fail, "exit 0 even with Error findings");
  validate->add_option("--cardinality", o.cardinality, "subject-unique, object-unique or one-to-one");
  validate->add_option("--severity", o.severities, "override a rule severity, CODE=LEVEL");

  auto* convert = app.add_subcommand("convert", "export to TSV, JSON or N-Triples");
  file_arg(convert);
  header_arg(convert);
  convert->add_option("--to", o.to, "tsv, json or ntriples")
      ->check(CLI::IsMember({"tsv", "json", "ntriples"}));
  convert->add_flag("--emit-direct", o.emit_direct, "also emit subject-predicate-object triples");

  auto* merge_cmd = app.add_subcommand("merge", "combine mapping sets");
  merge_cmd->add_option("files", o.files, "SSSOM TSV files")->required();
  merge_cmd->add_option("--on-prefix-conflict", o.on_prefix_conflict, "error or first-wins")
      ->check(CLI::IsMember({"error", "first-wins"}));

  auto* diff_cmd = app.add_subcommand("diff", "compare two mapping sets");
  diff_cmd->add_option("files", o.files, "left and right files")->required()->expected(2);
  diff_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* invert_cmd = app.add_subcommand("invert", "swap subjects and objects");
  file_arg(invert_cmd);
  header_arg(invert_cmd);

  auto* filter_cmd = app.add_subcommand("filter", "keep rows matching every criterion");
  file_arg(filter_cmd);
  header_arg(filter_cmd);
  filter_cmd->add_option("--min-confidence", o.min_confidence, "minimum confidence");
  filter_cmd->add_option("--predicate", o.predicates, "predicate CURIE (repeatable)");
  filter_cmd->add_option("--tier", o.tiers, "predicate tier (repeatable)");
  filter_cmd->add_option("--match-type", o.match_types, "match type (repeatable)");
  filter_cmd->add_option("--subject-prefix", o.subject_prefixes, "subject prefix (repeatable)");
  filter_cmd->add_option("--object-prefix", o.object_prefixes, "object prefix (repeatable)");
  filter_cmd->add_flag("--exclude-negated", o.exclude_negated, "drop rows with predicate_modifier Not");

  auto* walk = app.add_subcommand("walk", "best paths from one term");
  walk_args(walk);
  walk->add_option("--start", o.starts, "start CURIE")->required()->expected(1);

  auto* closure_cmd = app.add_subcommand("closure", "derive mappings along paths of two or more hops");
  walk_args(closure_cmd);
  closure_cmd->add_option("--start", o.starts, "restrict to these start CURIEs (repeatable)");
  closure_cmd->add_option("--tool-name", o.tool_name, "mapping_tool of derived rows");

  auto* match_cmd = app.add_subcommand("match", "lexical matching of two term tables");
  match_cmd->add_option("--left", o.left, "left term table")->required();
  match_cmd->add_option("--right", o.right, "right term table")->required();
  match_cmd->add_option("--preprocess", o.preprocess, "preprocessing token, applied in order");
  match_cmd->add_option("--pair", o.pairs, "field pair such as label/exactSynonym (repeatable)");
  match_cmd->add_option("--predicate", o.predicate, "predicate of emitted rows");
  match_cmd->add_option("--tool-name", o.tool_name, "mapping_tool of emitted rows");
  match_cmd->add_option("--tool-version", o.tool_version, "mapping_tool_version of emitted rows");
  match_cmd->add_option("--date", o.date, "mapping_date of emitted rows, YYYY-MM-DD");

  auto* embed_cmd = app.add_subcommand("embed", "turn an external-mode pair into one file");
  embed_cmd->add_option("--tsv", o.tsv, "mapping table")->required();
  embed_cmd->add_option("--header", o.header, "YAML metadata")->required();

  auto* stats = app.add_subcommand("stats", "row counts by predicate, tier, match type and sources");
  file_arg(stats);
  header_arg(stats);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "sssom: " << e.what() << '\n';
    return kExitFailure;
  }

  Session s(o, out, err, in);
  try {
    if (*parse) return cmd_parse(s);
    if (*validate) return cmd_validate(s);
    if (*convert) return cmd_convert(s);
    if (*merge_cmd) return cmd_merge(s);
    if (*diff_cmd) return cmd_diff(s);
    if (*invert_cmd) return cmd_invert(s);
    if (*filter_cmd) return cmd_filter(s);
    if (*walk) return cmd_walk(s);
    if (*closure_cmd) return cmd_closure(s);
    if (*match_cmd) return cmd_match(s);
    if (*embed_cmd) return cmd_embed(s);
    if (*stats) return cmd_stats(s);
  } catch (const std::exception& e) {
    err << "sssom: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace sssom::cli
