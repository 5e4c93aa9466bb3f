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

#include "sssom/header.hpp"

#include <algorithm>

#include "sssom/errors.hpp"

namespace sssom {
namespace {

struct Line {
  std::size_t number;  // 1-based among header lines
  std::size_t indent;
  std::string_view content;  // without indentation
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw FatalParse("header line " + std::to_string(line.number) + ": " + what);
}

void append_code_point(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Reads a quoted scalar starting at text[0]; returns the decoded value and
// sets `consumed` to the number of bytes used, closing quote included.
std::string read_quoted(const Line& line, std::string_view text, std::size_t& consumed) {
  const char quote = text[0];
  std::string out;
  std::size_t i = 1;
  while (i < text.size()) {
    const char c = text[i];
    if (quote == '\'') {
      if (c == '\'') {
        if (i + 1 < text.size() && text[i + 1] == '\'') {
          out.push_back('\'');
          i += 2;
          continue;
        }
        consumed = i + 1;
        return out;
      }
      out.push_back(c);
      ++i;
      continue;
    }
    if (c == '"') {
      consumed = i + 1;
      return out;
    }
    if (c != '\\') {
      out.push_back(c);
      ++i;
      continue;
    }
    if (i + 1 >= text.size()) fail(line, "dangling escape in quoted scalar");
    const char e = text[i + 1];
    i += 2;
    switch (e) {
      case '"': out.push_back('"'); break;
      case '\\': out.push_back('\\'); break;
      case '/': out.push_back('/'); break;
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case 'r': out.push_back('\r'); break;
      case '0': out.push_back('\0'); break;
      case 'u': {
        if (i + 4 > text.size()) fail(line, "short \\u escape");
        unsigned long cp = 0;
        for (std::size_t k = 0; k < 4; ++k) {
          const char h = text[i + k];
          cp <<= 4;
          if (h >= '0' && h <= '9') cp |= static_cast<unsigned long>(h - '0');
          else if (h >= 'a' && h <= 'f') cp |= static_cast<unsigned long>(h - 'a' + 10);
          else if (h >= 'A' && h <= 'F') cp |= static_cast<unsigned long>(h - 'A' + 10);
          else fail(line, "bad \\u escape");
        }
        i += 4;
        append_code_point(out, cp);
        break;
      }
      default:
        fail(line, std::string("unsupported escape \\") + e);
    }
  }
  fail(line, "unterminated quoted scalar");
}

// Only whitespace or a `#` comment may follow a closing quote.
void expect_end(const Line& line, std::string_view rest) {
  rest = trim(rest);
  if (!rest.empty() && rest[0] != '#') fail(line, "unexpected text after quoted scalar");
}

std::string parse_scalar(const Line& line, std::string_view text) {
  text = trim(text);
  if (text.empty()) return {};
  switch (text[0]) {
    case '"':
    case '\'': {
      std::size_t consumed = 0;
      std::string value = read_quoted(line, text, consumed);
      expect_end(line, text.substr(consumed));
      return value;
    }
    case '&':
    case '*': fail(line, "anchors and aliases are not supported");
    case '[':
    case '{': fail(line, "flow collections are not supported");
    case '|':
    case '>': fail(line, "block scalars are not supported");
    case '!': fail(line, "tags are not supported");
    default: break;
  }
  // Bare scalar: an inline comment starts at " #".
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] == '#' && (text[i - 1] == ' ' || text[i - 1] == '\t')) {
      text = trim(text.substr(0, i));
      break;
    }
  }
  return std::string(text);
}

struct KeyValue {
  std::string key;
  std::string_view rest;  // after the colon, untrimmed
};

bool is_list_item(std::string_view content) {
  return content == "-" || content.starts_with("- ") || content.starts_with("-\t");
}

KeyValue split_key(const Line& line) {
  std::string_view c = line.content;
  if (c[0] == '"' || c[0] == '\'') {
    std::size_t consumed = 0;
    std::string key = read_quoted(line, c, consumed);
    std::string_view after = c.substr(consumed);
    const auto ws = after.find_first_not_of(" \t");
    if (ws == std::string_view::npos || after[ws] != ':') fail(line, "expected ':' after key");
    return {std::move(key), after.substr(ws + 1)};
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == ':' && (i + 1 == c.size() || c[i + 1] == ' ' || c[i + 1] == '\t')) {
      std::string key(trim(c.substr(0, i)));
      if (key.empty()) fail(line, "empty key");
      if (key[0] == '&' || key[0] == '*') fail(line, "anchors and aliases are not supported");
      if (key[0] == '?') fail(line, "complex keys are not supported");
      return {std::move(key), c.substr(i + 1)};
    }
  }
  fail(line, "expected 'key: value'");
}

}  // namespace

const HeaderValue* HeaderBlock::find(std::string_view key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

HeaderBlock parse_header_block(const std::vector<std::string_view>& raw_lines,
                               std::vector<Diagnostic>& diagnostics) {
  std::vector<Line> lines;
  for (std::size_t n = 0; n < raw_lines.size(); ++n) {
    std::string_view s = raw_lines[n];
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    std::string_view content = s.substr(first);
    const auto end = content.find_last_not_of(" \t");
    content = content.substr(0, end + 1);
    if (content[0] == '#') continue;
    Line line{n + 1, first, content};
    if (first == 0 && (content == "---" || content == "..." || content.starts_with("--- ") ||
                       content.starts_with("%")))
      fail(line, "multi-document and directive markers are not supported");
    lines.push_back(line);
  }

  HeaderBlock block;
  if (lines.empty()) return block;
  const std::size_t base = lines.front().indent;

  auto store = [&](std::vector<std::pair<std::string, HeaderValue>>& entries, std::string key,
                   HeaderValue value) {
    for (auto& [k, v] : entries) {
      if (k == key) {
        diagnostics.push_back({"P003", default_severity("P003"), std::nullopt, key,
                               "duplicate header key '" + key + "'; last value wins"});
        v = std::move(value);
        return;
      }
    }
    entries.emplace_back(std::move(key), std::move(value));
  };

  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& line = lines[i];
    if (line.indent != base) fail(line, "unexpected indentation");
    if (is_list_item(line.content)) fail(line, "list item without a key");
    KeyValue kv = split_key(line);
    ++i;
    if (!trim(kv.rest).empty() && trim(kv.rest)[0] != '#') {
      store(block.entries, std::move(kv.key), HeaderValue::of_scalar(parse_scalar(line, kv.rest)));
      continue;
    }

    // Collect the block that belongs to this key.
    std::vector<const Line*> children;
    while (i < lines.size() && (lines[i].indent > base ||
                                (lines[i].indent == base && is_list_item(lines[i].content)))) {
      children.push_back(&lines[i]);
      ++i;
    }
    if (children.empty()) {
      store(block.entries, std::move(kv.key), HeaderValue::of_scalar({}));
      continue;
    }

    const std::size_t child_indent = children.front()->indent;
    if (is_list_item(children.front()->content)) {
      HeaderValue value;
      value.kind = HeaderValue::Kind::List;
      for (const Line* child : children) {
        if (child->indent != child_indent || !is_list_item(child->content))
          fail(*child, "nested structures inside lists are not supported");
        std::string_view item = trim(child->content.substr(1));
        if (item.empty()) fail(*child, "empty list item");
        if (item[0] != '"' && item[0] != '\'' && is_list_item(item))
          fail(*child, "nested lists are not supported");
        if (item[0] != '"' && item[0] != '\'') {
          for (std::size_t k = 0; k + 1 < item.size(); ++k)
            if (item[k] == ':' && (item[k + 1] == ' ' || item[k + 1] == '\t'))
              fail(*child, "maps inside lists are not supported");
          if (item.back() == ':') fail(*child, "maps inside lists are not supported");
        }
        value.list.push_back(parse_scalar(*child, item));
      }
      store(block.entries, std::move(kv.key), std::move(value));
      continue;
    }

    HeaderValue value;
    value.kind = HeaderValue::Kind::Map;
    for (const Line* child : children) {
      if (child->indent != child_indent || is_list_item(child->content))
        fail(*child, "nesting deeper than one level is not supported");
      KeyValue entry = split_key(*child);
      if (trim(entry.rest).empty())
        fail(*child, "nesting deeper than one level is not supported");
      std::string scalar = parse_scalar(*child, entry.rest);
      bool replaced = false;
      for (auto& [k, v] : value.map) {
        if (k == entry.key) {
          diagnostics.push_back({"P003", default_severity("P003"), std::nullopt, kv.key,
                                 "duplicate entry '" + entry.key + "' under '" + kv.key +
                                     "'; last value wins"});
          v = std::move(scalar);
          replaced = true;
          break;
        }
      }
      if (!replaced) value.map.emplace_back(std::move(entry.key), std::move(scalar));
    }
    store(block.entries, std::move(kv.key), std::move(value));
  }
  return block;
}

std::string quote_scalar(std::string_view value) {
  std::string out = "\"";
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      case '\0': out += "\\0"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

namespace {

std::string render_key(std::string_view key) {
  const bool plain = !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '.' || c == '-';
  }) && key[0] != '-';
  return plain ? std::string(key) : quote_scalar(key);
}

}  // namespace

std::vector<std::string> render_header_entry(std::string_view key, const HeaderValue& value) {
  std::vector<std::string> out;
  const std::string k = render_key(key);
  switch (value.kind) {
    case HeaderValue::Kind::Scalar:
      out.push_back(k + ": " + quote_scalar(value.scalar));
      break;
    case HeaderValue::Kind::List:
      out.push_back(k + ":");
      for (const auto& item : value.list) out.push_back("  - " + quote_scalar(item));
      break;
    case HeaderValue::Kind::Map:
      out.push_back(k + ":");
      for (const auto& [mk, mv] : value.map) out.push_back("  " + render_key(mk) + ": " + quote_scalar(mv));
      break;
  }
  return out;
}

}  // namespace sssom
