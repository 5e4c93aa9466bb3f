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

#ifndef SSSOM_VALUES_HPP_
#define SSSOM_VALUES_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace sssom {

// A decimal literal that remembers the digits it was written with, so
// "0.500024776" serializes back exactly.
class Decimal {
 public:
  // Grammar: -?[0-9]+(\.[0-9]+)?([eE][+-]?[0-9]+)?
  static std::optional<Decimal> parse(std::string_view text);
  // Shortest round-trip rendering of `value`.
  static Decimal from_double(double value);

  const std::string& text() const noexcept { return text_; }
  double value() const noexcept { return value_; }

  friend bool operator==(const Decimal& a, const Decimal& b) { return a.text_ == b.text_; }

 private:
  Decimal(std::string text, double value) : text_(std::move(text)), value_(value) {}

  std::string text_;
  double value_ = 0.0;
};

// ISO-8601 calendar date.
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  // Accepts exactly YYYY-MM-DD naming a real calendar day.
  static std::optional<Date> parse(std::string_view text);
  bool valid() const noexcept;
  std::string str() const;

  friend bool operator==(const Date&, const Date&) = default;
  friend auto operator<=>(const Date&, const Date&) = default;
};

}  // namespace sssom

#endif  // SSSOM_VALUES_HPP_
