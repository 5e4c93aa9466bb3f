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

#ifndef SSSOM_ERRORS_HPP_
#define SSSOM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sssom {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnresolvablePrefix : public Error {
 public:
  explicit UnresolvablePrefix(std::string prefix)
      : Error("unresolvable prefix '" + prefix + "'"), prefix_(std::move(prefix)) {}
  const std::string& prefix() const noexcept { return prefix_; }

 private:
  std::string prefix_;
};

class NoMatchingPrefix : public Error {
 public:
  explicit NoMatchingPrefix(const std::string& iri)
      : Error("no prefix map entry matches '" + iri + "'") {}
};

class PrefixConflict : public Error {
 public:
  PrefixConflict(std::string prefix, std::string iri_a, std::string iri_b)
      : Error("prefix '" + prefix + "' bound to both <" + iri_a + "> and <" + iri_b + ">"),
        prefix_(std::move(prefix)),
        iri_a_(std::move(iri_a)),
        iri_b_(std::move(iri_b)) {}
  const std::string& prefix() const noexcept { return prefix_; }
  const std::string& iri_a() const noexcept { return iri_a_; }
  const std::string& iri_b() const noexcept { return iri_b_; }

 private:
  std::string prefix_, iri_a_, iri_b_;
};

class UnknownMatchType : public Error {
 public:
  explicit UnknownMatchType(std::string raw)
      : Error("unknown match_type '" + raw + "'"), raw_(std::move(raw)) {}
  const std::string& raw() const noexcept { return raw_; }

 private:
  std::string raw_;
};

// Input cannot be turned into a document at all (or strict mode hit an error).
class FatalParse : public Error {
 public:
  using Error::Error;
};

// A value has no representation in SSSOM TSV (embedded tab, newline, ...).
class SerializationError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sssom

#endif  // SSSOM_ERRORS_HPP_
