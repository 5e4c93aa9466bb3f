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

#ifndef SSSOM_SRC_UNICODE_HPP_
#define SSSOM_SRC_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sssom::unicode {

bool valid_utf8(std::string_view text) noexcept;

// Code points of valid UTF-8 input.
std::vector<char32_t> decode(std::string_view text);
void append_utf8(std::string& out, char32_t cp);
std::string encode(const std::vector<char32_t>& cps);

char32_t simple_case_fold(char32_t cp) noexcept;
bool is_letter(char32_t cp) noexcept;
bool is_digit(char32_t cp) noexcept;
bool is_white_space(char32_t cp) noexcept;

}  // namespace sssom::unicode

#endif  // SSSOM_SRC_UNICODE_HPP_
