// Copyright 2026 The cscbench Authors.
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

#ifndef CSCBENCH_CORE_UTF8_HPP_
#define CSCBENCH_CORE_UTF8_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace cscbench::utf8 {

// Decodes strict UTF-8 (no overlongs, no surrogates, max U+10FFFF).
// Throws ParseError whose message carries the byte offset of the first bad byte.
std::u32string Decode(std::string_view bytes);

// Like Decode but reports failure through `bad_offset` instead of throwing.
bool TryDecode(std::string_view bytes, std::u32string* out, std::size_t* bad_offset);

std::string Encode(std::u32string_view text);
std::string Encode(char32_t c);

// Returns the offset of the first invalid byte, or npos when `bytes` is valid.
std::size_t FindInvalid(std::string_view bytes);

}  // namespace cscbench::utf8

#endif  // CSCBENCH_CORE_UTF8_HPP_
