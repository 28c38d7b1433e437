// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace warc2md::unicode {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes UTF-8 into codepoints. Invalid byte sequences become U+FFFD
// (one replacement per rejected byte) and are tallied in invalid_bytes
// when the pointer is non-null.
std::vector<char32_t> decode_utf8(std::string_view bytes, std::size_t* invalid_bytes = nullptr);

// Appends the UTF-8 encoding of cp to out. Codepoints beyond U+10FFFF or
// in the surrogate range encode as U+FFFD.
void append_utf8(std::string& out, char32_t cp);

std::string encode_utf8(const std::vector<char32_t>& cps);

// Transcodes windows-1256 (the legacy Arabic codepage) to UTF-8.
std::string cp1256_to_utf8(std::string_view bytes);

// Script/category classification. These are range tables covering the major
// scripts seen in web text, not a full Unicode property database.
bool is_arabic_letter(char32_t cp);
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_whitespace(char32_t cp);
bool is_punctuation(char32_t cp);

// Characters tolerated by the special-character metric besides letters,
// digits and whitespace: . , : ; ! ? Arabic comma/semicolon/question mark,
// double and single quotes, parentheses, hyphen.
bool is_allowed_symbol(char32_t cp);

}  // namespace warc2md::unicode
