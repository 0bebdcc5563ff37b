#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mtprep::uni {

constexpr char32_t kReplacementChar = 0xFFFD;

// Script classes used by the orthographic repairs. Everything that is not
// one of the three confusable-relevant scripts collapses to `other`.
enum class Script { latin, greek, cyrillic, other };

// Decodes one UTF-8 code point starting at `pos`. Invalid sequences decode
// to U+FFFD and advance past the first offending byte. Returns the decoded
// code point and sets `len` to the number of bytes consumed.
char32_t decode_utf8(std::string_view text, std::size_t pos, std::size_t& len);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(char32_t cp);

std::u32string to_codepoints(std::string_view text);
std::string from_codepoints(const std::u32string& cps);

// Replaces every invalid UTF-8 sequence with U+FFFD; `replaced`, when
// non-null, is incremented once per replacement.
std::string sanitize_utf8(std::string_view text, std::size_t* replaced = nullptr);

// Canonical composition (NFC). Input must be valid UTF-8.
std::string nfc(std::string_view text);

bool is_alpha(char32_t cp);
Script script_of(char32_t cp);

// Whitespace as used for token splitting and whitespace collapsing:
// the Unicode White_Space property plus the 0x1C..0x1F separators.
bool is_space(char32_t cp);

std::size_t count_codepoints(std::string_view text);
bool is_all_ascii(std::string_view text);

// Trims leading/trailing whitespace and collapses interior whitespace runs
// to a single ASCII space.
std::string normalize_ws(std::string_view text);

std::string trim(std::string_view text);

// Splits on whitespace runs; no empty tokens.
std::vector<std::string_view> split_ws(std::string_view text);

}  // namespace mtprep::uni
