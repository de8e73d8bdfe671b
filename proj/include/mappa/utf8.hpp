#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mappa::utf8 {

/// Splits a UTF-8 string into code points, each kept as its byte sequence.
/// Invalid lead or continuation bytes are passed through as single-byte units.
std::vector<std::string> split_chars(std::string_view text);

/// Decodes the code point starting at `text[pos]`; `len` receives its byte length.
char32_t decode(std::string_view text, std::size_t pos, std::size_t& len);

/// Han ideographs, kana, Hangul and CJK compatibility blocks.
bool is_cjk(char32_t cp);

/// Whitespace or punctuation in ASCII, general punctuation, CJK symbols and fullwidth forms.
/// Underscore and hyphen count as word characters.
bool is_separator(char32_t cp);

}  // namespace mappa::utf8
