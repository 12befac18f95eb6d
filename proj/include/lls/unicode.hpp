#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lls::unicode {

/// Decodes UTF-8 into code points. Each invalid byte decodes as U+FFFD.
std::vector<char32_t> decode_utf8(std::string_view text);

/// Unicode whitespace (White_Space property).
bool is_space(char32_t cp);

/// Splits text into extended grapheme clusters, returned as UTF-8 strings.
/// Handles combining marks, variation selectors, ZWJ sequences,
/// regional-indicator pairs and Hangul jamo composition.
std::vector<std::string> grapheme_clusters(std::string_view text);

/// ASCII-only case folding; bytes >= 0x80 pass through untouched.
std::string to_lower_ascii(std::string_view s);

}  // namespace lls::unicode
