#include "lls/unicode.hpp"

namespace lls::unicode {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point starting at `i`; advances `i` past it.
char32_t decode_one(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return kReplacement;
    }
    if (i + len > s.size()) {
        ++i;
        return kReplacement;
    }
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return kReplacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
        ++i;
        return kReplacement;
    }
    i += len;
    return cp;
}

bool is_extend(char32_t cp) {
    return (cp >= 0x0300 && cp <= 0x036F)    // combining diacritical marks
        || (cp >= 0x0483 && cp <= 0x0489)
        || (cp >= 0x0591 && cp <= 0x05BD)
        || (cp >= 0x0610 && cp <= 0x061A)
        || (cp >= 0x064B && cp <= 0x065F)
        || (cp >= 0x06D6 && cp <= 0x06DC)
        || (cp >= 0x0E31 && cp <= 0x0E3A && cp != 0x0E32 && cp != 0x0E33)
        || (cp >= 0x1AB0 && cp <= 0x1AFF)
        || (cp >= 0x1DC0 && cp <= 0x1DFF)
        || (cp >= 0x20D0 && cp <= 0x20FF)
        || (cp >= 0xFE00 && cp <= 0xFE0F)    // variation selectors
        || (cp >= 0xFE20 && cp <= 0xFE2F)
        || (cp >= 0x1F3FB && cp <= 0x1F3FF)  // emoji skin-tone modifiers
        || cp == 0x200C;                     // ZWNJ
}

bool is_regional_indicator(char32_t cp) { return cp >= 0x1F1E6 && cp <= 0x1F1FF; }

enum class Hangul { None, L, V, T, LV, LVT };

Hangul hangul_class(char32_t cp) {
    if (cp >= 0x1100 && cp <= 0x115F) return Hangul::L;
    if (cp >= 0x1160 && cp <= 0x11A7) return Hangul::V;
    if (cp >= 0x11A8 && cp <= 0x11FF) return Hangul::T;
    if (cp >= 0xAC00 && cp <= 0xD7A3) {
        return ((cp - 0xAC00) % 28 == 0) ? Hangul::LV : Hangul::LVT;
    }
    return Hangul::None;
}

bool hangul_no_break(char32_t prev, char32_t cur) {
    const Hangul p = hangul_class(prev);
    const Hangul c = hangul_class(cur);
    if (p == Hangul::None || c == Hangul::None) return false;
    switch (p) {
        case Hangul::L: return c == Hangul::L || c == Hangul::V || c == Hangul::LV || c == Hangul::LVT;
        case Hangul::LV:
        case Hangul::V: return c == Hangul::V || c == Hangul::T;
        case Hangul::LVT:
        case Hangul::T: return c == Hangul::T;
        default: return false;
    }
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) out.push_back(decode_one(text, i));
    return out;
}

bool is_space(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
        case 0x20: case 0x85: case 0xA0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

std::vector<std::string> grapheme_clusters(std::string_view text) {
    std::vector<std::string> clusters;
    std::size_t i = 0;
    char32_t prev = 0;
    bool have_prev = false;
    bool prev_zwj = false;
    int pending_ri = 0;  // unpaired regional indicators in the current cluster
    while (i < text.size()) {
        const std::size_t start = i;
        const char32_t cp = decode_one(text, i);
        const std::string_view bytes = text.substr(start, i - start);

        bool join = false;
        if (have_prev) {
            if (prev == 0x0D && cp == 0x0A) {
                join = true;
            } else if (cp == 0x200D || is_extend(cp)) {
                join = true;
            } else if (prev_zwj) {
                join = true;
            } else if (is_regional_indicator(cp) && is_regional_indicator(prev) && pending_ri % 2 == 1) {
                join = true;
            } else if (hangul_no_break(prev, cp)) {
                join = true;
            }
        }

        if (join && !clusters.empty()) {
            clusters.back().append(bytes);
        } else {
            clusters.emplace_back(bytes);
            pending_ri = 0;
        }
        if (is_regional_indicator(cp)) ++pending_ri;
        prev_zwj = (cp == 0x200D);
        prev = cp;
        have_prev = true;
    }
    return clusters;
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

}  // namespace lls::unicode
