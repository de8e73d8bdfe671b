#include "mappa/utf8.hpp"

namespace mappa::utf8 {

char32_t decode(std::string_view text, std::size_t pos, std::size_t& len) {
    const auto lead = static_cast<unsigned char>(text[pos]);
    std::size_t need = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
        len = 1;
        return lead;
    } else if ((lead & 0xE0) == 0xC0) {
        need = 1;
        cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
        need = 2;
        cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
        need = 3;
        cp = lead & 0x07;
    } else {
        len = 1;
        return lead;
    }
    if (pos + need >= text.size()) {
        len = 1;
        return lead;
    }
    for (std::size_t i = 1; i <= need; ++i) {
        const auto c = static_cast<unsigned char>(text[pos + i]);
        if ((c & 0xC0) != 0x80) {
            len = 1;
            return lead;
        }
        cp = (cp << 6) | (c & 0x3F);
    }
    len = need + 1;
    return cp;
}

std::vector<std::string> split_chars(std::string_view text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t len = 1;
        decode(text, pos, len);
        out.emplace_back(text.substr(pos, len));
        pos += len;
    }
    return out;
}

bool is_cjk(char32_t cp) {
    return (cp >= 0x4E00 && cp <= 0x9FFF)      // unified ideographs
        || (cp >= 0x3400 && cp <= 0x4DBF)      // extension A
        || (cp >= 0x20000 && cp <= 0x2FA1F)    // extensions B.. and compatibility supplement
        || (cp >= 0xF900 && cp <= 0xFAFF)      // compatibility ideographs
        || (cp >= 0x3040 && cp <= 0x30FF)      // hiragana, katakana
        || (cp >= 0xAC00 && cp <= 0xD7AF);     // hangul syllables
}

bool is_separator(char32_t cp) {
    if (cp < 0x80) {
        if (cp == '_' || cp == '-') return false;
        const bool alnum = (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
        return !alnum;
    }
    return cp == 0x00A0
        || (cp >= 0x2000 && cp <= 0x206F)      // general punctuation
        || (cp >= 0x3000 && cp <= 0x303F)      // CJK symbols and punctuation
        || (cp >= 0xFF00 && cp <= 0xFF0F)      // fullwidth ! .. /
        || (cp >= 0xFF1A && cp <= 0xFF20)
        || (cp >= 0xFF3B && cp <= 0xFF40)
        || (cp >= 0xFF5B && cp <= 0xFF65);
}

}  // namespace mappa::utf8
