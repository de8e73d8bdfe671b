#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mappa/lexicon.hpp"

namespace testing {

inline const std::filesystem::path kDataDir = MAPPA_TEST_DATA_DIR;

inline mappa::Lexicon lexicon_from(const std::string& tsv) {
    std::istringstream in(tsv);
    return mappa::parse_lexicon(in);
}

inline mappa::LexiconEntry entry(std::string word, std::vector<double> embedding, std::vector<std::string> phonetic = {},
                                 mappa::Pos pos = mappa::Pos::Noun, double idf = 1.0) {
    return {std::move(word), pos, idf, std::move(phonetic), std::move(embedding)};
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& tag) {
    std::random_device rd;
    auto dir = std::filesystem::temp_directory_path() / ("mappa-" + tag + "-" + std::to_string(rd()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

/// Small well-formedness check: balanced tags, quoted attributes, known entities.
inline bool well_formed_xml(const std::string& xml, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<std::string> stack;
    std::size_t i = 0;
    bool seen_root = false;
    while (i < xml.size()) {
        if (xml[i] == '&') {
            const auto end = xml.find(';', i);
            if (end == std::string::npos) return fail("unterminated entity");
            const auto ent = xml.substr(i + 1, end - i - 1);
            if (ent != "amp" && ent != "lt" && ent != "gt" && ent != "quot" && ent != "apos") return fail("bad entity " + ent);
            i = end + 1;
            continue;
        }
        if (xml[i] != '<') {
            if (stack.empty() && !std::isspace(static_cast<unsigned char>(xml[i]))) return fail("text outside root");
            ++i;
            continue;
        }
        if (xml.compare(i, 5, "<?xml") == 0) {
            const auto end = xml.find("?>", i);
            if (end == std::string::npos || i != 0) return fail("bad declaration");
            i = end + 2;
            continue;
        }
        const auto end = xml.find('>', i);
        if (end == std::string::npos) return fail("unterminated tag");
        std::string tag = xml.substr(i + 1, end - i - 1);
        i = end + 1;
        if (!tag.empty() && tag[0] == '/') {
            const auto name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
            stack.pop_back();
            continue;
        }
        const bool self_closing = !tag.empty() && tag.back() == '/';
        if (self_closing) tag.pop_back();
        const auto name = tag.substr(0, tag.find_first_of(" \t\n"));
        if (name.empty()) return fail("empty tag name");
        // Attribute values must be double-quoted and free of '<'.
        std::size_t q = 0;
        for (char c : tag) {
            if (c == '"') ++q;
            if (c == '<') return fail("'<' inside tag");
        }
        if (q % 2) return fail("unbalanced quotes in <" + name + ">");
        if (stack.empty()) {
            if (seen_root) return fail("second root element");
            seen_root = true;
        }
        if (!self_closing) stack.push_back(name);
    }
    if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
    if (!seen_root) return fail("no root element");
    return true;
}

inline std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace testing
