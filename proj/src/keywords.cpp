#include "mappa/keywords.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mappa/error.hpp"
#include "mappa/text.hpp"
#include "mappa/utf8.hpp"

namespace mappa {

namespace {

struct Char {
    std::string bytes;
    char32_t cp;
};

std::vector<Char> decode_all(std::string_view s) {
    std::vector<Char> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t len = 1;
        const auto cp = utf8::decode(s, pos, len);
        out.push_back({std::string(s.substr(pos, len)), cp});
        pos += len;
    }
    return out;
}

void tokenize_alphabetic(const std::vector<Char>& chars, std::size_t begin, std::size_t end,
                         std::vector<Token>& out) {
    std::size_t i = begin;
    while (i < end) {
        if (utf8::is_separator(chars[i].cp)) {
            ++i;
            continue;
        }
        Token tok{{}, i};
        while (i < end && !utf8::is_separator(chars[i].cp)) tok.text += chars[i++].bytes;
        tok.text = text::ascii_lower(tok.text);
        out.push_back(std::move(tok));
    }
}

void tokenize_cjk(const std::vector<Char>& chars, std::size_t begin, std::size_t end, const Lexicon& lexicon,
                  std::vector<Token>& out) {
    std::size_t i = begin;
    while (i < end) {
        if (utf8::is_separator(chars[i].cp)) {
            ++i;
            continue;
        }
        // Longest lexicon word starting at i that does not cross a separator.
        std::size_t limit = i;
        while (limit < end && limit - i < lexicon.max_word_chars() && !utf8::is_separator(chars[limit].cp)) {
            ++limit;
        }
        std::size_t matched = 1;
        std::string candidate;
        for (std::size_t j = i; j < limit; ++j) {
            candidate += chars[j].bytes;
            if (lexicon.contains(candidate)) matched = j - i + 1;
        }
        Token tok{{}, i};
        for (std::size_t j = i; j < i + matched; ++j) tok.text += chars[j].bytes;
        out.push_back(std::move(tok));
        i += matched;
    }
}

}  // namespace

std::vector<Token> tokenize_with_offsets(const Utterance& utterance, const Lexicon& lexicon) {
    const auto chars = decode_all(utterance.text);
    if (chars.size() > kMaxUtteranceChars) {
        throw InvalidArgumentError("utterance longer than " + std::to_string(kMaxUtteranceChars) + " characters");
    }
    std::vector<Token> out;
    switch (utterance.language_hint) {
        case LanguageHint::Alphabetic:
            tokenize_alphabetic(chars, 0, chars.size(), out);
            break;
        case LanguageHint::Cjk:
            tokenize_cjk(chars, 0, chars.size(), lexicon, out);
            break;
        case LanguageHint::Auto: {
            // Separators belong to neither script; they only end the current run.
            std::size_t i = 0;
            while (i < chars.size()) {
                if (utf8::is_separator(chars[i].cp)) {
                    ++i;
                    continue;
                }
                const bool cjk = utf8::is_cjk(chars[i].cp);
                std::size_t j = i;
                while (j < chars.size() && !utf8::is_separator(chars[j].cp) && utf8::is_cjk(chars[j].cp) == cjk) ++j;
                if (cjk) {
                    tokenize_cjk(chars, i, j, lexicon, out);
                } else {
                    tokenize_alphabetic(chars, i, j, out);
                }
                i = j;
            }
            break;
        }
    }
    return out;
}

std::vector<std::string> tokenize(const Utterance& utterance, const Lexicon& lexicon) {
    std::vector<std::string> out;
    for (auto& tok : tokenize_with_offsets(utterance, lexicon)) out.push_back(std::move(tok.text));
    return out;
}

std::vector<Keyword> extract_keywords(const Utterance& utterance, const Lexicon& lexicon, std::size_t k) {
    struct Tally {
        std::size_t count = 0;
        std::size_t first = 0;
        const LexiconEntry* entry = nullptr;
    };
    std::map<std::string, Tally, std::less<>> tallies;
    for (const auto& tok : tokenize_with_offsets(utterance, lexicon)) {
        const auto* entry = lexicon.find(tok.text);
        if (!entry || entry->pos == Pos::Other) continue;
        auto [it, fresh] = tallies.try_emplace(tok.text);
        if (fresh) {
            it->second.first = tok.offset;
            it->second.entry = entry;
        }
        ++it->second.count;
    }

    std::vector<Keyword> out;
    for (const auto& [word, t] : tallies) {
        const double score = static_cast<double>(t.count) * t.entry->idf;
        if (score > 0.0) out.push_back({word, score, t.first});
    }
    std::sort(out.begin(), out.end(), [](const Keyword& a, const Keyword& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.first_offset != b.first_offset) return a.first_offset < b.first_offset;
        return a.word < b.word;
    });
    if (out.size() > k) out.resize(k);
    return out;
}

IdfTable compute_idf(const std::vector<std::vector<std::string>>& documents) {
    if (documents.empty()) throw DegenerateInputError("idf of an empty corpus");
    std::map<std::string, std::size_t, std::less<>> df;
    for (const auto& doc : documents) {
        std::set<std::string_view> seen(doc.begin(), doc.end());
        for (auto w : seen) ++df[std::string(w)];
    }
    const double n = static_cast<double>(documents.size());
    IdfTable out;
    for (const auto& [word, count] : df) {
        out.emplace(word, std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
    }
    return out;
}

IdfTable compute_idf(const std::vector<std::string>& documents, const Lexicon& lexicon) {
    std::vector<std::vector<std::string>> tokenized;
    tokenized.reserve(documents.size());
    for (const auto& doc : documents) tokenized.push_back(tokenize({doc, LanguageHint::Auto}, lexicon));
    return compute_idf(tokenized);
}

}  // namespace mappa
