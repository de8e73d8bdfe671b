#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mappa/lexicon.hpp"

namespace mappa {

enum class LanguageHint { Alphabetic, Cjk, Auto };

struct Utterance {
    std::string text;
    LanguageHint language_hint = LanguageHint::Auto;
};

inline constexpr std::size_t kMaxUtteranceChars = 10'000;

struct Token {
    std::string text;
    std::size_t offset = 0;  ///< code-point index of the token's first character
};

struct Keyword {
    std::string word;
    double score = 0.0;  ///< term count x idf
    std::size_t first_offset = 0;
};

/// Alphabetic runs are split on whitespace/punctuation and ASCII-lowercased.
/// CJK runs use greedy longest match against the lexicon; characters with no
/// match are emitted one by one. Auto picks the mode per contiguous script run.
/// Throws InvalidArgumentError for text longer than kMaxUtteranceChars.
std::vector<Token> tokenize_with_offsets(const Utterance& utterance, const Lexicon& lexicon);
std::vector<std::string> tokenize(const Utterance& utterance, const Lexicon& lexicon);

/// Keeps lexicon words tagged NOUN/VERB/ADJ, scores them by count x idf and
/// returns the top k (ties: earlier first occurrence, then word order).
std::vector<Keyword> extract_keywords(const Utterance& utterance, const Lexicon& lexicon, std::size_t k);

using IdfTable = std::map<std::string, double, std::less<>>;

/// Smoothed idf, ln((1 + N) / (1 + df)) + 1, over pre-tokenized documents.
/// Throws DegenerateInputError on an empty corpus.
IdfTable compute_idf(const std::vector<std::vector<std::string>>& documents);

/// Tokenizes each text with LanguageHint::Auto against `lexicon` first.
IdfTable compute_idf(const std::vector<std::string>& documents, const Lexicon& lexicon);

}  // namespace mappa
