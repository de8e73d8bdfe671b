#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mappa {

enum class Pos { Noun, Verb, Adj, Other };

std::string_view to_string(Pos pos);
/// Accepts NOUN, VERB, ADJ, OTHER (case-insensitive).
std::optional<Pos> parse_pos(std::string_view text);

struct LexiconEntry {
    std::string word;
    Pos pos = Pos::Other;
    double idf = 0.0;
    std::vector<std::string> phonetic;
    std::vector<double> embedding;
};

/// Immutable word table with a fixed embedding dimension.
///
/// Entries are kept in lexicographic word order so every scan over the
/// lexicon visits words in the same order, which is what makes tie-breaking
/// and seeded draws reproducible.
class Lexicon {
public:
    explicit Lexicon(std::size_t dim);

    /// Inserts or replaces the entry for `entry.word`.
    /// Throws FormatError when the embedding arity or fields are invalid.
    void insert(LexiconEntry entry);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    const LexiconEntry* find(std::string_view word) const;
    bool contains(std::string_view word) const { return find(word) != nullptr; }
    /// Throws NotFoundError.
    const LexiconEntry& at(std::string_view word) const;

    /// Longest entry, in code points. Used by the CJK tokenizer.
    std::size_t max_word_chars() const noexcept { return max_word_chars_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    std::size_t dim_;
    std::size_t max_word_chars_ = 0;
    std::map<std::string, LexiconEntry, std::less<>> entries_;
};

/// Parses the tab-separated lexicon format. The first line must be `#dim=<D>`
/// with D >= 2; later `#` lines are comments and blank lines are skipped.
/// Duplicate words: the last record wins.
Lexicon load_lexicon(const std::filesystem::path& path);
Lexicon parse_lexicon(std::istream& in);

/// Writes `lexicon` in the same format `parse_lexicon` reads.
void write_lexicon(std::ostream& out, const Lexicon& lexicon);

/// max(0, cosine) of the two embeddings. Throws DegenerateInputError on a
/// zero vector and RangeError on mismatched dimensions.
double semantic_similarity(const LexiconEntry& a, const LexiconEntry& b);
double semantic_similarity(const std::vector<double>& a, const std::vector<double>& b);

/// Dice coefficient over character-bigram sets (unigram set for one-character
/// words). Characters are UTF-8 code points.
double morphological_similarity(std::string_view a, std::string_view b);

/// 1 - Levenshtein / max length over phoneme tokens; an empty phonetic field
/// falls back to the word's characters.
double phonological_similarity(const LexiconEntry& a, const LexiconEntry& b);

/// Token-level Levenshtein distance.
std::size_t levenshtein(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Character n-gram set used by morphological_similarity.
std::vector<std::string> char_gram_set(std::string_view word);

using ScoredWord = std::pair<std::string, double>;

/// Exact top-k by semantic similarity, query excluded, ties by word.
/// Throws NotFoundError when `word` is not in the lexicon.
std::vector<ScoredWord> semantic_neighbors(std::string_view word, const Lexicon& lexicon, std::size_t k);

}  // namespace mappa
