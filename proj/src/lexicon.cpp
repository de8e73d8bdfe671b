#include "mappa/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "mappa/error.hpp"
#include "mappa/text.hpp"
#include "mappa/utf8.hpp"

namespace mappa {

std::string_view to_string(Pos pos) {
    switch (pos) {
        case Pos::Noun: return "NOUN";
        case Pos::Verb: return "VERB";
        case Pos::Adj: return "ADJ";
        case Pos::Other: return "OTHER";
    }
    return "OTHER";
}

std::optional<Pos> parse_pos(std::string_view text) {
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "NOUN") return Pos::Noun;
    if (upper == "VERB") return Pos::Verb;
    if (upper == "ADJ") return Pos::Adj;
    if (upper == "OTHER") return Pos::Other;
    return std::nullopt;
}

Lexicon::Lexicon(std::size_t dim) : dim_(dim) {
    if (dim < 2) throw FormatError("lexicon dimension must be at least 2, got " + std::to_string(dim));
}

void Lexicon::insert(LexiconEntry entry) {
    if (entry.word.empty()) throw FormatError("empty word");
    if (entry.word.find_first_of("\t\n\r") != std::string::npos) {
        throw FormatError("word contains a tab or newline: " + entry.word);
    }
    if (!(entry.idf >= 0.0) || !std::isfinite(entry.idf)) {
        throw FormatError("idf must be a finite non-negative number for " + entry.word);
    }
    if (entry.embedding.size() != dim_) {
        throw FormatError("embedding of '" + entry.word + "' has " + std::to_string(entry.embedding.size()) +
                          " values, expected " + std::to_string(dim_));
    }
    bool nonzero = false;
    for (double v : entry.embedding) {
        if (!std::isfinite(v)) throw FormatError("non-finite embedding value for " + entry.word);
        nonzero = nonzero || v != 0.0;
    }
    if (!nonzero) throw FormatError("zero embedding for " + entry.word);

    max_word_chars_ = std::max(max_word_chars_, utf8::split_chars(entry.word).size());
    auto key = entry.word;
    entries_.insert_or_assign(std::move(key), std::move(entry));
}

const LexiconEntry* Lexicon::find(std::string_view word) const {
    auto it = entries_.find(word);
    return it == entries_.end() ? nullptr : &it->second;
}

const LexiconEntry& Lexicon::at(std::string_view word) const {
    if (const auto* e = find(word)) return *e;
    throw NotFoundError("word not in lexicon: " + std::string(word));
}

namespace {

std::size_t parse_header(const std::string& line) {
    constexpr std::string_view prefix = "#dim=";
    const auto trimmed = text::trim(line);
    if (trimmed.substr(0, prefix.size()) != prefix) {
        throw FormatError("missing '#dim=<D>' header", 1);
    }
    const auto digits = trimmed.substr(prefix.size());
    std::size_t dim = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), dim);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
        throw FormatError("garbled lexicon header: " + std::string(trimmed), 1);
    }
    if (dim < 2) throw FormatError("lexicon dimension must be at least 2", 1);
    return dim;
}

LexiconEntry parse_record(const std::string& line, std::size_t dim, std::size_t lineno) {
    const auto fields = text::split(line, '\t');
    if (fields.size() != 5) {
        throw FormatError("expected 5 tab-separated fields, got " + std::to_string(fields.size()), lineno);
    }
    LexiconEntry e;
    e.word = std::string(fields[0]);
    if (e.word.empty()) throw FormatError("empty word", lineno);

    auto pos = parse_pos(text::trim(fields[1]));
    if (!pos) throw FormatError("unknown POS tag '" + std::string(fields[1]) + "'", lineno);
    e.pos = *pos;

    auto idf = text::parse_double(text::trim(fields[2]));
    if (!idf || *idf < 0.0) throw FormatError("bad idf '" + std::string(fields[2]) + "'", lineno);
    e.idf = *idf;

    for (auto tok : text::split(fields[3], ' ')) {
        if (!tok.empty()) e.phonetic.emplace_back(tok);
    }

    const auto values = text::split(fields[4], ',');
    if (values.size() != dim) {
        throw FormatError("embedding has " + std::to_string(values.size()) + " values, expected " +
                              std::to_string(dim),
                          lineno);
    }
    e.embedding.reserve(dim);
    for (auto v : values) {
        auto d = text::parse_double(text::trim(v));
        if (!d) throw FormatError("bad embedding value '" + std::string(v) + "'", lineno);
        e.embedding.push_back(*d);
    }
    return e;
}

}  // namespace

Lexicon parse_lexicon(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("missing '#dim=<D>' header", 1);
    Lexicon lexicon(parse_header(line));

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto entry = parse_record(line, lexicon.dim(), lineno);
        try {
            lexicon.insert(std::move(entry));
        } catch (const FormatError& e) {
            throw FormatError(e.what(), lineno);
        }
    }
    return lexicon;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lexicon file: " + path.string());
    return parse_lexicon(in);
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
    out << "#dim=" << lexicon.dim() << '\n';
    for (const auto& [word, e] : lexicon) {
        out << word << '\t' << to_string(e.pos) << '\t' << text::format_double(e.idf) << '\t';
        for (std::size_t i = 0; i < e.phonetic.size(); ++i) out << (i ? " " : "") << e.phonetic[i];
        out << '\t';
        for (std::size_t i = 0; i < e.embedding.size(); ++i) {
            out << (i ? "," : "") << text::format_double(e.embedding[i]);
        }
        out << '\n';
    }
}

double semantic_similarity(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw RangeError("embedding dimensions differ");
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) throw DegenerateInputError("semantic similarity of a zero vector");
    // sqrt(na * nb) rather than sqrt(na) * sqrt(nb): exact for a == b, and
    // symmetric because both products commute.
    const double cos = dot / std::sqrt(na * nb);
    return std::clamp(cos, 0.0, 1.0);
}

double semantic_similarity(const LexiconEntry& a, const LexiconEntry& b) {
    return semantic_similarity(a.embedding, b.embedding);
}

std::vector<std::string> char_gram_set(std::string_view word) {
    const auto chars = utf8::split_chars(word);
    std::set<std::string> grams;
    if (chars.size() == 1) {
        grams.insert(chars[0]);
    } else {
        for (std::size_t i = 0; i + 1 < chars.size(); ++i) grams.insert(chars[i] + chars[i + 1]);
    }
    return {grams.begin(), grams.end()};
}

double morphological_similarity(std::string_view a, std::string_view b) {
    if (a.empty() || b.empty()) throw DegenerateInputError("morphological similarity of an empty word");
    const auto ga = char_gram_set(a);
    const auto gb = char_gram_set(b);
    std::vector<std::string> common;
    std::set_intersection(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(common));
    return 2.0 * static_cast<double>(common.size()) / static_cast<double>(ga.size() + gb.size());
}

std::size_t levenshtein(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    const auto& outer = a.size() >= b.size() ? a : b;
    const auto& inner = a.size() >= b.size() ? b : a;
    std::vector<std::size_t> row(inner.size() + 1);
    for (std::size_t i = 0; i <= inner.size(); ++i) row[i] = i;
    for (std::size_t j = 1; j <= outer.size(); ++j) {
        std::size_t diag = row[0];
        row[0] = j;
        for (std::size_t i = 1; i <= inner.size(); ++i) {
            const std::size_t up = row[i];
            row[i] = inner[i - 1] == outer[j - 1] ? diag : 1 + std::min({diag, up, row[i - 1]});
            diag = up;
        }
    }
    return row[inner.size()];
}

namespace {

std::vector<std::string> phonetic_units(const LexiconEntry& e) {
    return e.phonetic.empty() ? utf8::split_chars(e.word) : e.phonetic;
}

}  // namespace

double phonological_similarity(const LexiconEntry& a, const LexiconEntry& b) {
    const auto pa = phonetic_units(a);
    const auto pb = phonetic_units(b);
    const auto longest = std::max(pa.size(), pb.size());
    if (longest == 0) throw DegenerateInputError("phonological similarity of two empty sequences");
    const auto dist = levenshtein(pa, pb);
    return 1.0 - static_cast<double>(dist) / static_cast<double>(longest);
}

std::vector<ScoredWord> semantic_neighbors(std::string_view word, const Lexicon& lexicon, std::size_t k) {
    const auto& query = lexicon.at(word);
    std::vector<ScoredWord> scored;
    if (k == 0) return scored;
    scored.reserve(lexicon.size());
    for (const auto& [w, e] : lexicon) {
        if (w == query.word) continue;
        scored.emplace_back(w, semantic_similarity(query, e));
    }
    const auto keep = std::min(k, scored.size());
    // Lexicon iteration is already in word order, so a stable sort on score
    // alone leaves ties lexicographic.
    std::stable_sort(scored.begin(), scored.end(),
                     [](const ScoredWord& x, const ScoredWord& y) { return x.second > y.second; });
    scored.resize(keep);
    return scored;
}

}  // namespace mappa
