#include "mappa/expansion.hpp"

#include <algorithm>
#include <iterator>

#include "mappa/error.hpp"
#include "mappa/hashing.hpp"

namespace mappa {

std::string_view to_string(Channel channel) {
    switch (channel) {
        case Channel::Kg: return "KG";
        case Channel::Semantic: return "SEMANTIC";
        case Channel::Morph: return "MORPH";
        case Channel::Phon: return "PHON";
        case Channel::DadaPun: return "DADA_PUN";
        case Channel::DadaChance: return "DADA_CHANCE";
    }
    return "KG";
}

std::optional<Channel> parse_channel(std::string_view name) {
    for (auto c : kChannelOrder) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

std::string_view channel_relation(Channel channel) {
    switch (channel) {
        case Channel::Kg: return "kg";
        case Channel::Semantic: return "semantic";
        case Channel::Morph: return "morph";
        case Channel::Phon: return "phon";
        case Channel::DadaPun: return "pun";
        case Channel::DadaChance: return "chance";
    }
    return "kg";
}

std::size_t ExpansionConfig::total_quota() const {
    std::size_t total = 0;
    for (auto q : quotas) total += q;
    return total;
}

void ExpansionConfig::validate() const {
    if (!(tau_low >= 0.0 && tau_low < tau_high && tau_high <= 1.0)) {
        throw ConfigError("thresholds must satisfy 0 <= tau_low < tau_high <= 1");
    }
    if (total_quota() == 0) throw ConfigError("at least one channel quota must be positive");
}

bool satisfies_pun_predicate(const LexiconEntry& keyword, const LexiconEntry& candidate,
                             const ExpansionConfig& config) {
    if (keyword.word == candidate.word) return false;
    if (semantic_similarity(keyword, candidate) >= config.tau_low) return false;
    return phonological_similarity(keyword, candidate) >= config.tau_high ||
           morphological_similarity(keyword.word, candidate.word) >= config.tau_high;
}

namespace {

using WordSet = std::set<std::string, std::less<>>;

/// Every lexicon word except `keyword` with score >= floor, best first,
/// lexicographic among equals.
template <typename Score>
std::vector<ScoredWord> rank_lexicon(std::string_view keyword, const Lexicon& lexicon, double floor, Score score) {
    std::vector<ScoredWord> ranked;
    for (const auto& [w, e] : lexicon) {
        if (w == keyword) continue;
        const double s = score(e);
        if (s >= floor) ranked.emplace_back(w, s);
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const ScoredWord& a, const ScoredWord& b) { return a.second > b.second; });
    return ranked;
}

struct Collector {
    const WordSet& exclude;
    std::string_view keyword;
    WordSet emitted;
    std::vector<ExpansionCandidate> out;

    bool taken(std::string_view w) const {
        return w == keyword || emitted.count(w) || exclude.count(w);
    }

    void take_ranked(const std::vector<ScoredWord>& ranked, Channel channel, std::size_t quota) {
        std::size_t used = 0;
        for (const auto& [w, s] : ranked) {
            if (used == quota) break;
            if (taken(w)) continue;
            push({w, channel, std::string(channel_relation(channel)), s});
            ++used;
        }
    }

    void push(ExpansionCandidate c) {
        emitted.insert(c.word);
        out.push_back(std::move(c));
    }
};

}  // namespace

std::vector<ExpansionCandidate> expand(std::string_view keyword, const Lexicon& lexicon, const KnowledgeGraph& kg,
                                       const ExpansionConfig& config, const WordSet& exclude) {
    config.validate();
    const auto* entry = lexicon.find(keyword);
    if (!entry && !kg.covered(keyword)) {
        throw NotFoundError("keyword unknown to lexicon and knowledge graph: " + std::string(keyword));
    }
    Collector col{exclude, keyword, {}, {}};

    if (auto quota = config.quota(Channel::Kg); quota > 0) {
        std::size_t used = 0;
        for (const auto& n : kg.neighbors(keyword)) {
            if (used == quota) break;
            if (col.taken(n.neighbor)) continue;
            const auto* other = lexicon.find(n.neighbor);
            const double sim = (entry && other) ? std::max(0.6, semantic_similarity(*entry, *other)) : 1.0;
            col.push({n.neighbor, Channel::Kg, n.relation, sim});
            ++used;
        }
    }

    if (auto quota = config.quota(Channel::Semantic); quota > 0 && entry) {
        // At most emitted + excluded words can be skipped.
        const auto want = quota + col.emitted.size() + exclude.size();
        col.take_ranked(semantic_neighbors(keyword, lexicon, want), Channel::Semantic, quota);
    }

    if (auto quota = config.quota(Channel::Morph); quota > 0) {
        auto ranked = rank_lexicon(keyword, lexicon, config.tau_high,
                                   [&](const LexiconEntry& e) { return morphological_similarity(keyword, e.word); });
        col.take_ranked(ranked, Channel::Morph, quota);
    }

    if (auto quota = config.quota(Channel::Phon); quota > 0) {
        const LexiconEntry surface{std::string(keyword), Pos::Other, 0.0, {}, {}};
        const auto& probe = entry ? *entry : surface;
        auto ranked = rank_lexicon(keyword, lexicon, config.tau_high,
                                   [&](const LexiconEntry& e) { return phonological_similarity(probe, e); });
        col.take_ranked(ranked, Channel::Phon, quota);
    }

    if (auto quota = config.quota(Channel::DadaPun); quota > 0 && entry) {
        std::size_t used = 0;
        for (auto& c : dada_pun_candidates(keyword, lexicon, config)) {
            if (used == quota) break;
            if (col.taken(c.word)) continue;
            col.push(std::move(c));
            ++used;
        }
    }

    if (auto quota = config.quota(Channel::DadaChance); quota > 0 && lexicon.size() >= 2) {
        // Skipped draws consume a draw index; the bound keeps tiny lexicons
        // from looping forever once every word is taken.
        const std::uint64_t max_draws = 32 * (quota + 1) + lexicon.size();
        std::size_t used = 0;
        for (std::uint64_t draw = 0; draw < max_draws && used < quota; ++draw) {
            auto c = dada_chance_candidate(keyword, lexicon, config.seed, draw);
            if (col.taken(c.word)) continue;
            col.push(std::move(c));
            ++used;
        }
    }
    return std::move(col.out);
}

std::vector<ExpansionCandidate> dada_pun_candidates(std::string_view keyword, const Lexicon& lexicon,
                                                    const ExpansionConfig& config) {
    const auto& key = lexicon.at(keyword);
    std::vector<ExpansionCandidate> out;
    for (const auto& [w, e] : lexicon) {
        if (w == keyword) continue;
        if (semantic_similarity(key, e) >= config.tau_low) continue;
        const double score = std::max(phonological_similarity(key, e), morphological_similarity(keyword, w));
        if (score >= config.tau_high) {
            out.push_back({w, Channel::DadaPun, std::string(channel_relation(Channel::DadaPun)), score});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const ExpansionCandidate& a, const ExpansionCandidate& b) {
        return a.similarity > b.similarity;
    });
    return out;
}

ExpansionCandidate dada_chance_candidate(std::string_view keyword, const Lexicon& lexicon, std::uint64_t seed,
                                         std::uint64_t draw_index) {
    if (lexicon.size() < 2) throw DegenerateInputError("chance draw needs at least two lexicon entries");
    const bool keyword_listed = lexicon.contains(keyword);
    const std::uint64_t pool = lexicon.size() - (keyword_listed ? 1 : 0);
    auto pick = mix64(seed ^ fnv1a64(keyword) ^ draw_index) % pool;

    auto it = lexicon.begin();
    for (;; ++it) {
        if (it->first == keyword) continue;
        if (pick == 0) break;
        --pick;
    }
    const auto* key = lexicon.find(keyword);
    const double sim = key ? semantic_similarity(*key, it->second) : 0.0;
    return {it->first, Channel::DadaChance, std::string(channel_relation(Channel::DadaChance)), sim};
}

}  // namespace mappa
