#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mappa/knowledge_graph.hpp"
#include "mappa/lexicon.hpp"

namespace mappa {

/// Candidate sources, in the order expand() fills them.
enum class Channel { Kg, Semantic, Morph, Phon, DadaPun, DadaChance };

inline constexpr std::array<Channel, 6> kChannelOrder = {
    Channel::Kg, Channel::Semantic, Channel::Morph, Channel::Phon, Channel::DadaPun, Channel::DadaChance};

/// KG, SEMANTIC, MORPH, PHON, DADA_PUN, DADA_CHANCE.
std::string_view to_string(Channel channel);
std::optional<Channel> parse_channel(std::string_view name);

/// Relation label used for non-KG candidates.
std::string_view channel_relation(Channel channel);

struct ExpansionCandidate {
    std::string word;
    Channel channel = Channel::Semantic;
    std::string relation;
    double similarity = 0.0;

    bool operator==(const ExpansionCandidate&) const = default;
};

struct ExpansionConfig {
    std::array<std::size_t, 6> quotas = {3, 3, 1, 1, 1, 1};
    double tau_low = 0.2;
    double tau_high = 0.5;
    std::uint64_t seed = 0;

    std::size_t& quota(Channel c) { return quotas[static_cast<std::size_t>(c)]; }
    std::size_t quota(Channel c) const { return quotas[static_cast<std::size_t>(c)]; }
    std::size_t total_quota() const;

    /// Throws ConfigError unless 0 <= tau_low < tau_high <= 1 and some quota is positive.
    void validate() const;

    bool operator==(const ExpansionConfig&) const = default;
};

/// Candidates for `keyword`, channel by channel in kChannelOrder. A word
/// already produced by an earlier channel, or listed in `exclude`, is skipped
/// and the channel moves on to its next-best word. Deterministic for fixed
/// inputs; chance draws depend on config.seed.
///
/// Throws NotFoundError when the keyword is neither in the lexicon nor
/// covered by the knowledge graph.
std::vector<ExpansionCandidate> expand(std::string_view keyword, const Lexicon& lexicon, const KnowledgeGraph& kg,
                                       const ExpansionConfig& config,
                                       const std::set<std::string, std::less<>>& exclude = {});

/// Sound-alike or look-alike words far away in meaning:
/// semantic < tau_low and max(phon, morph) >= tau_high, ranked by that max.
std::vector<ExpansionCandidate> dada_pun_candidates(std::string_view keyword, const Lexicon& lexicon,
                                                    const ExpansionConfig& config);

/// Uniform pick over lexicon words other than `keyword`. The pick is
/// mix64(seed ^ fnv1a64(keyword) ^ draw_index) mod n over the remaining words
/// in lexicographic order. Throws DegenerateInputError when fewer than two
/// entries exist.
ExpansionCandidate dada_chance_candidate(std::string_view keyword, const Lexicon& lexicon, std::uint64_t seed,
                                         std::uint64_t draw_index);

/// True when a candidate satisfies the pun predicate under `config`.
bool satisfies_pun_predicate(const LexiconEntry& keyword, const LexiconEntry& candidate,
                             const ExpansionConfig& config);

}  // namespace mappa
