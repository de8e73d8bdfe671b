#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mappa {

struct KgTriple {
    std::string head;
    std::string relation;
    std::string tail;

    auto operator<=>(const KgTriple&) const = default;
};

struct KgNeighbor {
    std::string neighbor;
    std::string relation;

    auto operator<=>(const KgNeighbor&) const = default;
};

/// Concept-relation-concept triples with an undirected adjacency index.
class KnowledgeGraph {
public:
    /// Adds a triple. Returns false for self-loops (not added) and duplicates.
    /// Throws FormatError on empty fields or fields containing tabs/newlines.
    bool add(KgTriple triple);

    const std::set<KgTriple>& triples() const noexcept { return triples_; }
    std::size_t size() const noexcept { return triples_.size(); }

    /// Self-loop lines skipped while loading.
    std::size_t skipped_self_loops() const noexcept { return skipped_self_loops_; }

    bool covered(std::string_view word) const;

    /// Neighbors in both directions, sorted by (neighbor, relation).
    std::vector<KgNeighbor> neighbors(std::string_view word) const;

private:
    friend KnowledgeGraph parse_kg(std::istream& in);

    std::set<KgTriple> triples_;
    std::map<std::string, std::set<KgNeighbor>, std::less<>> adjacency_;
    std::size_t skipped_self_loops_ = 0;
};

/// Reads `head<TAB>relation<TAB>tail` lines; `#` comments and blank lines skipped.
KnowledgeGraph load_kg(const std::filesystem::path& path);
KnowledgeGraph parse_kg(std::istream& in);

void write_kg(std::ostream& out, const KnowledgeGraph& kg);

inline bool covered(std::string_view word, const KnowledgeGraph& kg) { return kg.covered(word); }
inline std::vector<KgNeighbor> kg_neighbors(std::string_view word, const KnowledgeGraph& kg) {
    return kg.neighbors(word);
}

}  // namespace mappa
