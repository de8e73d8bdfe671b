#include "mappa/knowledge_graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "mappa/error.hpp"
#include "mappa/text.hpp"

namespace mappa {

namespace {

void check_field(const std::string& field, std::string_view name) {
    if (field.empty()) throw FormatError("empty " + std::string(name) + " field");
    if (field.find_first_of("\t\n\r") != std::string::npos) {
        throw FormatError(std::string(name) + " contains a tab or newline");
    }
}

}  // namespace

bool KnowledgeGraph::add(KgTriple triple) {
    check_field(triple.head, "head");
    check_field(triple.relation, "relation");
    check_field(triple.tail, "tail");
    if (triple.head == triple.tail) return false;
    auto [it, fresh] = triples_.insert(std::move(triple));
    if (!fresh) return false;
    adjacency_[it->head].insert({it->tail, it->relation});
    adjacency_[it->tail].insert({it->head, it->relation});
    return true;
}

bool KnowledgeGraph::covered(std::string_view word) const {
    return adjacency_.find(word) != adjacency_.end();
}

std::vector<KgNeighbor> KnowledgeGraph::neighbors(std::string_view word) const {
    auto it = adjacency_.find(word);
    if (it == adjacency_.end()) return {};
    return {it->second.begin(), it->second.end()};
}

KnowledgeGraph parse_kg(std::istream& in) {
    KnowledgeGraph kg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (text::trim(line).empty() || line.front() == '#') continue;
        const auto fields = text::split(line, '\t');
        if (fields.size() != 3) {
            throw FormatError("expected 3 tab-separated fields, got " + std::to_string(fields.size()), lineno);
        }
        KgTriple t{std::string(fields[0]), std::string(fields[1]), std::string(fields[2])};
        if (t.head.empty() || t.relation.empty() || t.tail.empty()) {
            throw FormatError("empty field in triple", lineno);
        }
        if (t.head == t.tail) {
            ++kg.skipped_self_loops_;
            continue;
        }
        kg.add(std::move(t));
    }
    return kg;
}

KnowledgeGraph load_kg(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open knowledge graph file: " + path.string());
    return parse_kg(in);
}

void write_kg(std::ostream& out, const KnowledgeGraph& kg) {
    for (const auto& t : kg.triples()) out << t.head << '\t' << t.relation << '\t' << t.tail << '\n';
}

}  // namespace mappa
