#include "mappa/mind_map.hpp"

#include <algorithm>
#include <utility>

#include "mappa/error.hpp"

namespace mappa {

std::string_view to_string(Category c) {
    switch (c) {
        case Category::Architecture: return "architecture";
        case Category::Mountain: return "mountain";
        case Category::River: return "river";
        case Category::Grassland: return "grassland";
        case Category::Lake: return "lake";
    }
    return "mountain";
}

std::optional<Category> parse_category(std::string_view name) {
    for (auto c : kCategories) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

void LayoutParams::validate() const {
    if (!(l_min > 0.0 && l_min < l_max)) throw ConfigError("layout lengths must satisfy 0 < l_min < l_max");
    if (!(collision_radius >= 0.0)) throw ConfigError("collision radius must be non-negative");
    if (!(pin_weight >= 0.0)) throw ConfigError("pin weight must be non-negative");
}

double target_length(double similarity, const LayoutParams& params) {
    if (!(similarity >= 0.0 && similarity <= 1.0)) {
        throw RangeError("similarity outside [0, 1]: " + std::to_string(similarity));
    }
    return params.l_min + (1.0 - similarity) * (params.l_max - params.l_min);
}

MindMapGraph::MindMapGraph(LayoutParams params) : params_(params) { params_.validate(); }

int MindMapGraph::add_node(std::string word, Category category, int depth, std::string glyph) {
    const int id = nodes_.empty() ? 0 : nodes_.back().id + 1;
    nodes_.push_back({id, std::move(word), category, depth, std::nullopt, std::move(glyph)});
    return id;
}

void MindMapGraph::insert_node(MapNode node) {
    if (!nodes_.empty() && node.id <= nodes_.back().id) {
        throw PreconditionError("node ids must be strictly increasing");
    }
    if (node.depth < 0) throw PreconditionError("node depth must be non-negative");
    nodes_.push_back(std::move(node));
}

const MapEdge& MindMapGraph::add_edge(int from, int to, std::string relation, double similarity) {
    if (from == to) throw PreconditionError("edge endpoints must differ");
    node(from);
    node(to);
    edges_.push_back({from, to, std::move(relation), similarity, target_length(similarity, params_)});
    return edges_.back();
}

std::size_t MindMapGraph::index_of(int id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                               [](const MapNode& n, int value) { return n.id < value; });
    if (it == nodes_.end() || it->id != id) throw NotFoundError("unknown node id " + std::to_string(id));
    return static_cast<std::size_t>(it - nodes_.begin());
}

const MapNode* MindMapGraph::find(int id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                               [](const MapNode& n, int value) { return n.id < value; });
    return (it != nodes_.end() && it->id == id) ? &*it : nullptr;
}

MapNode* MindMapGraph::find(int id) {
    return const_cast<MapNode*>(std::as_const(*this).find(id));
}

const MapNode& MindMapGraph::node(int id) const {
    if (const auto* n = find(id)) return *n;
    throw NotFoundError("unknown node id " + std::to_string(id));
}

const MapNode* MindMapGraph::find_word(std::string_view word) const {
    for (const auto& n : nodes_) {
        if (n.word == word) return &n;
    }
    return nullptr;
}

bool MindMapGraph::connected(int a, int b) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const MapEdge& e) {
        return (e.from == a && e.to == b) || (e.from == b && e.to == a);
    });
}

void MindMapGraph::set_position(int id, Vec2 p) {
    auto* n = find(id);
    if (!n) throw NotFoundError("unknown node id " + std::to_string(id));
    n->position = p;
}

std::vector<int> MindMapGraph::parent_indices() const {
    std::vector<int> parent(nodes_.size(), -1);
    for (const auto& e : edges_) {
        const auto ti = index_of(e.to);
        const auto fi = index_of(e.from);
        if (parent[ti] == -1 && nodes_[ti].depth > 0 && nodes_[fi].depth == nodes_[ti].depth - 1) {
            parent[ti] = static_cast<int>(fi);
        }
    }
    return parent;
}

}  // namespace mappa
