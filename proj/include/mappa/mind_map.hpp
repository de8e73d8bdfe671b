#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mappa {

/// The five Shan-shui landscape categories. Declaration order is the
/// tie-break order used by the classifier.
enum class Category { Architecture, Mountain, River, Grassland, Lake };

inline constexpr std::array<Category, 5> kCategories = {
    Category::Architecture, Category::Mountain, Category::River, Category::Grassland, Category::Lake};

/// Lowercase name ("architecture", "mountain", ...), as used in files and scenes.
std::string_view to_string(Category c);
std::optional<Category> parse_category(std::string_view name);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Vec2&) const = default;
};

struct LayoutParams {
    double l_min = 60.0;
    double l_max = 300.0;
    double collision_radius = 24.0;
    double pin_weight = 0.5;

    /// Throws ConfigError unless 0 < l_min < l_max and the rest are non-negative.
    void validate() const;

    bool operator==(const LayoutParams&) const = default;
};

/// l_min + (1 - s)(l_max - l_min). Throws RangeError when s is outside [0, 1].
double target_length(double similarity, const LayoutParams& params = {});

struct MapNode {
    int id = 0;
    std::string word;
    Category category = Category::Mountain;
    int depth = 0;
    std::optional<Vec2> position;
    std::string glyph;

    bool operator==(const MapNode&) const = default;
};

struct MapEdge {
    int from = 0;
    int to = 0;
    std::string relation;
    double similarity = 0.0;
    double target_length = 0.0;

    bool operator==(const MapEdge&) const = default;
};

/// Nodes in increasing id order plus the edges between them.
class MindMapGraph {
public:
    MindMapGraph() = default;
    explicit MindMapGraph(LayoutParams params);

    const LayoutParams& params() const noexcept { return params_; }

    /// Appends a node with the next id and returns that id.
    int add_node(std::string word, Category category, int depth, std::string glyph);

    /// Appends a node with an explicit id, which must exceed every existing id.
    void insert_node(MapNode node);

    /// Adds an edge; target_length is derived from `similarity`.
    /// Throws NotFoundError for unknown ids, PreconditionError for from == to
    /// and RangeError for similarity outside [0, 1].
    const MapEdge& add_edge(int from, int to, std::string relation, double similarity);

    const std::vector<MapNode>& nodes() const noexcept { return nodes_; }
    const std::vector<MapEdge>& edges() const noexcept { return edges_; }
    bool empty() const noexcept { return nodes_.empty(); }
    std::size_t size() const noexcept { return nodes_.size(); }

    const MapNode* find(int id) const;
    MapNode* find(int id);
    /// Throws NotFoundError.
    const MapNode& node(int id) const;
    /// Lowest-id node carrying `word`, if any.
    const MapNode* find_word(std::string_view word) const;

    /// True when an edge joins a and b in either direction.
    bool connected(int a, int b) const;

    void set_position(int id, Vec2 p);

    /// Node index of each node's parent (the source of its first incoming edge
    /// from a node one level shallower); -1 for roots and orphans.
    std::vector<int> parent_indices() const;

    std::size_t index_of(int id) const;

    bool operator==(const MindMapGraph&) const = default;

private:
    LayoutParams params_;
    std::vector<MapNode> nodes_;
    std::vector<MapEdge> edges_;
};

}  // namespace mappa
