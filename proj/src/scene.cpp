#include "mappa/scene.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "mappa/error.hpp"
#include "mappa/hashing.hpp"

namespace mappa {

Scene emit_scene(const MindMapGraph& graph) {
    Scene scene;
    scene["nodes"] = Scene::array();
    scene["edges"] = Scene::array();

    double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
    double max_x = -min_x, max_y = -min_x;
    for (const auto& n : graph.nodes()) {
        if (!n.position) throw StateError("node " + std::to_string(n.id) + " has no position");
        Scene rec;
        rec["id"] = n.id;
        rec["word"] = n.word;
        rec["category"] = std::string(to_string(n.category));
        rec["x"] = n.position->x;
        rec["y"] = n.position->y;
        rec["glyph"] = n.glyph;
        rec["depth"] = n.depth;
        scene["nodes"].push_back(std::move(rec));
        min_x = std::min(min_x, n.position->x);
        min_y = std::min(min_y, n.position->y);
        max_x = std::max(max_x, n.position->x);
        max_y = std::max(max_y, n.position->y);
    }
    for (const auto& e : graph.edges()) {
        Scene rec;
        rec["from"] = e.from;
        rec["to"] = e.to;
        rec["relation"] = e.relation;
        rec["similarity"] = e.similarity;
        rec["target_len"] = e.target_length;
        scene["edges"].push_back(std::move(rec));
    }

    Scene viewport;
    if (graph.empty()) {
        viewport = {{"x", 0.0}, {"y", 0.0}, {"w", 0.0}, {"h", 0.0}};
    } else {
        const double w = max_x - min_x;
        const double h = max_y - min_y;
        viewport["x"] = min_x - 0.1 * w;
        viewport["y"] = min_y - 0.1 * h;
        viewport["w"] = 1.2 * w;
        viewport["h"] = 1.2 * h;
    }
    scene["viewport"] = std::move(viewport);
    return scene;
}

std::string dump_scene(const Scene& scene) { return scene.dump(); }

namespace {

template <typename T>
T field(const Scene& obj, const char* key, const char* where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw FormatError(std::string(where) + " lacks field '" + key + "'");
    }
    const auto& v = obj.at(key);
    if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) throw FormatError(std::string(where) + "." + key + " must be a string");
    } else if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) throw FormatError(std::string(where) + "." + key + " must be an integer");
    } else {
        if (!v.is_number()) throw FormatError(std::string(where) + "." + key + " must be a number");
    }
    return v.get<T>();
}

void check_shape(const Scene& scene) {
    if (!scene.is_object()) throw FormatError("scene must be a JSON object");
    for (const char* key : {"nodes", "edges"}) {
        if (!scene.contains(key) || !scene[key].is_array()) {
            throw FormatError(std::string("scene lacks a '") + key + "' array");
        }
    }
    if (!scene.contains("viewport") || !scene["viewport"].is_object()) {
        throw FormatError("scene lacks a 'viewport' object");
    }
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

}  // namespace

MindMapGraph scene_to_graph(const Scene& scene, const LayoutParams& params) {
    check_shape(scene);
    MindMapGraph graph(params);
    for (const auto& rec : scene["nodes"]) {
        MapNode n;
        n.id = field<int>(rec, "id", "node");
        n.word = field<std::string>(rec, "word", "node");
        const auto cat = field<std::string>(rec, "category", "node");
        auto parsed = parse_category(cat);
        if (!parsed) throw FormatError("unknown category '" + cat + "'");
        n.category = *parsed;
        n.position = Vec2{field<double>(rec, "x", "node"), field<double>(rec, "y", "node")};
        n.glyph = field<std::string>(rec, "glyph", "node");
        n.depth = field<int>(rec, "depth", "node");
        try {
            graph.insert_node(std::move(n));
        } catch (const PreconditionError& e) {
            throw FormatError(e.what());
        }
    }
    for (const auto& rec : scene["edges"]) {
        try {
            graph.add_edge(field<int>(rec, "from", "edge"), field<int>(rec, "to", "edge"),
                           field<std::string>(rec, "relation", "edge"), field<double>(rec, "similarity", "edge"));
        } catch (const FormatError&) {
            throw;
        } catch (const Error& e) {
            throw FormatError(std::string("invalid edge: ") + e.what());
        }
    }
    return graph;
}

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string emit_svg(const Scene& scene, const GlyphManifest& manifest) {
    check_shape(scene);
    const auto& vp = scene["viewport"];
    // Pad beyond the node bounding box so glyphs and labels at the rim stay visible.
    constexpr double pad = 48.0;
    const double vx = field<double>(vp, "x", "viewport") - pad;
    const double vy = field<double>(vp, "y", "viewport") - pad;
    const double vw = field<double>(vp, "w", "viewport") + 2 * pad;
    const double vh = field<double>(vp, "h", "viewport") + 2 * pad;

    struct Placed {
        double x, y;
    };
    std::map<int, Placed> where;
    for (const auto& rec : scene["nodes"]) {
        where[field<int>(rec, "id", "node")] = {field<double>(rec, "x", "node"), field<double>(rec, "y", "node")};
    }

    std::ostringstream svg;
    svg << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n';
    svg << R"(<svg xmlns="http://www.w3.org/2000/svg" viewBox=")" << num(vx) << ' ' << num(vy) << ' ' << num(vw)
        << ' ' << num(vh) << R"(" width=")" << num(vw) << R"(" height=")" << num(vh) << '"';
    if (scene["nodes"].empty() && scene["edges"].empty()) {
        svg << "/>\n";
        return svg.str();
    }
    svg << ">\n";
    svg << R"(<rect class="paper" x=")" << num(vx) << R"(" y=")" << num(vy) << R"(" width=")" << num(vw)
        << R"(" height=")" << num(vh) << R"(" fill="#f4ecd8"/>)" << '\n';

    svg << "<g class=\"routes\" fill=\"none\" stroke=\"#7a5c3e\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\">\n";
    for (const auto& rec : scene["edges"]) {
        const int from = field<int>(rec, "from", "edge");
        const int to = field<int>(rec, "to", "edge");
        const auto a = where.find(from);
        const auto b = where.find(to);
        if (a == where.end() || b == where.end()) throw FormatError("edge references an unknown node");
        // A slight bend at the midpoint, side chosen by the endpoint ids.
        const double dx = b->second.x - a->second.x;
        const double dy = b->second.y - a->second.y;
        const double side = (mix64(static_cast<std::uint64_t>(from) * 1000003ULL + static_cast<std::uint64_t>(to)) & 1)
                                ? 1.0 : -1.0;
        const double mx = a->second.x + 0.5 * dx - side * 0.08 * dy;
        const double my = a->second.y + 0.5 * dy + side * 0.08 * dx;
        svg << R"(<path class="route" data-from=")" << from << R"(" data-to=")" << to << R"(" data-relation=")"
            << xml_escape(field<std::string>(rec, "relation", "edge")) << R"(" data-similarity=")"
            << num(field<double>(rec, "similarity", "edge")) << R"(" d="M )" << num(a->second.x) << ' '
            << num(a->second.y) << " L " << num(mx) << ' ' << num(my) << " L " << num(b->second.x) << ' '
            << num(b->second.y) << "\"/>\n";
    }
    svg << "</g>\n";

    svg << "<g class=\"nodes\" font-family=\"serif\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (const auto& rec : scene["nodes"]) {
        const auto cat_name = field<std::string>(rec, "category", "node");
        const auto cat = parse_category(cat_name);
        if (!cat) throw FormatError("unknown category '" + cat_name + "'");
        const auto glyph = field<std::string>(rec, "glyph", "node");
        const auto depth = field<int>(rec, "depth", "node");
        svg << R"(<g class="node" data-id=")" << field<int>(rec, "id", "node") << R"(" data-depth=")" << depth
            << R"(" data-category=")" << cat_name << R"(" data-glyph=")" << xml_escape(glyph)
            << R"(" transform="translate()" << num(field<double>(rec, "x", "node")) << ' '
            << num(field<double>(rec, "y", "node")) << ")\">";
        if (auto frag = manifest.fragment(glyph)) {
            svg << *frag;
        } else {
            svg << fallback_glyph(*cat);
        }
        svg << R"(<text y="28")" << (depth == 0 ? R"( font-weight="bold")" : "") << '>'
            << xml_escape(field<std::string>(rec, "word", "node")) << "</text></g>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace mappa
