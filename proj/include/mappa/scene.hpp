#pragma once

#include <string>

#include <json.hpp>

#include "mappa/glyphs.hpp"
#include "mappa/mind_map.hpp"

namespace mappa {

/// Scene documents keep keys in schema order so their serialization is canonical.
using Scene = nlohmann::ordered_json;

/// Nodes in id order, edges in insertion order, and a bounding-box viewport
/// with a 10% margin on each side (zero-area box for 0 or 1 nodes).
/// Throws StateError when a node has no position.
Scene emit_scene(const MindMapGraph& graph);

/// Inverse of emit_scene. Throws FormatError on schema violations.
MindMapGraph scene_to_graph(const Scene& scene, const LayoutParams& params = {});

/// Canonical byte form of a scene.
std::string dump_scene(const Scene& scene);

/// One `<g class="node">` per node and one `<path class="route">` per edge.
/// Glyphs missing from the manifest are drawn with a built-in shape.
/// Throws FormatError when the scene does not follow the schema.
std::string emit_svg(const Scene& scene, const GlyphManifest& manifest);

/// Escapes &, <, >, " and ' for XML text and attribute values.
std::string xml_escape(std::string_view text);

}  // namespace mappa
