#pragma once

#include <filesystem>

#include "mappa/classify.hpp"
#include "mappa/glyphs.hpp"
#include "mappa/knowledge_graph.hpp"
#include "mappa/lexicon.hpp"
#include "mappa/mind_map.hpp"

namespace mappa {

struct ResourcePaths {
    std::filesystem::path lexicon;
    std::filesystem::path kg;
    std::filesystem::path category_seeds;
    std::filesystem::path glyph_manifest;

    /// Standard file names inside a data directory:
    /// lexicon.tsv, kg.tsv, category_seeds.tsv, glyphs/manifest.json.
    static ResourcePaths in_directory(const std::filesystem::path& dir);
};

/// Read-only resources shared by every session.
struct Engine {
    Lexicon lexicon;
    KnowledgeGraph kg;
    CategorySeeds seeds;
    CategoryClassifier classifier;
    GlyphManifest glyphs;
    LayoutParams layout_params;

    Engine(Lexicon lex, KnowledgeGraph graph, CategorySeeds category_seeds, GlyphManifest manifest,
           LayoutParams params = {});

    static Engine load(const ResourcePaths& paths);
};

}  // namespace mappa
