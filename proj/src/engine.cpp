#include "mappa/engine.hpp"

namespace mappa {

ResourcePaths ResourcePaths::in_directory(const std::filesystem::path& dir) {
    return {dir / "lexicon.tsv", dir / "kg.tsv", dir / "category_seeds.tsv", dir / "glyphs" / "manifest.json"};
}

Engine::Engine(Lexicon lex, KnowledgeGraph graph, CategorySeeds category_seeds, GlyphManifest manifest,
               LayoutParams params)
    : lexicon(std::move(lex)),
      kg(std::move(graph)),
      seeds(std::move(category_seeds)),
      classifier(lexicon, seeds),
      glyphs(std::move(manifest)),
      layout_params(params) {
    layout_params.validate();
}

Engine Engine::load(const ResourcePaths& paths) {
    return Engine(load_lexicon(paths.lexicon), load_kg(paths.kg), load_category_seeds(paths.category_seeds),
                  load_glyph_manifest(paths.glyph_manifest));
}

}  // namespace mappa
