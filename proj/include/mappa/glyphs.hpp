#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mappa/mind_map.hpp"

namespace mappa {

/// Painting-element catalogue: how many glyphs each category offers and the
/// SVG fragment for each `<category>_<index>` id that could be read.
class GlyphManifest {
public:
    GlyphManifest() = default;

    /// Builds an in-memory manifest without fragment files.
    static GlyphManifest from_counts(std::map<Category, std::size_t> counts);

    std::size_t count(Category c) const;
    const std::map<Category, std::size_t>& counts() const noexcept { return counts_; }
    const std::filesystem::path& dir() const noexcept { return dir_; }

    /// Inner SVG markup for a glyph id, or nullopt when no file was found.
    std::optional<std::string_view> fragment(std::string_view glyph_id) const;

    void set_fragment(std::string glyph_id, std::string markup);

private:
    friend GlyphManifest load_glyph_manifest(const std::filesystem::path& path);

    std::map<Category, std::size_t> counts_;
    std::filesystem::path dir_;
    std::map<std::string, std::string, std::less<>> fragments_;
};

/// Reads `{"category_counts": {...}, "dir": "<path>"}`. A relative `dir` is
/// resolved against the manifest's own directory. Throws FormatError/IoError.
GlyphManifest load_glyph_manifest(const std::filesystem::path& path);

/// `<category>_<fnv1a64(word) mod count>`. Throws ConfigError when the
/// category has no glyphs.
std::string assign_glyph(std::string_view word, Category category, const GlyphManifest& manifest);

/// Built-in stand-in drawn when a glyph file is missing.
std::string_view fallback_glyph(Category category);

}  // namespace mappa
