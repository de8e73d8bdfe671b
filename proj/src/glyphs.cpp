#include "mappa/glyphs.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mappa/error.hpp"
#include "mappa/hashing.hpp"

namespace mappa {

namespace {

/// Drops an XML declaration and an enclosing <svg> element, keeping the body.
std::string strip_svg_wrapper(std::string markup) {
    if (auto decl = markup.find("<?xml"); decl != std::string::npos) {
        const auto end = markup.find("?>", decl);
        if (end != std::string::npos) markup.erase(decl, end + 2 - decl);
    }
    const auto open = markup.find("<svg");
    if (open != std::string::npos) {
        const auto body = markup.find('>', open);
        const auto close = markup.rfind("</svg>");
        if (body != std::string::npos && close != std::string::npos && close > body) {
            markup = markup.substr(body + 1, close - body - 1);
        }
    }
    const auto first = markup.find_first_not_of(" \t\r\n");
    const auto last = markup.find_last_not_of(" \t\r\n");
    return first == std::string::npos ? std::string() : markup.substr(first, last - first + 1);
}

}  // namespace

GlyphManifest GlyphManifest::from_counts(std::map<Category, std::size_t> counts) {
    GlyphManifest m;
    m.counts_ = std::move(counts);
    return m;
}

std::size_t GlyphManifest::count(Category c) const {
    auto it = counts_.find(c);
    return it == counts_.end() ? 0 : it->second;
}

std::optional<std::string_view> GlyphManifest::fragment(std::string_view glyph_id) const {
    auto it = fragments_.find(glyph_id);
    if (it == fragments_.end()) return std::nullopt;
    return std::string_view(it->second);
}

void GlyphManifest::set_fragment(std::string glyph_id, std::string markup) {
    fragments_.insert_or_assign(std::move(glyph_id), std::move(markup));
}

GlyphManifest load_glyph_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open glyph manifest: " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("glyph manifest is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("category_counts") || !doc["category_counts"].is_object()) {
        throw FormatError("glyph manifest lacks a 'category_counts' object");
    }

    GlyphManifest m;
    for (const auto& [name, value] : doc["category_counts"].items()) {
        auto cat = parse_category(name);
        if (!cat) throw FormatError("unknown category in glyph manifest: " + name);
        if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
            throw FormatError("glyph count for " + name + " must be a non-negative integer");
        }
        m.counts_[*cat] = value.get<std::size_t>();
    }

    std::filesystem::path dir = doc.value("dir", std::string("."));
    if (dir.is_relative()) dir = path.parent_path() / dir;
    m.dir_ = dir;

    for (const auto& [cat, count] : m.counts_) {
        for (std::size_t i = 0; i < count; ++i) {
            const auto id = std::string(to_string(cat)) + "_" + std::to_string(i);
            std::ifstream f(dir / (id + ".svg"));
            if (!f) continue;
            std::ostringstream buf;
            buf << f.rdbuf();
            m.fragments_.emplace(id, strip_svg_wrapper(buf.str()));
        }
    }
    return m;
}

std::string assign_glyph(std::string_view word, Category category, const GlyphManifest& manifest) {
    const auto n = manifest.count(category);
    if (n == 0) {
        throw ConfigError("glyph manifest has no glyphs for category '" + std::string(to_string(category)) + "'");
    }
    return std::string(to_string(category)) + "_" + std::to_string(fnv1a64(word) % n);
}

std::string_view fallback_glyph(Category category) {
    switch (category) {
        case Category::Architecture:
            return R"(<polygon points="-14,10 -14,-4 0,-14 14,-4 14,10" fill="#d9c7a7" stroke="#5a4630" stroke-width="1.5"/>)";
        case Category::Mountain:
            return R"(<polygon points="-18,12 -4,-14 4,-2 9,-9 18,12" fill="#9fb59a" stroke="#3d5a3a" stroke-width="1.5"/>)";
        case Category::River:
            return R"(<polyline points="-18,-6 -9,-11 -3,-3 4,-6 11,-4 18,-10" fill="none" stroke="#4a7fa8" stroke-width="2"/><polyline points="-18,6 -9,1 -3,9 4,6 11,8 18,2" fill="none" stroke="#4a7fa8" stroke-width="2"/>)";
        case Category::Grassland:
            return R"(<polyline points="-14,10 -11,-4 -8,10" fill="none" stroke="#6f9a3c" stroke-width="2"/><polyline points="-4,10 0,-8 4,10" fill="none" stroke="#6f9a3c" stroke-width="2"/><polyline points="8,10 11,-4 14,10" fill="none" stroke="#6f9a3c" stroke-width="2"/>)";
        case Category::Lake:
            return R"(<ellipse cx="0" cy="0" rx="18" ry="10" fill="#b9d6e6" stroke="#4a7fa8" stroke-width="1.5"/>)";
    }
    return "";
}

}  // namespace mappa
