#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mappa/lexicon.hpp"
#include "mappa/mind_map.hpp"

namespace mappa {

using CategorySeeds = std::map<Category, std::vector<std::string>>;

/// Reads `category<TAB>word` lines; `#` comments and blank lines skipped.
CategorySeeds load_category_seeds(const std::filesystem::path& path);
CategorySeeds parse_category_seeds(std::istream& in);

/// Nearest-centroid classifier over the five categories.
///
/// Each centroid is the component-wise mean of the unit-normalized embeddings
/// of that category's seed words that are present in the lexicon.
class CategoryClassifier {
public:
    /// Throws ConfigError when a category has no seed word in the lexicon
    /// or its centroid is the zero vector.
    CategoryClassifier(const Lexicon& lexicon, const CategorySeeds& seeds);

    /// argmax of cosine(embedding, centroid), ties resolved in kCategories order.
    /// Words without an embedding fall back to `parent`, else Mountain.
    Category classify(std::string_view word, const Lexicon& lexicon,
                      std::optional<Category> parent = std::nullopt) const;

    const std::vector<double>& centroid(Category c) const {
        return centroids_[static_cast<std::size_t>(c)];
    }

private:
    std::array<std::vector<double>, 5> centroids_;
};

Category classify(std::string_view word, const Lexicon& lexicon, const CategorySeeds& seeds,
                  std::optional<Category> parent = std::nullopt);

}  // namespace mappa
