#include "mappa/classify.hpp"

#include <cmath>
#include <fstream>
#include <istream>

#include "mappa/error.hpp"
#include "mappa/text.hpp"

namespace mappa {

CategorySeeds parse_category_seeds(std::istream& in) {
    CategorySeeds seeds;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (text::trim(line).empty() || line.front() == '#') continue;
        const auto fields = text::split(line, '\t');
        if (fields.size() != 2 || fields[1].empty()) throw FormatError("expected 'category<TAB>word'", lineno);
        auto cat = parse_category(text::trim(fields[0]));
        if (!cat) throw FormatError("unknown category '" + std::string(fields[0]) + "'", lineno);
        seeds[*cat].emplace_back(fields[1]);
    }
    return seeds;
}

CategorySeeds load_category_seeds(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open category seeds file: " + path.string());
    return parse_category_seeds(in);
}

CategoryClassifier::CategoryClassifier(const Lexicon& lexicon, const CategorySeeds& seeds) {
    for (auto cat : kCategories) {
        std::vector<double> sum(lexicon.dim(), 0.0);
        std::size_t used = 0;
        if (auto it = seeds.find(cat); it != seeds.end()) {
            for (const auto& w : it->second) {
                const auto* e = lexicon.find(w);
                if (!e) continue;
                double norm = 0.0;
                for (double v : e->embedding) norm += v * v;
                norm = std::sqrt(norm);
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += e->embedding[i] / norm;
                ++used;
            }
        }
        if (used == 0) {
            throw ConfigError("category '" + std::string(to_string(cat)) + "' has no seed word in the lexicon");
        }
        bool nonzero = false;
        for (auto& v : sum) {
            v /= static_cast<double>(used);
            nonzero = nonzero || v != 0.0;
        }
        if (!nonzero) throw ConfigError("category '" + std::string(to_string(cat)) + "' has a zero centroid");
        centroids_[static_cast<std::size_t>(cat)] = std::move(sum);
    }
}

Category CategoryClassifier::classify(std::string_view word, const Lexicon& lexicon,
                                      std::optional<Category> parent) const {
    const auto* e = lexicon.find(word);
    if (!e) return parent.value_or(Category::Mountain);

    double na = 0.0;
    for (double v : e->embedding) na += v * v;
    Category best = kCategories.front();
    double best_cos = -2.0;
    for (auto cat : kCategories) {
        const auto& c = centroid(cat);
        double dot = 0.0, nc = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            dot += e->embedding[i] * c[i];
            nc += c[i] * c[i];
        }
        const double cos = dot / std::sqrt(na * nc);
        if (cos > best_cos) {
            best_cos = cos;
            best = cat;
        }
    }
    return best;
}

Category classify(std::string_view word, const Lexicon& lexicon, const CategorySeeds& seeds,
                  std::optional<Category> parent) {
    return CategoryClassifier(lexicon, seeds).classify(word, lexicon, parent);
}

}  // namespace mappa
