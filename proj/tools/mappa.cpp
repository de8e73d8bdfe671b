#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "mappa/api.hpp"
#include "mappa/engine.hpp"
#include "mappa/error.hpp"
#include "mappa/expansion.hpp"
#include "mappa/keywords.hpp"
#include "mappa/session.hpp"
#include "mappa/text.hpp"

namespace fs = std::filesystem;
using namespace mappa;

namespace {

struct ResourceFlags {
    std::string data;
    std::string lexicon;
    std::string kg;
    std::string seeds;
    std::string glyphs;

    void add_to(CLI::App& cmd, bool with_data = true) {
        if (with_data) cmd.add_option("--data", data, "Data directory (default: $MAPPA_DATA or bundled data)");
        cmd.add_option("--lexicon", lexicon, "Lexicon file");
        cmd.add_option("--kg", kg, "Knowledge graph file");
        cmd.add_option("--seeds", seeds, "Category seed words file");
        cmd.add_option("--glyphs", glyphs, "Glyph manifest JSON");
    }

    fs::path data_dir() const {
        if (!data.empty()) return data;
        if (const char* env = std::getenv("MAPPA_DATA"); env && *env) return env;
        return MAPPA_DEFAULT_DATA_DIR;
    }

    /// Explicit flag, then the data directory, then the bundled copy.
    ResourcePaths resolve() const {
        const auto from_dir = ResourcePaths::in_directory(data_dir());
        const auto bundled = ResourcePaths::in_directory(MAPPA_DEFAULT_DATA_DIR);
        auto pick = [](const std::string& flag, const fs::path& dir_file, const fs::path& fallback) -> fs::path {
            if (!flag.empty()) return flag;
            return fs::exists(dir_file) ? dir_file : fallback;
        };
        return {pick(lexicon, from_dir.lexicon, bundled.lexicon), pick(kg, from_dir.kg, bundled.kg),
                pick(seeds, from_dir.category_seeds, bundled.category_seeds),
                pick(glyphs, from_dir.glyph_manifest, bundled.glyph_manifest)};
    }
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_expand_word(const Engine& engine, const std::string& word, std::uint64_t seed, bool as_json) {
    ExpansionConfig config;
    config.seed = seed;
    const auto candidates = expand(word, engine.lexicon, engine.kg, config);
    if (as_json) {
        Json out = Json::array();
        for (const auto& c : candidates) {
            Json rec;
            rec["word"] = c.word;
            rec["channel"] = std::string(to_string(c.channel));
            rec["relation"] = c.relation;
            rec["similarity"] = c.similarity;
            out.push_back(std::move(rec));
        }
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& c : candidates) {
            std::cout << to_string(c.channel) << '\t' << c.relation << '\t' << text::format_double(c.similarity)
                      << '\t' << c.word << '\n';
        }
    }
    return 0;
}

int run_expand_text(const Engine& engine, const std::string& utterance, std::uint64_t seed, bool as_json,
                    const std::string& log, const std::string& svg_out, const std::string& scene_out) {
    SessionConfig config;
    config.expansion.seed = seed;
    auto session = Session::create(engine, config, new_session_id(), log);
    const auto added = session->apply_utterance(utterance);
    const auto scene = session->scene();
    if (!svg_out.empty()) write_file(svg_out, session->svg());
    if (!scene_out.empty()) write_file(scene_out, dump_scene(scene));
    if (as_json) {
        Json out;
        out["new_nodes"] = added;
        out["scene"] = scene;
        std::cout << out.dump(2) << '\n';
    } else {
        // Indented tree: each node under the parent it was expanded from.
        const auto graph = session->graph();
        const auto parents = graph.parent_indices();
        std::vector<std::vector<std::size_t>> children(graph.size());
        for (std::size_t i = 0; i < parents.size(); ++i) {
            if (parents[i] >= 0) children[static_cast<std::size_t>(parents[i])].push_back(i);
        }
        const std::function<void(std::size_t)> print = [&](std::size_t i) {
            const auto& n = graph.nodes()[i];
            std::cout << std::string(2 * static_cast<std::size_t>(n.depth), ' ') << n.word << " ["
                      << to_string(n.category) << "]\n";
            for (auto c : children[i]) print(c);
        };
        for (std::size_t i = 0; i < graph.size(); ++i) {
            if (parents[i] < 0) print(i);
        }
    }
    return 0;
}

int run_idf(const std::string& corpus_dir, const std::string& out_path, const std::string& lexicon_path) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<std::string> documents;
    for (const auto& f : files) documents.push_back(read_file(f));

    std::optional<Lexicon> lexicon;
    if (!lexicon_path.empty()) lexicon = load_lexicon(lexicon_path);
    const Lexicon empty(2);
    const auto table = compute_idf(documents, lexicon ? *lexicon : empty);

    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write " + out_path);
    if (lexicon) {
        // Merge: same lexicon, idf column replaced where the corpus has the word.
        Lexicon merged(lexicon->dim());
        for (const auto& [word, e] : *lexicon) {
            auto copy = e;
            if (auto it = table.find(word); it != table.end()) copy.idf = it->second;
            merged.insert(std::move(copy));
        }
        write_lexicon(out, merged);
    } else {
        out << "# idf over " << documents.size() << " documents: word<TAB>idf\n";
        for (const auto& [word, idf] : table) out << word << '\t' << text::format_double(idf) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mappa - imaginative mind-map expansion and rendering"};
    app.require_subcommand(1);

    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP session service");
    int port = 8080;
    std::string host = "127.0.0.1";
    ResourceFlags serve_res;
    serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
    serve_cmd->add_option("--host", host, "Bind address");
    serve_res.add_to(*serve_cmd);

    auto* expand_cmd = app.add_subcommand("expand", "Expand a word, or a whole utterance into a map");
    ResourceFlags expand_res;
    std::string word, utterance, log, svg_out, scene_out;
    std::uint64_t seed = 0;
    bool as_json = false;
    expand_res.add_to(*expand_cmd);
    auto* word_opt = expand_cmd->add_option("--word", word, "Keyword to expand");
    auto* text_opt = expand_cmd->add_option("--text", utterance, "Utterance to turn into a mind map");
    word_opt->excludes(text_opt);
    expand_cmd->add_option("--seed", seed, "Seed for chance draws and layout");
    expand_cmd->add_flag("--json", as_json, "Print JSON");
    expand_cmd->add_option("--log", log, "With --text: write the session event log here");
    expand_cmd->add_option("--svg", svg_out, "With --text: write the rendered SVG here");
    expand_cmd->add_option("--scene", scene_out, "With --text: write the scene JSON here");

    auto* render_cmd = app.add_subcommand("render", "Replay an event log and render it as SVG");
    ResourceFlags render_res;
    std::string render_log, render_out, render_scene;
    render_res.add_to(*render_cmd);
    render_cmd->add_option("--log", render_log, "Session event log")->required();
    render_cmd->add_option("--out", render_out, "Output SVG path")->required();
    render_cmd->add_option("--scene", render_scene, "Also write the scene JSON here");

    auto* idf_cmd = app.add_subcommand("idf", "Compute idf weights over a corpus directory");
    std::string corpus, idf_out, idf_lexicon;
    idf_cmd->add_option("--corpus", corpus, "Directory of UTF-8 text files, one document each")
        ->required()
        ->check(CLI::ExistingDirectory);
    idf_cmd->add_option("--out", idf_out, "Output file")->required();
    idf_cmd->add_option("--lexicon", idf_lexicon, "Lexicon used for CJK segmentation; output becomes a merged lexicon");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*serve_cmd) {
            const auto engine = Engine::load(serve_res.resolve());
            SessionStore store(engine, serve_res.data_dir());
            Api api(store);
            std::cerr << "mappa: serving on http://" << host << ':' << port << '\n';
            if (!serve(api, host, port)) {
                std::cerr << "mappa: cannot listen on " << host << ':' << port << '\n';
                return 1;
            }
            return 0;
        }
        if (*expand_cmd) {
            if (word.empty() && utterance.empty()) {
                std::cerr << "mappa expand: one of --word or --text is required\n";
                return 2;
            }
            const auto engine = Engine::load(expand_res.resolve());
            if (!word.empty()) return run_expand_word(engine, word, seed, as_json);
            return run_expand_text(engine, utterance, seed, as_json, log, svg_out, scene_out);
        }
        if (*render_cmd) {
            const auto engine = Engine::load(render_res.resolve());
            const auto session = Session::replay(engine, render_log, false);
            write_file(render_out, session->svg());
            if (!render_scene.empty()) write_file(render_scene, dump_scene(session->scene()));
            return 0;
        }
        if (*idf_cmd) return run_idf(corpus, idf_out, idf_lexicon);
    } catch (const std::exception& e) {
        std::cerr << "mappa: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
