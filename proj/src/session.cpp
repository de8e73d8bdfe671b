#include "mappa/session.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <random>
#include <set>

#include "mappa/error.hpp"
#include "mappa/hashing.hpp"
#include "mappa/keywords.hpp"
#include "mappa/layout.hpp"

namespace mappa {

void SessionConfig::validate() const {
    expansion.validate();
    if (keywords == 0) throw ConfigError("keywords per utterance must be positive");
    if (max_iters <= 0) throw ConfigError("max_iters must be positive");
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
}

Json to_json(const SessionConfig& config) {
    Json quotas = Json::object();
    for (auto c : kChannelOrder) quotas[std::string(to_string(c))] = config.expansion.quota(c);
    Json out;
    out["quotas"] = std::move(quotas);
    out["tau_low"] = config.expansion.tau_low;
    out["tau_high"] = config.expansion.tau_high;
    out["seed"] = config.expansion.seed;
    out["keywords"] = config.keywords;
    out["max_iters"] = config.max_iters;
    out["epsilon"] = config.epsilon;
    return out;
}

namespace {

std::uint64_t as_count(const Json& v, const std::string& what) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw InvalidArgumentError(what + " must be a non-negative integer");
}

double as_real(const Json& v, const std::string& what) {
    if (!v.is_number()) throw InvalidArgumentError(what + " must be a number");
    return v.get<double>();
}

}  // namespace

SessionConfig apply_config_delta(SessionConfig config, const Json& delta) {
    if (delta.is_null()) return config;
    if (!delta.is_object()) throw InvalidArgumentError("config must be a JSON object");
    for (const auto& [key, value] : delta.items()) {
        if (key == "quotas") {
            if (!value.is_object()) throw InvalidArgumentError("quotas must be an object");
            for (const auto& [name, q] : value.items()) {
                auto channel = parse_channel(name);
                if (!channel) throw InvalidArgumentError("unknown channel '" + name + "'");
                config.expansion.quota(*channel) = as_count(q, "quota " + name);
            }
        } else if (key == "tau_low") {
            config.expansion.tau_low = as_real(value, key);
        } else if (key == "tau_high") {
            config.expansion.tau_high = as_real(value, key);
        } else if (key == "seed") {
            config.expansion.seed = as_count(value, key);
        } else if (key == "keywords") {
            config.keywords = as_count(value, key);
        } else if (key == "max_iters") {
            const auto n = as_count(value, key);
            if (n > 1'000'000) throw InvalidArgumentError("max_iters too large");
            config.max_iters = static_cast<int>(n);
        } else if (key == "epsilon") {
            config.epsilon = as_real(value, key);
        } else {
            throw InvalidArgumentError("unknown config key '" + key + "'");
        }
    }
    config.validate();
    return config;
}

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Utterance: return "UTTERANCE";
        case EventKind::Expand: return "EXPAND";
        case EventKind::Config: return "CONFIG";
    }
    return "CONFIG";
}

std::string SessionEvent::to_line() const {
    Json j;
    j["index"] = index;
    j["kind"] = std::string(to_string(kind));
    j["payload"] = payload;
    j["seed_used"] = seed_used;
    return j.dump();
}

SessionEvent SessionEvent::from_line(std::string_view line) {
    Json j;
    try {
        j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("event is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("event must be a JSON object");
    for (const char* key : {"index", "kind", "payload", "seed_used"}) {
        if (!j.contains(key)) throw FormatError(std::string("event lacks '") + key + "'");
    }
    if (!j["index"].is_number_unsigned() || !j["seed_used"].is_number_unsigned() || !j["kind"].is_string() ||
        !j["payload"].is_object()) {
        throw FormatError("event fields have the wrong types");
    }
    SessionEvent ev;
    ev.index = j["index"].get<std::size_t>();
    const auto kind = j["kind"].get<std::string>();
    if (kind == "UTTERANCE") {
        ev.kind = EventKind::Utterance;
    } else if (kind == "EXPAND") {
        ev.kind = EventKind::Expand;
    } else if (kind == "CONFIG") {
        ev.kind = EventKind::Config;
    } else {
        throw FormatError("unknown event kind '" + kind + "'");
    }
    ev.payload = j["payload"];
    ev.seed_used = j["seed_used"].get<std::uint64_t>();
    return ev;
}

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

Session::Session(const Engine& engine, SessionConfig config, std::string id, std::string created_at,
                 std::filesystem::path log_path)
    : engine_(engine),
      config_(std::move(config)),
      id_(std::move(id)),
      created_at_(std::move(created_at)),
      log_path_(std::move(log_path)),
      graph_(engine.layout_params) {}

std::unique_ptr<Session> Session::create(const Engine& engine, SessionConfig config, std::string id,
                                         std::filesystem::path log_path) {
    config.validate();
    if (!log_path.empty()) {
        std::ofstream out(log_path, std::ios::trunc);
        if (!out) throw IoError("cannot create event log: " + log_path.string());
    }
    std::unique_ptr<Session> s(new Session(engine, std::move(config), std::move(id), utc_timestamp(), log_path));
    SessionEvent ev;
    ev.index = 0;
    ev.kind = EventKind::Config;
    ev.payload["session_id"] = s->id_;
    ev.payload["created_at"] = s->created_at_;
    ev.payload["config"] = to_json(s->config_);
    ev.seed_used = s->next_seed();
    s->append(ev);
    return s;
}

std::unique_ptr<Session> Session::replay(const Engine& engine, const std::filesystem::path& log_path, bool attach) {
    std::ifstream in(log_path);
    if (!in) throw IoError("cannot open event log: " + log_path.string());

    std::unique_ptr<Session> s;
    std::string line;
    std::size_t expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        SessionEvent ev;
        try {
            ev = SessionEvent::from_line(line);
        } catch (const FormatError& e) {
            throw ReplayError(std::string("corrupt record: ") + e.what(), expected);
        }
        if (ev.index != expected) {
            throw ReplayError("expected index " + std::to_string(expected) + ", found " + std::to_string(ev.index),
                              expected);
        }
        try {
            if (expected == 0) {
                if (ev.kind != EventKind::Config) throw Error("first event must be CONFIG");
                const auto& p = ev.payload;
                if (!p.contains("config") || !p.contains("session_id") || !p["session_id"].is_string()) {
                    throw Error("CONFIG event 0 lacks session_id or config");
                }
                auto config = apply_config_delta(SessionConfig{}, p["config"]);
                s.reset(new Session(engine, std::move(config), p["session_id"].get<std::string>(),
                                    p.value("created_at", std::string()), {}));
            } else {
                switch (ev.kind) {
                    case EventKind::Config:
                        s->config_ = apply_config_delta(s->config_, ev.payload.value("delta", Json::object()));
                        break;
                    case EventKind::Utterance:
                        if (!ev.payload.contains("text") || !ev.payload["text"].is_string()) {
                            throw Error("UTTERANCE event lacks text");
                        }
                        s->run_utterance(ev.payload["text"].get<std::string>(), ev.seed_used);
                        break;
                    case EventKind::Expand: {
                        const auto& p = ev.payload;
                        if (!p.contains("node_id") || !p["node_id"].is_number_integer()) {
                            throw Error("EXPAND event lacks node_id");
                        }
                        std::optional<std::size_t> count;
                        if (p.contains("count") && !p["count"].is_null()) count = p["count"].get<std::size_t>();
                        s->run_expand(p["node_id"].get<int>(), count, ev.seed_used);
                        break;
                    }
                }
            }
        } catch (const ReplayError&) {
            throw;
        } catch (const std::exception& e) {
            throw ReplayError(e.what(), expected);
        }
        s->event_count_ = ++expected;
    }
    if (!s) throw ReplayError("log is empty", 0);
    if (attach) s->log_path_ = log_path;
    return s;
}

void Session::append(const SessionEvent& event) {
    if (!log_path_.empty()) {
        std::ofstream out(log_path_, std::ios::app);
        if (!out) throw IoError("cannot append to event log: " + log_path_.string());
        out << event.to_line() << '\n';
        out.flush();
        if (!out) throw IoError("write to event log failed: " + log_path_.string());
    }
    ++event_count_;
}

std::uint64_t Session::next_seed() const { return derive_seed(config_.expansion.seed, event_count_); }

std::vector<int> Session::apply_utterance(std::string_view text) {
    if (text.empty()) throw InvalidArgumentError("utterance text must be non-empty");
    std::lock_guard lock(mutex_);
    SessionEvent ev;
    ev.index = event_count_;
    ev.kind = EventKind::Utterance;
    ev.payload["text"] = std::string(text);
    ev.seed_used = next_seed();
    append(ev);
    return run_utterance(text, ev.seed_used);
}

std::vector<int> Session::expand_node(int node_id, std::optional<std::size_t> count) {
    std::lock_guard lock(mutex_);
    graph_.node(node_id);
    SessionEvent ev;
    ev.index = event_count_;
    ev.kind = EventKind::Expand;
    ev.payload["node_id"] = node_id;
    ev.payload["count"] = count ? Json(*count) : Json(nullptr);
    ev.seed_used = next_seed();
    append(ev);
    return run_expand(node_id, count, ev.seed_used);
}

SessionConfig Session::patch_config(const Json& delta) {
    std::lock_guard lock(mutex_);
    auto updated = apply_config_delta(config_, delta);
    SessionEvent ev;
    ev.index = event_count_;
    ev.kind = EventKind::Config;
    ev.payload["delta"] = delta;
    ev.seed_used = next_seed();
    append(ev);
    config_ = updated;
    return config_;
}

std::vector<int> Session::run_utterance(std::string_view text, std::uint64_t seed) {
    std::set<int> before;
    for (const auto& n : graph_.nodes()) before.insert(n.id);

    const auto keywords = extract_keywords({std::string(text), LanguageHint::Auto}, engine_.lexicon, config_.keywords);
    std::vector<int> added, roots;
    for (const auto& kw : keywords) {
        if (graph_.find_word(kw.word)) continue;
        const auto cat = engine_.classifier.classify(kw.word, engine_.lexicon);
        const int id = graph_.add_node(kw.word, cat, 0, assign_glyph(kw.word, cat, engine_.glyphs));
        roots.push_back(id);
        added.push_back(id);
    }

    auto ec = config_.expansion;
    ec.seed = seed;
    for (int root : roots) {
        const auto word = graph_.node(root).word;
        attach_candidates(root, expand(word, engine_.lexicon, engine_.kg, ec), added);
    }
    relayout(before, seed);
    return added;
}

std::vector<int> Session::run_expand(int node_id, std::optional<std::size_t> count, std::uint64_t seed) {
    std::set<int> before;
    for (const auto& n : graph_.nodes()) before.insert(n.id);

    const auto word = graph_.node(node_id).word;
    std::set<std::string, std::less<>> adjacent;
    for (const auto& e : graph_.edges()) {
        if (e.from == node_id) adjacent.insert(graph_.node(e.to).word);
        if (e.to == node_id) adjacent.insert(graph_.node(e.from).word);
    }

    auto ec = config_.expansion;
    ec.seed = seed;
    std::vector<ExpansionCandidate> candidates;
    try {
        candidates = expand(word, engine_.lexicon, engine_.kg, ec, adjacent);
    } catch (const NotFoundError&) {
        // Words reached through the KG alone may have nothing further to offer.
    }
    if (count && candidates.size() > *count) candidates.resize(*count);

    std::vector<int> added;
    attach_candidates(node_id, candidates, added);
    relayout(before, seed);
    return added;
}

void Session::attach_candidates(int node_id, const std::vector<ExpansionCandidate>& candidates,
                                std::vector<int>& added) {
    const auto parent = graph_.node(node_id);
    for (const auto& c : candidates) {
        if (const auto* existing = graph_.find_word(c.word)) {
            const int other = existing->id;
            if (other != node_id && !graph_.connected(node_id, other)) {
                graph_.add_edge(node_id, other, c.relation, c.similarity);
            }
            continue;
        }
        const auto cat = engine_.classifier.classify(c.word, engine_.lexicon, parent.category);
        const int child = graph_.add_node(c.word, cat, parent.depth + 1, assign_glyph(c.word, cat, engine_.glyphs));
        graph_.add_edge(node_id, child, c.relation, c.similarity);
        added.push_back(child);
    }
}

void Session::relayout(const std::set<int>& pinned, std::uint64_t seed) {
    LayoutOptions opts;
    opts.pinned = pinned;
    opts.seed = seed;
    opts.max_iters = config_.max_iters;
    opts.epsilon = config_.epsilon;
    layout(graph_, opts);
}

std::size_t Session::event_count() const {
    std::lock_guard lock(mutex_);
    return event_count_;
}

SessionConfig Session::config() const {
    std::lock_guard lock(mutex_);
    return config_;
}

MindMapGraph Session::graph() const {
    std::lock_guard lock(mutex_);
    return graph_;
}

Scene Session::scene() const {
    std::lock_guard lock(mutex_);
    return emit_scene(graph_);
}

std::string Session::svg() const {
    std::lock_guard lock(mutex_);
    return emit_svg(emit_scene(graph_), engine_.glyphs);
}

std::string new_session_id() {
    std::random_device rd;
    static constexpr char hex[] = "0123456789abcdef";
    std::string id;
    for (int i = 0; i < 4; ++i) {
        std::uint32_t word = rd();
        for (int j = 0; j < 8; ++j) {
            id += hex[word & 0xF];
            word >>= 4;
        }
    }
    return id;
}

bool is_session_id(std::string_view text) {
    if (text.size() != 32) return false;
    for (char c : text) {
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
    }
    return true;
}

SessionStore::SessionStore(const Engine& engine, std::filesystem::path data_dir)
    : engine_(engine), sessions_dir_(std::move(data_dir) / "sessions") {
    std::error_code ec;
    std::filesystem::create_directories(sessions_dir_, ec);
    if (ec) throw IoError("cannot create session directory " + sessions_dir_.string() + ": " + ec.message());
}

std::filesystem::path SessionStore::log_path(std::string_view id) const {
    return sessions_dir_ / (std::string(id) + ".jsonl");
}

std::shared_ptr<Session> SessionStore::create(const Json& config_delta) {
    auto config = apply_config_delta(SessionConfig{}, config_delta);
    std::lock_guard lock(mutex_);
    std::string id;
    do {
        id = new_session_id();
    } while (sessions_.count(id) || std::filesystem::exists(log_path(id)));
    std::shared_ptr<Session> s = Session::create(engine_, std::move(config), id, log_path(id));
    sessions_.emplace(id, s);
    return s;
}

std::shared_ptr<Session> SessionStore::get(std::string_view id) {
    std::lock_guard lock(mutex_);
    if (auto it = sessions_.find(id); it != sessions_.end()) return it->second;
    if (!is_session_id(id) || !std::filesystem::exists(log_path(id))) {
        throw NotFoundError("unknown session '" + std::string(id) + "'");
    }
    std::shared_ptr<Session> s = Session::replay(engine_, log_path(id), true);
    sessions_.emplace(std::string(id), s);
    return s;
}

}  // namespace mappa
