#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mappa/engine.hpp"
#include "mappa/expansion.hpp"
#include "mappa/mind_map.hpp"
#include "mappa/scene.hpp"

namespace mappa {

using Json = nlohmann::ordered_json;

struct SessionConfig {
    ExpansionConfig expansion;
    std::size_t keywords = 3;  ///< keywords kept per utterance
    int max_iters = 2000;
    double epsilon = 0.5;

    void validate() const;
    bool operator==(const SessionConfig&) const = default;
};

/// {"quotas":{"KG":3,...},"tau_low":..,"tau_high":..,"seed":..,"keywords":..,"max_iters":..,"epsilon":..}
Json to_json(const SessionConfig& config);

/// Applies the fields present in `delta` (any subset of to_json's keys; quotas
/// may list a subset of channels). Throws InvalidArgumentError for unknown
/// keys or wrongly typed values and ConfigError when the result is invalid.
SessionConfig apply_config_delta(SessionConfig config, const Json& delta);

enum class EventKind { Utterance, Expand, Config };

std::string_view to_string(EventKind kind);

/// One line of a session's event log.
struct SessionEvent {
    std::size_t index = 0;
    EventKind kind = EventKind::Config;
    Json payload;
    std::uint64_t seed_used = 0;

    std::string to_line() const;
    /// Throws FormatError.
    static SessionEvent from_line(std::string_view line);
};

/// A growing mind map driven by utterances and expand actions.
///
/// Every mutation is appended to the event log (when one is attached) before
/// it is executed, with the seed it runs under; replaying the log re-executes
/// the same actions and reproduces the graph exactly. All public members are
/// safe to call from several threads; mutations of one session are serialized.
class Session {
public:
    /// Starts an empty session and records CONFIG event 0. An empty
    /// `log_path` keeps the session in memory only. Throws IoError.
    static std::unique_ptr<Session> create(const Engine& engine, SessionConfig config, std::string id,
                                           std::filesystem::path log_path = {});

    /// Rebuilds a session from its log. With `attach` the log stays open for
    /// further events. Throws ReplayError naming the offending index.
    static std::unique_ptr<Session> replay(const Engine& engine, const std::filesystem::path& log_path,
                                           bool attach = true);

    /// Extracts keywords, adds each unseen one as a depth-0 node, expands it
    /// once and re-runs the layout with earlier nodes pinned. Returns the ids
    /// of all nodes added. Throws InvalidArgumentError for empty text.
    std::vector<int> apply_utterance(std::string_view text);

    /// Expands an existing node. Candidates already adjacent to it are
    /// skipped; words present elsewhere in the map get an extra edge instead
    /// of a new node. `count` caps how many candidates are used.
    /// Throws NotFoundError for an unknown node id.
    std::vector<int> expand_node(int node_id, std::optional<std::size_t> count = std::nullopt);

    /// Throws InvalidArgumentError / ConfigError; nothing is logged on failure.
    SessionConfig patch_config(const Json& delta);

    const std::string& id() const noexcept { return id_; }
    const std::string& created_at() const noexcept { return created_at_; }
    std::size_t event_count() const;
    SessionConfig config() const;
    MindMapGraph graph() const;
    Scene scene() const;
    std::string svg() const;
    const std::filesystem::path& log_path() const noexcept { return log_path_; }

private:
    Session(const Engine& engine, SessionConfig config, std::string id, std::string created_at,
            std::filesystem::path log_path);

    void append(const SessionEvent& event);
    std::uint64_t next_seed() const;

    std::vector<int> run_utterance(std::string_view text, std::uint64_t seed);
    std::vector<int> run_expand(int node_id, std::optional<std::size_t> count, std::uint64_t seed);
    void attach_candidates(int node_id, const std::vector<ExpansionCandidate>& candidates, std::vector<int>& added);
    void relayout(const std::set<int>& pinned, std::uint64_t seed);

    const Engine& engine_;
    SessionConfig config_;
    std::string id_;
    std::string created_at_;
    std::filesystem::path log_path_;
    MindMapGraph graph_;
    std::size_t event_count_ = 0;
    mutable std::mutex mutex_;
};

/// 32 lowercase hex characters from 128 random bits.
std::string new_session_id();
bool is_session_id(std::string_view text);

/// Sessions of one server, persisted as `<data_dir>/sessions/<id>.jsonl`.
class SessionStore {
public:
    SessionStore(const Engine& engine, std::filesystem::path data_dir);

    /// Throws IoError, InvalidArgumentError, ConfigError.
    std::shared_ptr<Session> create(const Json& config_delta = Json::object());

    /// Loads the session from disk on first access after a restart.
    /// Throws NotFoundError.
    std::shared_ptr<Session> get(std::string_view id);

    std::filesystem::path log_path(std::string_view id) const;
    const Engine& engine() const noexcept { return engine_; }

private:
    const Engine& engine_;
    std::filesystem::path sessions_dir_;
    std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
    std::mutex mutex_;
};

}  // namespace mappa
