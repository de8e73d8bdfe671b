#include "mappa/api.hpp"

#include <vector>

#include "mappa/error.hpp"
#include "mappa/text.hpp"

namespace mappa {

namespace {

ApiResponse json_response(int status, const Json& body) { return {status, "application/json", body.dump()}; }

ApiResponse error_response(int status, std::string_view error, std::string_view detail) {
    Json body;
    body["error"] = std::string(error);
    body["detail"] = std::string(detail);
    return json_response(status, body);
}

Json parse_body(std::string_view body) {
    if (text::trim(body).empty()) return Json::object();
    try {
        return Json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgumentError(std::string("request body is not valid JSON: ") + e.what());
    }
}

Json mutation_result(const std::vector<int>& added, const Session& session) {
    Json out;
    out["new_nodes"] = added;
    out["scene"] = session.scene();
    return out;
}

}  // namespace

ApiResponse Api::handle(std::string_view method, std::string_view path, std::string_view body) const {
    std::vector<std::string_view> parts;
    for (auto p : text::split(path, '/')) {
        if (!p.empty()) parts.push_back(p);
    }
    try {
        if (parts.empty() || parts[0] != "sessions" || parts.size() > 3) {
            return error_response(404, "not_found", "no route for " + std::string(path));
        }

        if (parts.size() == 1) {
            if (method != "POST") return error_response(405, "method_not_allowed", "use POST /sessions");
            auto session = store_.create(parse_body(body));
            Json out;
            out["id"] = session->id();
            return json_response(201, out);
        }

        if (parts.size() == 2) {
            if (method != "GET") return error_response(405, "method_not_allowed", "use GET");
            auto session = store_.get(parts[1]);
            Json out;
            out["id"] = session->id();
            out["created_at"] = session->created_at();
            out["event_count"] = session->event_count();
            out["config"] = to_json(session->config());
            return json_response(200, out);
        }

        const auto action = parts[2];
        const bool known = action == "utterance" || action == "expand" || action == "config" || action == "scene" ||
                           action == "scene.svg";
        if (!known) return error_response(404, "not_found", "no route for " + std::string(path));
        auto session = store_.get(parts[1]);

        if (action == "utterance") {
            if (method != "POST") return error_response(405, "method_not_allowed", "use POST");
            const auto req = parse_body(body);
            if (!req.is_object() || !req.contains("text") || !req["text"].is_string()) {
                return error_response(400, "bad_request", "body must be {\"text\": string}");
            }
            const auto text = req["text"].get<std::string>();
            if (text.empty()) return error_response(400, "bad_request", "text must be non-empty");
            return json_response(200, mutation_result(session->apply_utterance(text), *session));
        }
        if (action == "expand") {
            if (method != "POST") return error_response(405, "method_not_allowed", "use POST");
            const auto req = parse_body(body);
            if (!req.is_object() || !req.contains("node_id") || !req["node_id"].is_number_integer()) {
                return error_response(400, "bad_request", "body must be {\"node_id\": int, \"count\": int?}");
            }
            std::optional<std::size_t> count;
            if (req.contains("count") && !req["count"].is_null()) {
                if (!req["count"].is_number_integer() || req["count"].get<long long>() < 0) {
                    return error_response(400, "bad_request", "count must be a non-negative integer");
                }
                count = req["count"].get<std::size_t>();
            }
            return json_response(200, mutation_result(session->expand_node(req["node_id"].get<int>(), count), *session));
        }
        if (action == "config") {
            if (method == "GET") {
                Json out;
                out["config"] = to_json(session->config());
                return json_response(200, out);
            }
            if (method != "PATCH") return error_response(405, "method_not_allowed", "use PATCH");
            Json out;
            out["config"] = to_json(session->patch_config(parse_body(body)));
            return json_response(200, out);
        }
        if (method != "GET") return error_response(405, "method_not_allowed", "use GET");
        if (action == "scene") return {200, "application/json", dump_scene(session->scene())};
        return {200, "image/svg+xml", session->svg()};
    } catch (const NotFoundError& e) {
        return error_response(404, "not_found", e.what());
    } catch (const InvalidArgumentError& e) {
        return error_response(400, "bad_request", e.what());
    } catch (const ConfigError& e) {
        return error_response(400, "invalid_config", e.what());
    } catch (const std::exception& e) {
        return error_response(500, "internal", e.what());
    }
}

}  // namespace mappa
