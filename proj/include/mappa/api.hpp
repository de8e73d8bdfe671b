#pragma once

#include <string>
#include <string_view>

#include "mappa/session.hpp"

namespace httplib {
class Server;
}

namespace mappa {

struct ApiResponse {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

/// Maps HTTP requests onto a SessionStore.
///
///   POST  /sessions                      -> 201 {"id"}
///   POST  /sessions/{id}/utterance       -> {"new_nodes", "scene"}
///   POST  /sessions/{id}/expand          -> {"new_nodes", "scene"}
///   PATCH /sessions/{id}/config          -> {"config"}
///   GET   /sessions/{id}/config          -> {"config"}
///   GET   /sessions/{id}/scene           -> scene JSON
///   GET   /sessions/{id}/scene.svg       -> SVG
///
/// Failures carry {"error", "detail"}.
class Api {
public:
    explicit Api(SessionStore& store) : store_(store) {}

    ApiResponse handle(std::string_view method, std::string_view path, std::string_view body) const;

private:
    SessionStore& store_;
};

/// Registers `api` as the handler for every route of `server`.
void bind_routes(httplib::Server& server, const Api& api);

/// Blocks serving on host:port. Returns false if the socket could not be bound.
bool serve(const Api& api, const std::string& host, int port);

}  // namespace mappa
