#include <httplib.h>

#include "mappa/api.hpp"

namespace mappa {

void bind_routes(httplib::Server& server, const Api& api) {
    auto handler = [&api](const httplib::Request& req, httplib::Response& res) {
        const auto out = api.handle(req.method, req.path, req.body);
        res.status = out.status;
        res.set_content(out.body, out.content_type);
    };
    server.Get(".*", handler);
    server.Post(".*", handler);
    server.Patch(".*", handler);
    server.Put(".*", handler);
    server.Delete(".*", handler);
}

bool serve(const Api& api, const std::string& host, int port) {
    httplib::Server server;
    bind_routes(server, api);
    return server.listen(host, port);
}

}  // namespace mappa
