/**
 * @file service.hpp
 * @brief Local JSON-over-HTTP service: POST /api/v1/<command> runs a job,
 * GET /api/v1/health reports liveness.
 */
#pragma once

#include "polyo/jobs.hpp"

#include <httplib.h>

#include <string>

namespace polyo {

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;                       // 0: pick a free port
    double default_timeout_seconds = 300;  // applied when a request sets none
};

namespace detail {

// Browsers on the same host may call the API from any port.
inline bool same_host_origin(const std::string& origin) {
    for (const char* prefix : {"http://localhost", "http://127.0.0.1", "http://[::1]"}) {
        std::string p(prefix);
        if (origin.rfind(p, 0) == 0 && (origin.size() == p.size() || origin[p.size()] == ':')) return true;
    }
    return false;
}

inline void add_cors(const httplib::Request& req, httplib::Response& res) {
    auto origin = req.get_header_value("Origin");
    if (!origin.empty() && same_host_origin(origin)) {
        res.set_header("Access-Control-Allow-Origin", origin);
        res.set_header("Vary", "Origin");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    }
}

}  // namespace detail

/// Parses the body, forces the command from the path and runs the job.
inline JobResponse handle_api_request(const std::string& command, const std::string& body,
                                      const ServiceConfig& config = {}) {
    JobRequest req;
    try {
        req = JobRequest::from_json(json::parse(body));
    } catch (const Error& e) {
        JobResponse r;
        detail::fail(r, command, e.code(), e.what());
        r.body["timing"] = {{"seconds", 0.0}};
        r.body["warnings"] = json::array();
        return r;
    } catch (const json::exception& e) {
        JobResponse r;
        detail::fail(r, command, ErrorCode::parse, std::string("invalid JSON: ") + e.what());
        r.body["timing"] = {{"seconds", 0.0}};
        r.body["warnings"] = json::array();
        return r;
    }
    if (!req.command.empty() && req.command != command) {
        JobResponse r;
        detail::fail(r, command, ErrorCode::parse, "body command '" + req.command + "' does not match the endpoint");
        r.body["timing"] = {{"seconds", 0.0}};
        r.body["warnings"] = json::array();
        return r;
    }
    req.command = command;
    if (req.options.timeout_seconds == 0) req.options.timeout_seconds = config.default_timeout_seconds;
    return run_command(req);
}

/// Registers every route on `server`.
inline void install_routes(httplib::Server& server, const ServiceConfig& config = {}) {
    server.Get("/api/v1/health", [](const httplib::Request& req, httplib::Response& res) {
        detail::add_cors(req, res);
        res.set_content(json{{"status", "ok"}}.dump(), "application/json");
    });
    for (auto cmd : kCommands) {
        std::string command(cmd);
        server.Post("/api/v1/" + command, [command, config](const httplib::Request& req, httplib::Response& res) {
            detail::add_cors(req, res);
            auto r = handle_api_request(command, req.body, config);
            res.status = r.http_status();
            res.set_content(r.payload(), r.format == OutputFormat::text ? "text/plain" : "application/json");
        });
    }
    server.Options(R"(/api/v1/.*)", [](const httplib::Request& req, httplib::Response& res) {
        detail::add_cors(req, res);
        res.status = 204;
    });
}

/// Blocks serving requests until the server is stopped. Returns false when
/// the address cannot be bound.
inline bool serve_api(const ServiceConfig& config) {
    httplib::Server server;
    install_routes(server, config);
    return server.listen(config.host, config.port);
}

}  // namespace polyo
