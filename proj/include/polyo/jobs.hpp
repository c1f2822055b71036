/**
 * @file jobs.hpp
 * @brief Job requests and responses shared by the command line tool and the
 * HTTP service: option parsing, command dispatch, JSON and text rendering.
 */
#pragma once

#include "polyo/encoding.hpp"
#include "polyo/error.hpp"
#include "polyo/field.hpp"
#include "polyo/geometry.hpp"
#include "polyo/groebner.hpp"
#include "polyo/hilbert.hpp"
#include "polyo/ideals.hpp"
#include "polyo/toric.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <optional>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

namespace polyo {

using json = nlohmann::json;

inline constexpr std::array<std::string_view, 8> kCommands = {"classify", "ideal",    "matrix",  "toric",
                                                              "compare",  "groebner", "initial", "hilbert"};

inline bool is_command(std::string_view c) {
    return std::find(kCommands.begin(), kCommands.end(), c) != kCommands.end();
}

enum class OutputFormat { text, json };

struct JobOptions {
    FieldSpec field;
    RingChoice ring_choice = RingChoice::ranked;
    OrderKind term_order = OrderKind::ranked_lex;
    std::optional<std::vector<GridPoint>> holes;  // nullopt: detect
    OutputFormat format = OutputFormat::json;
    double timeout_seconds = 0;  // 0: none
    bool dedupe = false;
    bool all_minors = false;  // ideal: also list every nonzero 2-minor of M(P)
};

inline OrderKind parse_term_order(std::string_view s) {
    if (s == "lex") return OrderKind::ranked_lex;
    if (s == "grevlex") return OrderKind::ranked_grevlex;
    throw ParseError("unknown term order '" + std::string(s) + "' (expected lex or grevlex)");
}

inline RingChoice parse_ring_choice(long v) {
    if (v == 1) return RingChoice::ranked;
    if (v == 2) return RingChoice::convex;
    throw ParseError("ring choice must be 1 or 2");
}

inline OutputFormat parse_format(std::string_view s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    throw ParseError("unknown format '" + std::string(s) + "' (expected text or json)");
}

/// "auto" means detect; otherwise a point list in either syntax.
inline std::optional<std::vector<GridPoint>> parse_holes(std::string_view s) {
    if (s == "auto") return std::nullopt;
    return parse_points(s);
}

struct JobRequest {
    std::string cells;  // encoding text in either syntax
    std::string command;
    JobOptions options;

    /// Accepts {"cells": string | array, "command": string, "options": {...}}.
    static JobRequest from_json(const json& j) {
        if (!j.is_object()) throw ParseError("request must be a JSON object");
        JobRequest r;
        if (!j.contains("cells")) throw ParseError("request has no 'cells'");
        const auto& cells = j.at("cells");
        if (cells.is_string()) r.cells = cells.get<std::string>();
        else if (cells.is_array()) r.cells = cells.dump();
        else throw ParseError("'cells' must be a string or an array");
        if (j.contains("command")) {
            if (!j.at("command").is_string()) throw ParseError("'command' must be a string");
            r.command = j.at("command").get<std::string>();
        }
        if (j.contains("options")) {
            const auto& o = j.at("options");
            if (!o.is_object()) throw ParseError("'options' must be an object");
            auto str = [&](const char* key) {
                if (!o.at(key).is_string()) throw ParseError(std::string("option '") + key + "' must be a string");
                return o.at(key).get<std::string>();
            };
            for (const auto& [key, value] : o.items()) {
                if (key == "field") r.options.field = FieldSpec::parse(str("field"));
                else if (key == "ring_choice") {
                    if (!value.is_number_integer()) throw ParseError("option 'ring_choice' must be 1 or 2");
                    r.options.ring_choice = parse_ring_choice(value.get<long>());
                } else if (key == "term_order") r.options.term_order = parse_term_order(str("term_order"));
                else if (key == "holes") {
                    if (value.is_string()) r.options.holes = parse_holes(value.get<std::string>());
                    else if (value.is_array()) r.options.holes = parse_points(value.dump());
                    else if (!value.is_null()) throw ParseError("option 'holes' must be \"auto\" or a list of points");
                } else if (key == "format") r.options.format = parse_format(str("format"));
                else if (key == "timeout_seconds") {
                    if (!value.is_number() || value.get<double>() < 0) throw ParseError("option 'timeout_seconds' must be a nonnegative number");
                    r.options.timeout_seconds = value.get<double>();
                } else if (key == "dedupe") {
                    if (!value.is_boolean()) throw ParseError("option 'dedupe' must be a boolean");
                    r.options.dedupe = value.get<bool>();
                } else if (key == "all_minors") {
                    if (!value.is_boolean()) throw ParseError("option 'all_minors' must be a boolean");
                    r.options.all_minors = value.get<bool>();
                } else {
                    throw ParseError("unknown option '" + key + "'");
                }
            }
        }
        return r;
    }
};

struct JobResponse {
    json body;
    std::string text;
    std::optional<ErrorCode> error;
    OutputFormat format = OutputFormat::json;

    int exit_code() const {
        if (!error) return 0;
        switch (*error) {
            case ErrorCode::parse: return 2;
            case ErrorCode::precondition:
            case ErrorCode::ring_mismatch: return 3;
            case ErrorCode::timeout: return 4;
            case ErrorCode::internal: return 1;
        }
        return 1;
    }

    int http_status() const {
        if (!error) return 200;
        switch (*error) {
            case ErrorCode::parse: return 400;
            case ErrorCode::precondition:
            case ErrorCode::ring_mismatch: return 422;
            case ErrorCode::timeout: return 408;
            case ErrorCode::internal: return 500;
        }
        return 500;
    }

    /// The exact bytes written by both the CLI and the service.
    std::string payload() const {
        if (format == OutputFormat::text) return text;
        return body.dump(2) + "\n";
    }
};

namespace detail {

inline json point_json(GridPoint p) { return json::array({p.i, p.j}); }

inline json classify_json(const CellCollection& P) {
    auto c = classify(P);
    json holes = json::array();
    for (const auto& h : detect_holes(P)) {
        json cells = json::array();
        for (const auto& cell : h.cells) cells.push_back(point_json(cell.a));
        holes.push_back({{"corner", point_json(h.corner)}, {"cells", cells}});
    }
    return {{"is_polyomino", c.is_polyomino},
            {"weakly_connected", c.weakly_connected},
            {"row_convex", c.row_convex},
            {"column_convex", c.column_convex},
            {"convex", c.convex},
            {"simple", c.simple},
            {"hole_count", c.hole_count},
            {"component_count", c.component_count},
            {"rank", P.rank()},
            {"vertex_count", vertex_set(P).size()},
            {"inner_interval_count", inner_intervals(P).size()},
            {"holes", holes},
            {"encoding", render_encoding(P)}};
}

inline json matrix_json(const CellCollection& P) {
    auto M = polyo_matrix(P);
    json rows = json::array();
    for (std::int64_t r = 0; r < M.rows; ++r) {
        json row = json::array();
        for (std::int64_t c = 0; c < M.cols; ++c) {
            const auto& e = M.entry(r, c);
            row.push_back(e ? Variable::x(*e).name() : "0");
        }
        rows.push_back(row);
    }
    return {{"rows", M.rows}, {"cols", M.cols}, {"lower_left", point_json(M.lower_left)},
            {"entries", rows}, {"text", M.render()}};
}

template <class F>
json ring_json(const Ring<F>& R) {
    json vars = json::array();
    for (const auto& v : R.variables()) vars.push_back(v.name());
    return {{"field", R.field().name()}, {"order", to_string(R.order().kind)}, {"variables", vars},
            {"description", R.describe()}};
}

template <class F>
json polys_json(const std::vector<Polynomial<F>>& ps, bool binomial_style) {
    json out = json::array();
    // binomials lead with the larger term under the ring's order
    for (const auto& p : ps) out.push_back(binomial_style ? render_binomial(p.monic()) : p.to_string());
    return out;
}

inline IdealOptions ideal_options(const JobOptions& o) { return {o.ring_choice, o.term_order}; }

template <class F>
json run_algebra(const std::string& cmd, const CellCollection& P, const F& K, const JobOptions& o,
                 const ComputeLimits& limits, json& warnings) {
    if (o.ring_choice == RingChoice::convex && o.term_order != OrderKind::ranked_lex &&
        (cmd == "ideal" || cmd == "groebner" || cmd == "initial" || cmd == "hilbert" || cmd == "toric")) {
        warnings.push_back("term order is ignored under ring choice 2");
    }
    std::vector<GridPoint> holes = o.holes ? *o.holes : hole_corners(P);
    if (o.holes && (cmd == "toric" || cmd == "compare") && *o.holes != hole_corners(P)) {
        warnings.push_back("hole corners differ from the detected holes");
    }
    json holes_json = json::array();
    for (auto h : holes) holes_json.push_back(point_json(h));

    if (cmd == "ideal") {
        auto I = polyo_ideal(P, K, ideal_options(o));
        json r = {{"ring", ring_json(*I.ring())},
                  {"generators", polys_json(I.generators(), true)},
                  {"count", I.generators().size()}};
        if (o.all_minors) {
            auto all = all_matrix_minors(polyo_matrix(P), I.ring());
            r["all_minors"] = polys_json(all, true);
        }
        return r;
    }
    if (cmd == "groebner" || cmd == "initial" || cmd == "hilbert") {
        auto I = polyo_ideal(P, K, ideal_options(o));
        if (cmd == "groebner") {
            const auto& G = I.groebner_basis(limits);
            return {{"ring", ring_json(*I.ring())}, {"basis", polys_json(G, false)}, {"count", G.size()}};
        }
        if (cmd == "initial") {
            auto in = initial_ideal(I, limits);
            json ms = json::array();
            bool squarefree = true;
            std::uint64_t maxdeg = 0;
            for (const auto& m : in) {
                ms.push_back(I.ring()->render(m));
                squarefree = squarefree && m.squarefree();
                maxdeg = std::max(maxdeg, m.degree());
            }
            return {{"ring", ring_json(*I.ring())}, {"monomials", ms}, {"count", in.size()},
                    {"squarefree", squarefree}, {"max_degree", maxdeg}};
        }
        auto H = reduced_hilbert_series(I, limits);
        return {{"numerator", H.numerator.coefficients()},
                {"numerator_text", H.numerator.to_string()},
                {"denominator_exponent", H.denominator_exponent},
                {"multiplicity", H.numerator.at_one()},
                {"text", H.to_string()}};
    }
    if (cmd == "toric") {
        auto grevlex = build_ring(P, K, IdealOptions{RingChoice::ranked, OrderKind::ranked_grevlex});
        auto J = polyo_toric(P, grevlex, std::optional<std::vector<GridPoint>>(holes), limits);
        auto target = build_ring(P, K, ideal_options(o));
        std::vector<Polynomial<F>> gens;
        for (const auto& g : minimal_generators(J, limits)) gens.push_back(transfer(g, target));
        auto A = alpha(P, holes);
        auto aux = A.aux_variables();
        json images = json::array();
        for (std::size_t n = 0; n < A.vertices.size(); ++n) {
            auto e = A.exponents(n);
            std::string img;
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k]) img += aux[k].name();
            images.push_back({{"vertex", Variable::x(A.vertices[n]).name()}, {"image", img}});
        }
        return {{"ring", ring_json(*target)}, {"holes", holes_json}, {"alpha", images},
                {"generators", polys_json(gens, true)}, {"count", gens.size()}};
    }
    if (cmd == "compare") {
        auto c = toric_compare(P, K, std::optional<std::vector<GridPoint>>(holes), limits);
        if (c.theorem_applies && !c.equal) warnings.push_back("collection is simple and weakly connected but I_P != J_P");
        auto target = build_ring(P, K, IdealOptions{RingChoice::ranked, o.term_order});
        std::vector<Polynomial<F>> extra;
        for (const auto& g : c.extra_generators) extra.push_back(transfer(g, target));
        return {{"equal", c.equal},
                {"theorem_applies", c.theorem_applies},
                {"holes", holes_json},
                {"extra_generators", polys_json(extra, true)},
                {"ideal_generator_count", c.ideal.generators().size()}};
    }
    throw InternalError("unhandled command " + cmd);
}

inline std::string text_for(const std::string& cmd, const json& r) {
    auto lines = [](const json& arr) {
        std::string s;
        for (const auto& x : arr) s += x.get<std::string>() + "\n";
        return s;
    };
    auto yes = [](const json& b) { return b.get<bool>() ? std::string("true") : std::string("false"); };
    if (cmd == "classify") {
        std::string s;
        for (const char* k : {"is_polyomino", "weakly_connected", "row_convex", "column_convex", "convex", "simple"})
            s += std::string(k) + ": " + yes(r.at(k)) + "\n";
        for (const char* k : {"hole_count", "component_count", "rank", "vertex_count", "inner_interval_count"})
            s += std::string(k) + ": " + r.at(k).dump() + "\n";
        for (const auto& h : r.at("holes")) s += "hole corner: " + h.at("corner").dump() + "\n";
        return s;
    }
    if (cmd == "matrix") return r.at("text").get<std::string>();
    if (cmd == "ideal" || cmd == "toric") {
        std::string s = "ring: " + r.at("ring").at("description").get<std::string>() + "\n";
        s += "order: " + r.at("ring").at("order").get<std::string>() + "\n";
        s += "generators (" + r.at("count").dump() + "):\n" + lines(r.at("generators"));
        if (r.contains("all_minors")) s += "all 2-minors of M(P):\n" + lines(r.at("all_minors"));
        return s;
    }
    if (cmd == "groebner") {
        return "order: " + r.at("ring").at("order").get<std::string>() + "\nreduced basis (" + r.at("count").dump() +
               "):\n" + lines(r.at("basis"));
    }
    if (cmd == "initial") {
        return "order: " + r.at("ring").at("order").get<std::string>() + "\ninitial ideal (" + r.at("count").dump() +
               "):\n" + lines(r.at("monomials"));
    }
    if (cmd == "hilbert") return r.at("text").get<std::string>() + "\n";
    if (cmd == "compare") {
        std::string s = "equal: " + yes(r.at("equal")) + "\n";
        s += "theorem_applies: " + yes(r.at("theorem_applies")) + "\n";
        s += "extra generators of degree >= 3 (" + std::to_string(r.at("extra_generators").size()) + "):\n";
        return s + lines(r.at("extra_generators"));
    }
    return r.dump(2) + "\n";
}

}  // namespace detail

namespace detail {

inline void fail(JobResponse& resp, const std::string& command, ErrorCode code, const std::string& message) {
    resp.error = code;
    resp.body = {{"status", "error"},
                 {"command", command},
                 {"error", {{"code", std::string(to_string(code))}, {"message", message}}}};
    resp.text = "error: " + std::string(to_string(code)) + ": " + message + "\n";
}

}  // namespace detail

/// Runs one job. Never throws: failures come back as an error response with
/// a machine-readable code.
inline JobResponse run_command(const JobRequest& req, std::stop_token stop = {}) {
    JobResponse resp;
    resp.format = req.options.format;
    const auto start = std::chrono::steady_clock::now();
    json warnings = json::array();
    try {
        if (!is_command(req.command)) throw ParseError("unknown command '" + req.command + "'");
        auto P = parse_encoding(req.cells, ParseOptions{req.options.dedupe});
        auto limits = ComputeLimits::with_timeout(req.options.timeout_seconds);
        limits.stop = stop;
        json result;
        if (req.command == "classify") result = detail::classify_json(P);
        else if (req.command == "matrix") result = detail::matrix_json(P);
        else {
            result = visit_field(req.options.field, [&](const auto& K) {
                return detail::run_algebra(req.command, P, K, req.options, limits, warnings);
            });
        }
        resp.body = {{"status", "ok"}, {"command", req.command}, {"result", result}};
        resp.text = detail::text_for(req.command, result);
    } catch (const Error& e) {
        detail::fail(resp, req.command, e.code(), e.what());
    } catch (const json::exception& e) {
        detail::fail(resp, req.command, ErrorCode::parse, e.what());
    } catch (const std::exception& e) {
        detail::fail(resp, req.command, ErrorCode::internal, e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    resp.body["timing"] = {{"seconds", seconds}};
    resp.body["warnings"] = warnings;
    return resp;
}

}  // namespace polyo
