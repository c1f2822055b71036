/**
 * @file encoding.hpp
 * @brief The cell-list text encoding: a list of cells, each given by its
 * lower-left and upper-right corners, in brace syntax ("{{{1,1},{2,2}}}")
 * or JSON syntax ("[[[1,1],[2,2]]]").
 */
#pragma once

#include "polyo/error.hpp"
#include "polyo/geometry.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polyo {

struct ParseOptions {
    bool dedupe = false;  // silently drop repeated cells instead of failing
};

namespace detail {

// Nested list of integers in either bracket style.
struct Node {
    std::variant<std::int64_t, std::vector<Node>> value;
    bool is_int() const { return std::holds_alternative<std::int64_t>(value); }
    const std::vector<Node>& list() const { return std::get<std::vector<Node>>(value); }
};

class ListParser {
public:
    explicit ListParser(std::string_view s) : s_(s) {}

    Node parse_document() {
        skip();
        Node n = parse_node();
        skip();
        if (pos_ < s_.size() && s_[pos_] == ';') {
            ++pos_;
            skip();
        }
        if (pos_ != s_.size()) fail("unexpected trailing text");
        return n;
    }

private:
    Node parse_node(int depth = 0) {
        if (depth > 8) fail("lists nested too deeply");
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '{' || c == '[') {
            char close = c == '{' ? '}' : ']';
            ++pos_;
            std::vector<Node> items;
            skip();
            if (pos_ < s_.size() && s_[pos_] == close) {
                ++pos_;
                return {std::move(items)};
            }
            while (true) {
                items.push_back(parse_node(depth + 1));
                skip();
                if (pos_ >= s_.size()) fail("missing '" + std::string(1, close) + "'");
                if (s_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (s_[pos_] == close) {
                    ++pos_;
                    return {std::move(items)};
                }
                fail("expected ',' or '" + std::string(1, close) + "'");
            }
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            if (c == '+') ++start;
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
            if (ec != std::errc() || ptr != s_.data() + pos_) fail("invalid integer");
            return {v};
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

inline std::string_view strip_assignment(std::string_view text) {
    // Accept the session form "Q = {...};" as well as the bare list.
    std::size_t k = 0;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    std::size_t id = k;
    while (k < text.size() && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) ++k;
    if (k > id && !std::isdigit(static_cast<unsigned char>(text[id]))) {
        std::size_t e = k;
        while (e < text.size() && std::isspace(static_cast<unsigned char>(text[e]))) ++e;
        if (e < text.size() && text[e] == '=') return text.substr(e + 1);
    }
    return text;
}

inline GridPoint as_point(const Node& n, const char* what) {
    if (n.is_int() || n.list().size() != 2 || !n.list()[0].is_int() || !n.list()[1].is_int()) {
        throw ParseError(std::string(what) + " must be a pair of integers");
    }
    GridPoint p{std::get<std::int64_t>(n.list()[0].value), std::get<std::int64_t>(n.list()[1].value)};
    if (std::abs(p.i) > kCoordinateBound || std::abs(p.j) > kCoordinateBound) {
        throw ParseError("coordinate " + to_string(p) + " exceeds the bound " + std::to_string(kCoordinateBound));
    }
    return p;
}

}  // namespace detail

/// Parses a cell list. Errors are ParseError: malformed text, a pair that is
/// not a unit cell, an empty list, a repeated cell (unless deduped), or
/// coordinates beyond the bound.
inline CellCollection parse_encoding(std::string_view text, const ParseOptions& opts = {}) {
    auto root = detail::ListParser(detail::strip_assignment(text)).parse_document();
    if (root.is_int()) throw ParseError("expected a list of cells");
    std::vector<Cell> cells;
    std::unordered_set<GridPoint, GridPointHash> seen;
    for (const auto& item : root.list()) {
        if (item.is_int() || item.list().size() != 2) throw ParseError("each cell must be a pair of corners");
        GridPoint a = detail::as_point(item.list()[0], "lower-left corner");
        GridPoint b = detail::as_point(item.list()[1], "upper-right corner");
        if (b != a + GridPoint{1, 1}) {
            throw ParseError("corners " + to_string(a) + ", " + to_string(b) + " do not form a unit cell");
        }
        if (!seen.insert(a).second) {
            if (opts.dedupe) continue;
            throw ParseError("duplicate cell " + to_string(a));
        }
        cells.push_back(Cell{a});
    }
    if (cells.empty()) throw ParseError("the cell list is empty");
    try {
        return CellCollection(std::move(cells));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

/// Parses a list of points such as hole corners: "{{2,3}}" or "[[2,3]]".
inline std::vector<GridPoint> parse_points(std::string_view text) {
    auto root = detail::ListParser(text).parse_document();
    if (root.is_int()) throw ParseError("expected a list of points");
    std::vector<GridPoint> out;
    for (const auto& item : root.list()) out.push_back(detail::as_point(item, "point"));
    return out;
}

/// Brace syntax with cells sorted by lower-left corner:
/// "{{{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}}".
inline std::string render_encoding(const CellCollection& P) {
    auto pt = [](GridPoint p) { return "{" + std::to_string(p.i) + ", " + std::to_string(p.j) + "}"; };
    std::string out = "{";
    for (std::size_t k = 0; k < P.cells().size(); ++k) {
        const Cell& c = P.cells()[k];
        if (k) out += ", ";
        out += "{" + pt(c.lower_left()) + ", " + pt(c.upper_right()) + "}";
    }
    return out + "}";
}

}  // namespace polyo
