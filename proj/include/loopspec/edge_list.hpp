#pragma once

// Plain-text edge lists:
//
//   # comment
//   n 3
//   1 1
//   1 2
//
// The header line `n <count>` comes first; every other line is `i j` with
// 1-based endpoints (i == j for a loop). Lines starting with '#' and blank
// lines are skipped.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "loopspec/graph.hpp"

namespace loopspec {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline bool parse_index(const std::string& tok, std::size_t& out) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
        return false;
    try {
        out = std::stoull(tok);
    } catch (const std::out_of_range&) {
        return false;
    }
    return true;
}

inline bool blank_or_comment(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank_or_comment(line)) continue;
        std::istringstream ss(line);
        std::string a, b, extra;
        ss >> a >> b;
        if (b.empty() || (ss >> extra)) throw ParseError(lineno, "expected two fields, got '" + line + "'");

        if (!g) {
            std::size_t n = 0;
            if (a != "n" || !detail::parse_index(b, n)) {
                throw ParseError(lineno, "expected header 'n <count>', got '" + line + "'");
            }
            if (n == 0) throw ParseError(lineno, "vertex count must be positive");
            g.emplace(n);
            continue;
        }

        std::size_t i = 0, j = 0;
        if (!detail::parse_index(a, i) || !detail::parse_index(b, j)) {
            throw ParseError(lineno, "malformed edge '" + line + "'");
        }
        try {
            g->add_edge(i, j);
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!g) throw ParseError(lineno, "missing header 'n <count>'");
    return std::move(*g);
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return read_edge_list(ss);
}

}  // namespace loopspec
