#ifndef NERON_JUMPS_GRAPH_IO_HPP
#define NERON_JUMPS_GRAPH_IO_HPP

// Line-oriented graph text format:
//
//   graph <name>                          (optional, first statement)
//   vertex <id> genus=<int> mult=<int>
//   edge <id1> <id2>                      (repeat for parallel edges)
//
// '#' starts a comment; blank lines are ignored.

#include "dual_graph.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace neron_jumps {

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& msg)
{
    throw error(errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

inline integer parse_int_field(std::string_view token, std::string_view key, std::size_t line)
{
    if (token.substr(0, key.size()) != key || token.size() <= key.size() || token[key.size()] != '=')
        parse_fail(line, "expected " + std::string(key) + "=<int>, got '" + std::string(token) + "'");
    std::string_view digits = token.substr(key.size() + 1);
    std::string_view body = digits;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    if (body.empty() || body.find_first_not_of("0123456789") != std::string_view::npos)
        parse_fail(line, "'" + std::string(digits) + "' is not an integer");
    return integer(std::string(digits));
}

} // namespace detail

/// Parses and validates a graph. Syntax problems raise PARSE_ERROR with the
/// line number; structural problems raise INVALID_GRAPH with the diagnostics.
inline dual_graph parse_graph(std::string_view text)
{
    dual_graph g;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool seen_statement = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;

        const std::string& kw = tok[0];
        if (kw == "graph") {
            if (seen_statement)
                detail::parse_fail(line_no, "'graph' header must come first");
            if (tok.size() < 2)
                detail::parse_fail(line_no, "'graph' needs a name");
            std::string name = tok[1];
            for (std::size_t i = 2; i < tok.size(); ++i)
                name += " " + tok[i];
            g.set_name(name);
        } else if (kw == "vertex") {
            if (tok.size() != 4)
                detail::parse_fail(line_no, "expected 'vertex <id> genus=<int> mult=<int>'");
            integer genus_v = detail::parse_int_field(tok[2], "genus", line_no);
            integer mult = detail::parse_int_field(tok[3], "mult", line_no);
            if (genus_v < 0)
                detail::parse_fail(line_no, "genus must be non-negative");
            if (mult < 1)
                detail::parse_fail(line_no, "mult must be positive");
            if (g.find(tok[1]))
                detail::parse_fail(line_no, "duplicate vertex id '" + tok[1] + "'");
            g.add_vertex(tok[1], genus_v, mult);
        } else if (kw == "edge") {
            if (tok.size() != 3)
                detail::parse_fail(line_no, "expected 'edge <id1> <id2>'");
            auto u = g.find(tok[1]);
            auto v = g.find(tok[2]);
            if (!u)
                detail::parse_fail(line_no, "unknown vertex id '" + tok[1] + "'");
            if (!v)
                detail::parse_fail(line_no, "unknown vertex id '" + tok[2] + "'");
            g.add_edge(*u, *v);
        } else {
            detail::parse_fail(line_no, "unknown statement '" + kw + "'");
        }
        seen_statement = true;
    }
    require_valid(g);
    return g;
}

inline dual_graph read_graph_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw error(errc::bad_input, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_graph(buf.str());
}

inline std::string format_graph(const dual_graph& g)
{
    std::ostringstream out;
    if (!g.name().empty())
        out << "graph " << g.name() << "\n";
    for (const auto& v : g.vertices())
        out << "vertex " << v.id << " genus=" << v.genus << " mult=" << v.multiplicity << "\n";
    for (const auto& e : g.edges())
        out << "edge " << g.vertex(e.u).id << " " << g.vertex(e.v).id << "\n";
    return out.str();
}

} // namespace neron_jumps

#endif // NERON_JUMPS_GRAPH_IO_HPP
