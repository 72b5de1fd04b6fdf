#ifndef NERON_JUMPS_CATALOG_HPP
#define NERON_JUMPS_CATALOG_HPP

#include "catalog_data.hpp"
#include "dual_graph.hpp"
#include "graph_io.hpp"
#include "jumps.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace neron_jumps {

struct fiber_type {
    std::string name;
    std::optional<dual_graph> graph;
    /// Sorted, one entry per unit of genus.
    std::vector<rational> expected_jumps;
    int source_table = 0;
    int genus = 0;
};

// ---- family generators ----------------------------------------------------

/// I_k: a cycle of k reduced rational curves. For k = 1 the nodal curve is
/// blown up once, giving a double edge to a component of multiplicity 2.
inline dual_graph cycle_graph(int k, const integer& genus_at_0 = 0)
{
    if (k < 1)
        throw error(errc::bad_input, "cycle length must be positive");
    dual_graph g("I" + std::to_string(k));
    if (k == 1) {
        g.add_vertex("c0", genus_at_0, 1);
        g.add_vertex("e", 0, 2);
        g.add_edge("c0", "e");
        g.add_edge("c0", "e");
        return g;
    }
    for (int i = 0; i < k; ++i)
        g.add_vertex("c" + std::to_string(i), i == 0 ? genus_at_0 : integer(0), 1);
    for (int i = 0; i < k; ++i)
        g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % k));
    return g;
}

/// I_k^*: a chain of k + 1 components of multiplicity 2 with two reduced
/// leaves at each end. k = 0 is I_0^*.
inline dual_graph i_n_star_graph(int k)
{
    if (k < 0)
        throw error(errc::bad_input, "I_n^* index must be non-negative");
    dual_graph g("I" + std::to_string(k) + "*");
    g.add_vertex("a", 0, 1);
    g.add_vertex("b", 0, 1);
    for (int i = 0; i <= k; ++i)
        g.add_vertex("z" + std::to_string(i), 0, 2);
    g.add_vertex("c", 0, 1);
    g.add_vertex("d", 0, 1);
    const std::string last = "z" + std::to_string(k);
    g.add_edge("a", "z0");
    g.add_edge("b", "z0");
    for (int i = 0; i < k; ++i)
        g.add_edge("z" + std::to_string(i), "z" + std::to_string(i + 1));
    g.add_edge("c", last);
    g.add_edge("d", last);
    return g;
}

/// Two fibers joined through their first vertices by a chain of `chain_len`
/// reduced rational curves. Both first vertices must have multiplicity 1.
inline dual_graph glue(const dual_graph& a, const dual_graph& b, int chain_len, std::string name)
{
    if (a.vertex(0).multiplicity != 1 || b.vertex(0).multiplicity != 1)
        throw error(errc::bad_input, "gluing vertices must be reduced");
    dual_graph g(std::move(name));
    for (const auto& [prefix, part] : {std::pair{"a.", &a}, std::pair{"b.", &b}}) {
        for (const auto& v : part->vertices())
            g.add_vertex(prefix + v.id, v.genus, v.multiplicity);
        for (const auto& e : part->edges())
            g.add_edge(prefix + part->vertex(e.u).id, prefix + part->vertex(e.v).id);
    }
    std::string prev = "a." + a.vertex(0).id;
    for (int i = 1; i <= chain_len; ++i) {
        std::string id = "j" + std::to_string(i);
        g.add_vertex(id, 0, 1);
        g.add_edge(prev, id);
        prev = id;
    }
    g.add_edge(prev, "b." + b.vertex(0).id);
    return g;
}

/// I_{n-p-0}: two cycles of n and p reduced curves sharing one component.
inline dual_graph figure_eight_graph(int n, int p)
{
    if (n < 2 || p < 2)
        throw error(errc::bad_input, "figure-eight loops need at least two components");
    dual_graph g("In-p-0");
    g.add_vertex("o", 0, 1);
    for (const auto& [tag, len] : {std::pair{"x", n}, std::pair{"y", p}}) {
        std::string prev = "o";
        for (int i = 1; i < len; ++i) {
            std::string id = tag + std::to_string(i);
            g.add_vertex(id, 0, 1);
            g.add_edge(prev, id);
            prev = id;
        }
        g.add_edge(prev, "o");
    }
    return g;
}

/// I_{n-p-q}: two reduced components joined by three chains with n, p, q
/// interior components.
inline dual_graph theta_graph(int n, int p, int q)
{
    if (n < 0 || p < 0 || q < 0)
        throw error(errc::bad_input, "theta chain lengths must be non-negative");
    dual_graph g("In-p-q");
    g.add_vertex("s", 0, 1);
    g.add_vertex("t", 0, 1);
    for (const auto& [tag, len] : {std::pair{"x", n}, std::pair{"y", p}, std::pair{"w", q}}) {
        std::string prev = "s";
        for (int i = 1; i <= len; ++i) {
            std::string id = tag + std::to_string(i);
            g.add_vertex(id, 0, 1);
            g.add_edge(prev, id);
            prev = id;
        }
        g.add_edge(prev, "t");
    }
    return g;
}

/// One smooth component of genus 2.
inline dual_graph smooth_genus2_graph()
{
    dual_graph g("I0-0-0");
    g.add_vertex("e", 2, 1);
    return g;
}

/// I_{0-0-0}^*: a rational double component meeting six reduced leaves.
inline dual_graph i000_star_graph()
{
    dual_graph g("I0-0-0*");
    g.add_vertex("z", 0, 2);
    for (int i = 0; i < 6; ++i) {
        g.add_vertex("l" + std::to_string(i), 0, 1);
        g.add_edge("l" + std::to_string(i), "z");
    }
    return g;
}

/// Genus-1 graph by name. Families take their index from `k`.
inline dual_graph genus1_graph(std::string_view name, int k = 3)
{
    if (name == "In")
        return cycle_graph(k);
    if (name == "In*")
        return i_n_star_graph(k);
    for (const auto& gt : data::kodaira_graphs)
        if (gt.name == name)
            return parse_graph(gt.text);
    throw error(errc::unknown_type, "no genus-1 graph named '" + std::string(name) + "'");
}

namespace detail {

inline rational parse_rational(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return rational(integer(std::string(s)));
    return rational(integer(std::string(s.substr(0, slash))), integer(std::string(s.substr(slash + 1))));
}

inline std::vector<rational> parse_jump_row(std::string_view row, int genus)
{
    std::vector<rational> out;
    std::size_t pos = 0;
    while (pos <= row.size()) {
        auto comma = row.find(',', pos);
        if (comma == std::string_view::npos)
            comma = row.size();
        out.push_back(parse_rational(row.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    // A single tabulated value for genus 2 is a double jump.
    while (static_cast<int>(out.size()) < genus)
        out.push_back(out.back());
    std::sort(out.begin(), out.end());
    return out;
}

// Component graphs used in the "-m" gluing names.
inline std::optional<dual_graph> gluing_component(std::string_view key)
{
    if (key == "I0")
        return genus1_graph("I");
    if (key == "I0*")
        return genus1_graph("I*");
    if (key == "In")
        return cycle_graph(3);
    if (key == "Ip")
        return cycle_graph(4);
    if (key == "In*")
        return i_n_star_graph(1);
    if (key == "Ip*")
        return i_n_star_graph(2);
    for (const auto& gt : data::kodaira_graphs)
        if (gt.name == key && key != "I" && key != "I*")
            return parse_graph(gt.text);
    return std::nullopt;
}

// Rows whose tabulated value is not reproduced by the gluing graph; kept in
// the table but left without a graph.
inline bool gluing_excluded(std::string_view name) { return name == "II*-III-m"; }

inline std::optional<dual_graph> gluing_graph(std::string_view name)
{
    constexpr std::string_view suffix = "-m";
    if (name.size() <= suffix.size() || name.substr(name.size() - suffix.size()) != suffix)
        return std::nullopt;
    if (name.front() == '2' || gluing_excluded(name))
        return std::nullopt;
    std::string_view body = name.substr(0, name.size() - suffix.size());
    auto dash = body.find('-');
    if (dash == std::string_view::npos || body.find('-', dash + 1) != std::string_view::npos)
        return std::nullopt;
    auto left = gluing_component(body.substr(0, dash));
    auto right = gluing_component(body.substr(dash + 1));
    if (!left || !right)
        return std::nullopt;
    return glue(*left, *right, 1, std::string(name));
}

inline std::optional<dual_graph> encoded_graph(std::string_view name, int table)
{
    if (table == 1)
        return genus1_graph(name);
    if (name == "VI")
        return parse_graph(data::type_vi_graph);
    if (name == "I0-0-0")
        return smooth_genus2_graph();
    if (name == "I0-0-0*")
        return i000_star_graph();
    if (name == "In-0-0") {
        auto g = cycle_graph(3, 1);
        g.set_name("In-0-0");
        return g;
    }
    if (name == "In-p-0")
        return figure_eight_graph(3, 4);
    if (name == "In-p-q")
        return theta_graph(1, 2, 3);
    return gluing_graph(name);
}

} // namespace detail

/// Every tabulated type, in table order. Entries without an encoded graph
/// carry only their expected jumps.
inline std::vector<fiber_type> build_catalog()
{
    std::vector<fiber_type> out;
    for (const auto& row : data::table_rows) {
        fiber_type ft;
        ft.name = std::string(row.name);
        ft.source_table = row.table;
        ft.genus = row.table == 1 ? 1 : 2;
        ft.expected_jumps = detail::parse_jump_row(row.jumps, ft.genus);
        ft.graph = detail::encoded_graph(row.name, row.table);
        out.push_back(std::move(ft));
    }
    return out;
}

inline const std::vector<fiber_type>& catalog()
{
    static const std::vector<fiber_type> c = build_catalog();
    return c;
}

inline std::vector<std::string> catalog_list(bool encoded_only = false)
{
    std::vector<std::string> out;
    for (const auto& ft : catalog())
        if (!encoded_only || ft.graph)
            out.push_back(ft.name);
    return out;
}

inline const fiber_type& catalog_entry(std::string_view name, const std::vector<fiber_type>& cat = catalog())
{
    for (const auto& ft : cat)
        if (ft.name == name)
            return ft;
    throw error(errc::unknown_type, "unknown fiber type '" + std::string(name) + "'");
}

inline spectrum catalog_jumps(std::string_view name)
{
    const auto& ft = catalog_entry(name);
    if (!ft.graph)
        throw error(errc::unknown_type, "fiber type '" + ft.name + "' has no encoded graph");
    return jump_spectrum(*ft.graph);
}

inline std::string format_jump(const rational& j)
{
    return j == 0 ? std::string("0") : to_string(j);
}

inline std::string format_jumps(const std::vector<rational>& js)
{
    std::string s;
    for (const auto& j : js)
        s += (s.empty() ? "" : ", ") + format_jump(j);
    return s.empty() ? "-" : s;
}

struct table_result {
    std::string name;
    int source_table = 0;
    std::vector<rational> expected;
    std::vector<rational> computed;
    bool pass = false;
    std::string detail;
};

struct table_report {
    int genus = 0;
    std::vector<table_result> rows;

    std::size_t passed() const
    {
        return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.pass; }));
    }
    std::size_t failed() const { return rows.size() - passed(); }
    bool ok() const { return !rows.empty() && failed() == 0; }
};

/// Runs every encoded entry of the given genus against its tabulated jumps.
inline table_result check_entry(const fiber_type& ft)
{
    table_result r{ft.name, ft.source_table, ft.expected_jumps, {}, false, {}};
    try {
        if (!ft.graph)
            throw error(errc::unknown_type, "no encoded graph");
        if (genus(*ft.graph) != ft.genus)
            throw error(errc::invalid_graph, "graph has genus " + genus(*ft.graph).str());
        auto s = jump_spectrum(*ft.graph);
        r.computed = s.jumps;
        r.pass = s.jumps == ft.expected_jumps;
        if (!r.pass)
            r.detail = "expected {" + format_jumps(ft.expected_jumps) + "} got {" + format_jumps(s.jumps) + "}";
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    return r;
}

inline table_report run_table(int genus_wanted, const std::vector<fiber_type>& cat = catalog())
{
    if (genus_wanted != 1 && genus_wanted != 2)
        throw error(errc::bad_input, "genus must be 1 or 2");
    table_report rep;
    rep.genus = genus_wanted;
    for (const auto& ft : cat)
        if (ft.genus == genus_wanted && ft.graph)
            rep.rows.push_back(check_entry(ft));
    std::sort(rep.rows.begin(), rep.rows.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return rep;
}

} // namespace neron_jumps

#endif // NERON_JUMPS_CATALOG_HPP
