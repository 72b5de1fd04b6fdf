#ifndef NERON_JUMPS_DUAL_GRAPH_HPP
#define NERON_JUMPS_DUAL_GRAPH_HPP

#include "integer.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace neron_jumps {

/// A component of the special fiber: arithmetic genus and multiplicity.
struct vertex_data {
    std::string id;
    integer genus;
    integer multiplicity;
};

/// Intersection point between two components. The stored order is the
/// orientation used for the attached singularity: (m1, m2) = (mult(u), mult(v)).
struct graph_edge {
    std::size_t u;
    std::size_t v;
};

/// Weighted multigraph of the special fiber of an SNC-model. Immutable once
/// built; parallel edges are distinct intersection points.
class dual_graph {
public:
    dual_graph() = default;

    explicit dual_graph(std::string name) : name_(std::move(name)) {}

    /// Adds a component. Duplicate ids are rejected; numeric invariants are
    /// left to validate().
    std::size_t add_vertex(std::string id, integer genus, integer multiplicity)
    {
        if (index_.contains(id))
            throw error(errc::bad_input, "duplicate vertex id '" + id + "'");
        index_.emplace(id, vertices_.size());
        vertices_.push_back({std::move(id), std::move(genus), std::move(multiplicity)});
        return vertices_.size() - 1;
    }

    void add_edge(const std::string& u, const std::string& v) { add_edge(index_of(u), index_of(v)); }

    void add_edge(std::size_t u, std::size_t v)
    {
        if (u >= vertices_.size() || v >= vertices_.size())
            throw error(errc::bad_input, "edge endpoint out of range");
        edges_.push_back({u, v});
    }

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const std::vector<vertex_data>& vertices() const noexcept { return vertices_; }
    const std::vector<graph_edge>& edges() const noexcept { return edges_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }

    const vertex_data& vertex(std::size_t i) const { return vertices_.at(i); }

    std::optional<std::size_t> find(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const std::string& id) const
    {
        if (auto i = find(id))
            return *i;
        throw error(errc::bad_input, "unknown vertex id '" + id + "'");
    }

    /// Number of edge ends at v (parallel edges counted separately).
    std::size_t degree(std::size_t v) const
    {
        return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(),
            [v](const graph_edge& e) { return e.u == v || e.v == v; }));
    }

    /// Indices of edges touching v.
    std::vector<std::size_t> incident_edges(std::size_t v) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].u == v || edges_[i].v == v)
                out.push_back(i);
        return out;
    }

    /// lcm of all component multiplicities.
    integer multiplicity_lcm() const
    {
        integer l = 1;
        for (const auto& vd : vertices_)
            l = lcm(l, vd.multiplicity);
        return l;
    }

private:
    std::string name_;
    std::vector<vertex_data> vertices_;
    std::vector<graph_edge> edges_;
    std::unordered_map<std::string, std::size_t> index_;
};

enum class violation_kind {
    empty_graph,
    not_connected,
    self_loop,
    bad_multiplicity,
    negative_genus,
    gcd_not_one,
    invalid_fiber,
};

inline std::string_view to_string(violation_kind k)
{
    switch (k) {
    case violation_kind::empty_graph: return "EMPTY_GRAPH";
    case violation_kind::not_connected: return "NOT_CONNECTED";
    case violation_kind::self_loop: return "SELF_LOOP";
    case violation_kind::bad_multiplicity: return "BAD_MULTIPLICITY";
    case violation_kind::negative_genus: return "NEGATIVE_GENUS";
    case violation_kind::gcd_not_one: return "GCD_NOT_ONE";
    case violation_kind::invalid_fiber: return "INVALID_FIBER";
    }
    return "UNKNOWN";
}

struct violation {
    violation_kind kind;
    std::string detail;
};

namespace detail {

inline bool is_connected(const dual_graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n == 0)
        return true;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    for (const auto& e : g.edges()) {
        auto a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

// Sum over edges at v of the multiplicity of the other endpoint.
inline integer neighbour_multiplicity_sum(const dual_graph& g, std::size_t v)
{
    integer s = 0;
    for (const auto& e : g.edges()) {
        if (e.u == v)
            s += g.vertex(e.v).multiplicity;
        else if (e.v == v)
            s += g.vertex(e.u).multiplicity;
    }
    return s;
}

} // namespace detail

/// Every violated invariant, with the offending element. Empty when valid.
inline std::vector<violation> validate(const dual_graph& g)
{
    std::vector<violation> out;
    if (g.vertex_count() == 0) {
        out.push_back({violation_kind::empty_graph, "graph has no vertices"});
        return out;
    }
    bool multiplicities_ok = true;
    integer common = 0;
    for (const auto& vd : g.vertices()) {
        if (vd.multiplicity < 1) {
            out.push_back({violation_kind::bad_multiplicity,
                "vertex '" + vd.id + "' has multiplicity " + vd.multiplicity.str()});
            multiplicities_ok = false;
        }
        if (vd.genus < 0)
            out.push_back({violation_kind::negative_genus, "vertex '" + vd.id + "' has genus " + vd.genus.str()});
        common = gcd(common, vd.multiplicity);
    }
    for (const auto& e : g.edges())
        if (e.u == e.v)
            out.push_back({violation_kind::self_loop, "edge at vertex '" + g.vertex(e.u).id + "' is a self-loop"});
    if (!detail::is_connected(g))
        out.push_back({violation_kind::not_connected, "graph is not connected"});
    if (!multiplicities_ok)
        return out;
    if (common != 1)
        out.push_back({violation_kind::gcd_not_one, "gcd of multiplicities is " + common.str()});

    integer adjunction = 0;
    bool integral = true;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& vd = g.vertex(v);
        integer s = detail::neighbour_multiplicity_sum(g, v);
        if (s % vd.multiplicity != 0) {
            out.push_back({violation_kind::invalid_fiber,
                "self-intersection of '" + vd.id + "' would be -" + s.str() + "/" + vd.multiplicity.str()});
            integral = false;
            continue;
        }
        adjunction += vd.multiplicity * (2 * vd.genus - 2 + s / vd.multiplicity);
    }
    if (integral && adjunction % 2 != 0)
        out.push_back({violation_kind::invalid_fiber, "adjunction sum " + adjunction.str() + " is odd"});
    return out;
}

inline void require_valid(const dual_graph& g)
{
    auto problems = validate(g);
    if (problems.empty())
        return;
    std::string msg = g.name().empty() ? std::string("graph") : "graph '" + g.name() + "'";
    msg += " is invalid:";
    for (const auto& p : problems)
        msg += " [" + std::string(to_string(p.kind)) + "] " + p.detail + ";";
    throw error(errc::invalid_graph, msg);
}

/// Self-intersection of the component v in the fiber, from X_k . C = 0.
inline integer self_intersection_model(const dual_graph& g, std::size_t v)
{
    const auto& vd = g.vertex(v);
    integer s = detail::neighbour_multiplicity_sum(g, v);
    if (s % vd.multiplicity != 0)
        throw error(errc::not_integer, "self-intersection of '" + vd.id + "' is not an integer");
    return -(s / vd.multiplicity);
}

/// Genus of the generic fiber by adjunction.
inline integer genus(const dual_graph& g)
{
    integer sum = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& vd = g.vertex(v);
        sum += vd.multiplicity * (2 * vd.genus - 2 - self_intersection_model(g, v));
    }
    if (sum % 2 != 0)
        throw error(errc::not_integer, "adjunction sum is odd");
    return 1 + sum / 2;
}

/// Components of positive genus, or rational ones meeting the rest in >= 3 points.
inline std::vector<std::size_t> principal_vertices(const dual_graph& g)
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.vertex(v).genus > 0 || g.degree(v) >= 3)
            out.push_back(v);
    return out;
}

/// lcm of multiplicities of the principal components (1 if there are none).
inline integer expected_denominator(const dual_graph& g)
{
    integer l = 1;
    for (auto v : principal_vertices(g))
        l = lcm(l, g.vertex(v).multiplicity);
    return l;
}

} // namespace neron_jumps

#endif // NERON_JUMPS_DUAL_GRAPH_HPP
