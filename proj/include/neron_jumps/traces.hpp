#ifndef NERON_JUMPS_TRACES_HPP
#define NERON_JUMPS_TRACES_HPP

// Closed trace formulas for the mu_n action on H^0 - H^1 of the special fiber
// after base change of degree n. Everything uses the ring-side action
// [xi](pi') = xi pi'; the sign flip to the Jacobian side happens in jumps.hpp.

#include "character_poly.hpp"
#include "dual_graph.hpp"
#include "hj_resolution.hpp"

#include <string>
#include <utility>
#include <vector>

namespace neron_jumps {

/// Singularity over edge e at degree n, oriented (m1, m2) = (mult(u), mult(v)).
/// C_1 of the resolution chain touches v, C_L touches u.
inline singularity_params edge_singularity(const dual_graph& g, std::size_t edge, const integer& n)
{
    const auto& e = g.edges().at(edge);
    return {g.vertex(e.u).multiplicity, g.vertex(e.v).multiplicity, n};
}

inline std::string edge_label(const dual_graph& g, std::size_t edge)
{
    const auto& e = g.edges().at(edge);
    return g.vertex(e.u).id + "-" + g.vertex(e.v).id;
}

namespace detail {

inline void require_degree(const dual_graph& g, const integer& n)
{
    if (n < 2)
        throw error(errc::bad_input, "degree must be at least 2");
    if (gcd(n, g.multiplicity_lcm()) != 1)
        throw error(errc::not_coprime, "degree " + n.str() + " is not prime to the multiplicities");
}

inline resolution_chain regular_chain(const singularity_params& p)
{
    auto c = resolve(p);
    if (!is_shape_regular(c))
        throw error(errc::shape_not_regular,
            "(" + p.m1.str() + ", " + p.m2.str() + ", " + p.n.str() + ") is not shape-regular; increase n");
    return c;
}

} // namespace detail

/// Self-intersection of the strict transform of component v after base
/// change: minus the multiplicities of the adjacent chain ends over mult(v).
inline integer self_intersection_upstairs(const dual_graph& g, std::size_t v, const integer& n)
{
    detail::require_degree(g, n);
    integer adjacent = 0;
    for (auto ei : g.incident_edges(v)) {
        const auto& e = g.edges()[ei];
        auto chain = detail::regular_chain(edge_singularity(g, ei, n));
        if (e.v == v)
            adjacent += chain.mu(1);
        if (e.u == v)
            adjacent += chain.mu(chain.length());
    }
    const integer& m = g.vertex(v).multiplicity;
    if (adjacent % m != 0)
        throw error(errc::not_integer, "upstairs self-intersection of '" + g.vertex(v).id + "' is not integral");
    return -(adjacent / m);
}

/// Vertex contribution: sum_{k<m} x^{k alpha_m} ((m - k) C^2 + 1 - p_a).
inline character_poly vertex_trace(const dual_graph& g, std::size_t v, const integer& n)
{
    const auto& vd = g.vertex(v);
    const integer c2 = self_intersection_upstairs(g, v, n);
    const integer alpha = mod_inverse(vd.multiplicity, n);
    character_poly out(n);
    for (integer k = 0; k < vd.multiplicity; ++k)
        out.add_term(k * alpha, (vd.multiplicity - k) * c2 + 1 - vd.genus);
    return out;
}

/// Edge contribution from the closed formula; valid for shape-regular chains.
inline character_poly edge_trace(const singularity_params& p)
{
    auto c = detail::regular_chain(p);
    const integer& n = p.n;
    const integer m = gcd(p.m1, p.m2);
    const integer a1 = mod_inverse(p.m1, n);
    const integer a2 = mod_inverse(p.m2, n);
    const integer am = mod_inverse(m, n);
    const std::size_t L = c.length();

    character_poly out(n);
    const integer& mu0 = c.mu(0);
    const integer& mu1 = c.mu(1);
    for (integer r = 0; r < mu0; ++r)
        out.add_term(r * a2, mu1 - ceil_div(r * mu1, mu0));
    const integer& muL1 = c.mu(L + 1);
    const integer& muL = c.mu(L);
    for (integer r = 0; r < muL1; ++r)
        out.add_term(r * a1, muL - ceil_div(r * muL, muL1));
    for (integer r = 0; r < m; ++r)
        out.add_term(r * am, -1);
    return out;
}

struct labelled_trace {
    std::string label;
    character_poly trace;
};

struct trace_breakdown {
    std::vector<labelled_trace> vertices;
    std::vector<labelled_trace> edges;
    character_poly total;
};

inline trace_breakdown trace_contributions(const dual_graph& g, const integer& n)
{
    require_valid(g);
    detail::require_degree(g, n);
    trace_breakdown out{{}, {}, character_poly(n)};
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto t = vertex_trace(g, v, n);
        out.total += t;
        out.vertices.push_back({g.vertex(v).id, std::move(t)});
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        auto t = edge_trace(edge_singularity(g, e, n));
        out.total += t;
        out.edges.push_back({edge_label(g, e), std::move(t)});
    }
    return out;
}

/// Trace of H^0 - H^1 as a character polynomial.
inline character_poly total_trace(const dual_graph& g, const integer& n)
{
    return trace_contributions(g, n).total;
}

/// Exponents of the H^1 character (ring-side action), with multiplicity,
/// sorted ascending. H^0 carries the trivial character.
inline std::vector<integer> h1_character(const dual_graph& g, const integer& n)
{
    character_poly chi = character_poly::constant(n, 1) - total_trace(g, n);
    const integer expected = genus(g);
    std::vector<integer> out;
    for (const auto& [e, c] : chi.terms()) {
        if (c < 0)
            throw error(errc::negative_coefficient,
                "H^1 character has coefficient " + c.str() + " at exponent " + e.str());
        for (integer k = 0; k < c; ++k)
            out.push_back(e);
    }
    if (integer(out.size()) != expected)
        throw error(errc::wrong_degree, "H^1 character has degree " + std::to_string(out.size())
            + " but the genus is " + expected.str());
    return out;
}

} // namespace neron_jumps

#endif // NERON_JUMPS_TRACES_HPP
