#include "support.hpp"

#include <gtest/gtest.h>

using namespace nj_test;

namespace {

bool has(const std::vector<violation>& vs, violation_kind k)
{
    for (const auto& v : vs)
        if (v.kind == k)
            return true;
    return false;
}

} // namespace

TEST(DualGraph, KodairaGraphsHaveGenusOne)
{
    for (const auto& gt : data::kodaira_graphs) {
        auto g = parse_graph(gt.text);
        EXPECT_TRUE(validate(g).empty()) << gt.name;
        EXPECT_EQ(genus(g), 1) << gt.name;
    }
    for (int k = 1; k <= 6; ++k) {
        EXPECT_EQ(genus(cycle_graph(k)), 1) << k;
        EXPECT_EQ(genus(i_n_star_graph(k)), 1) << k;
    }
}

TEST(DualGraph, TypeViHasGenusTwo)
{
    auto g = type_vi();
    EXPECT_EQ(genus(g), 2);
    EXPECT_EQ(g.multiplicity_lcm(), 12);
    // C^2 in the fiber: v4 meets 3 + 2 + 2 + 1 = 8 = 4 * 2
    EXPECT_EQ(self_intersection_model(g, g.index_of("v4")), -2);
    EXPECT_EQ(self_intersection_model(g, g.index_of("v3")), -2);
}

TEST(DualGraph, IntersectionWithFiberIsZero)
{
    // sum over w of m(w) (C_v . C_w) = 0 for every v, recomputed from scratch
    for (const auto& gt : data::kodaira_graphs) {
        auto g = parse_graph(gt.text);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            integer s = g.vertex(v).multiplicity * self_intersection_model(g, v);
            for (const auto& e : g.edges()) {
                if (e.u == v)
                    s += g.vertex(e.v).multiplicity;
                if (e.v == v)
                    s += g.vertex(e.u).multiplicity;
            }
            EXPECT_EQ(s, 0) << gt.name << " " << g.vertex(v).id;
        }
    }
}

TEST(DualGraph, PrincipalVerticesAndDenominator)
{
    auto iv = type_iv();
    auto p = principal_vertices(iv);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(iv.vertex(p[0]).id, "v4");
    EXPECT_EQ(expected_denominator(iv), 3);
    EXPECT_EQ(expected_denominator(type_vi()), 4);
    EXPECT_EQ(expected_denominator(cycle_graph(5)), 1);
    EXPECT_EQ(expected_denominator(single_elliptic()), 1);
    EXPECT_EQ(expected_denominator(i_n_star_graph(3)), 2);
}

TEST(DualGraph, ValidateReportsEachViolation)
{
    dual_graph empty;
    EXPECT_TRUE(has(validate(empty), violation_kind::empty_graph));

    dual_graph disc;
    disc.add_vertex("a", 1, 1);
    disc.add_vertex("b", 1, 1);
    EXPECT_TRUE(has(validate(disc), violation_kind::not_connected));

    dual_graph loop;
    loop.add_vertex("a", 0, 1);
    loop.add_edge("a", "a");
    EXPECT_TRUE(has(validate(loop), violation_kind::self_loop));

    dual_graph zero;
    zero.add_vertex("a", 0, 0);
    EXPECT_TRUE(has(validate(zero), violation_kind::bad_multiplicity));

    dual_graph neg;
    neg.add_vertex("a", -1, 1);
    EXPECT_TRUE(has(validate(neg), violation_kind::negative_genus));

    dual_graph even;
    even.add_vertex("a", 1, 2);
    EXPECT_TRUE(has(validate(even), violation_kind::gcd_not_one));

    dual_graph frac;
    frac.add_vertex("a", 0, 1);
    frac.add_vertex("b", 0, 2);
    frac.add_edge("a", "b");
    EXPECT_TRUE(has(validate(frac), violation_kind::invalid_fiber));

    EXPECT_THROW(require_valid(frac), error);
}

TEST(DualGraph, DuplicateIdRejected)
{
    dual_graph g;
    g.add_vertex("a", 0, 1);
    EXPECT_THROW(g.add_vertex("a", 0, 1), error);
    EXPECT_THROW(g.add_edge("a", "zz"), error);
}

TEST(DualGraph, ParallelEdgesCountTwice)
{
    auto g = cycle_graph(2);
    EXPECT_EQ(g.degree(0), 2u);
    EXPECT_EQ(g.incident_edges(0).size(), 2u);
    EXPECT_EQ(self_intersection_model(g, 0), -2);
}
