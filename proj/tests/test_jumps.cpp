#include "support.hpp"

#include <gtest/gtest.h>

using namespace nj_test;

namespace {

std::vector<rational> rats(std::initializer_list<std::pair<long, long>> xs)
{
    std::vector<rational> out;
    for (auto [a, b] : xs)
        out.emplace_back(a, b);
    return out;
}

std::vector<integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST(Jumps, DegreeSequence)
{
    EXPECT_EQ(degree_sequence(single_elliptic(), 3, 2), ints({2, 3, 4}));
    auto iv = degree_sequence(type_iv(), 3, 5);
    EXPECT_EQ(iv, ints({7, 10, 13}));
    for (const auto& n : degree_sequence(type_vi(), 3, 13))
        EXPECT_EQ(n % 12, 1);
    EXPECT_THROW(degree_sequence(type_iv(), 2, 5), error);
}

TEST(Jumps, InverseExponents)
{
    EXPECT_EQ(inverse_exponents(ints({5}), 7), ints({2}));
    EXPECT_EQ(inverse_exponents(ints({0}), 11), ints({0}));
    EXPECT_EQ(inverse_exponents(ints({10, 4}), 13), ints({3, 9}));
}

TEST(Jumps, WorkedSpectra)
{
    auto iv = jump_spectrum(type_iv());
    EXPECT_EQ(iv.jumps, rats({{1, 3}}));
    EXPECT_EQ(iv.predicted_denominator, 3);
    auto vi = jump_spectrum(type_vi());
    EXPECT_EQ(vi.jumps, rats({{1, 4}, {3, 4}}));
    EXPECT_EQ(jump_spectrum(single_elliptic()).jumps, rats({{0, 1}}));
}

TEST(Jumps, FitsAreExactOnEverySample)
{
    auto g = type_vi();
    auto s = jump_spectrum(g, 6, 50);
    ASSERT_EQ(s.samples.size(), 6u);
    for (const auto& n : s.samples) {
        auto row = inverse_exponents(h1_character(g, n), n);
        for (std::size_t i = 0; i < row.size(); ++i)
            EXPECT_EQ(s.fits[i].alpha * n + s.fits[i].beta, rational(row[i]));
    }
    // the limit procedure for VI: [-alpha_4]_n = (n - 1)/4
    EXPECT_EQ(s.fits[0].beta, rational(-1, 4));
}

TEST(Jumps, Minimality)
{
    spectrum a;
    a.jumps = rats({{1, 3}});
    a.predicted_denominator = 3;
    EXPECT_TRUE(check_minimality(a));
    spectrum b;
    b.jumps = rats({{1, 4}, {3, 4}});
    b.predicted_denominator = 4;
    EXPECT_TRUE(check_minimality(b));
    spectrum c;
    c.jumps = rats({{1, 2}});
    c.predicted_denominator = 4;
    EXPECT_FALSE(check_minimality(c));
    spectrum d;
    d.jumps = rats({{0, 1}});
    EXPECT_TRUE(check_minimality(d));
}

TEST(Jumps, CycleLengthDoesNotMatter)
{
    for (int k = 1; k <= 7; ++k)
        EXPECT_EQ(jump_spectrum(cycle_graph(k)).jumps, rats({{0, 1}})) << k;
    for (int k = 0; k <= 5; ++k)
        EXPECT_EQ(jump_spectrum(i_n_star_graph(k)).jumps, rats({{1, 2}})) << k;
}

TEST(Jumps, MinusTwoChainsDoNotMatter)
{
    auto ii = genus1_graph("II");
    auto iv = genus1_graph("IV*");
    auto base = jump_spectrum(glue(ii, iv, 0, "x")).jumps;
    EXPECT_EQ(base, rats({{1, 6}, {2, 3}}));
    for (int len = 1; len <= 4; ++len)
        EXPECT_EQ(jump_spectrum(glue(ii, iv, len, "x")).jumps, base) << len;
}

TEST(Jumps, StartingDegreeDoesNotMatter)
{
    auto g = genus1_graph("II*");
    for (long nmin : {2L, 10L, 50L, 200L})
        EXPECT_EQ(jump_spectrum(g, 4, nmin).jumps, rats({{5, 6}})) << nmin;
}

TEST(Jumps, GenusZeroRejected)
{
    dual_graph g;
    g.add_vertex("p", 0, 1);
    EXPECT_THROW(jump_spectrum(g), error);
}

TEST(Jumps, Formatting)
{
    EXPECT_EQ(format_over(rational(1, 2), 6), "3/6");
    EXPECT_EQ(format_over(rational(0), 4), "0/4");
    spectrum s;
    s.jumps = rats({{1, 6}, {1, 6}, {1, 2}});
    auto g = s.grouped();
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0].second, 2u);
}
