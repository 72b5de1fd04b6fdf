#include "support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace nj_test;

namespace {

cyclotomic_number one(std::size_t n) { return cyclotomic_number::from_integer(n, 1); }

// Chain sum rebuilt term by term with cy_inverse instead of cached tables.
cyclotomic_number slow_chain_sum(const singularity_params& p, long j)
{
    auto c = resolve(p);
    const auto n = static_cast<std::size_t>(p.n);
    const integer u = mod_floor(integer(j) * c.alpha1, p.n);
    auto chi = [&](const integer& k) { return cyclotomic_number::from_monomial(n, k * u); };
    cyclotomic_number total(n);
    const std::size_t L = c.length();
    for (std::size_t l = 1; l <= L; ++l) {
        const long li = static_cast<long>(l);
        for (integer k = 1; k <= c.mu(l); ++k) {
            const integer rest = c.mu(l) - k;
            auto num1 = l == 1 ? one(n) : chi(c.r(li - 2) * rest);
            auto num2 = l == L ? one(n) : chi(-c.r(li) * rest + c.r(li - 1) * c.mu(l + 1));
            total += num1 * (one(n) - chi(-c.r(li - 1))).inverse();
            total += num2 * (one(n) - chi(c.r(li - 1))).inverse();
        }
    }
    return total;
}

} // namespace

TEST(ChainOracle, SingleTermIdentity)
{
    auto c = resolve({1, 2, 3});
    ASSERT_EQ(c.length(), 1u);
    for (long j : {1L, 2L})
        EXPECT_EQ(chain_term(c, 1, 1, j), one(3));
}

TEST(ChainOracle, OneThreeSevenSumsToOne)
{
    for (long j = 1; j < 7; ++j)
        EXPECT_EQ(chain_edge_trace({1, 3, 7}, j), one(7)) << j;
}

TEST(ChainOracle, TwoThreeSeven)
{
    const integer a3 = mod_inverse(3, 7);
    for (long j = 1; j < 7; ++j) {
        auto expect = cyclotomic_number::from_integer(7, 2) + cyclotomic_number::from_monomial(7, a3 * j);
        EXPECT_EQ(chain_edge_trace({2, 3, 7}, j), expect) << j;
    }
}

TEST(ChainOracle, OneOneTwoAtMinusOne)
{
    EXPECT_EQ(chain_edge_trace({1, 1, 2}, 1), evaluate(edge_trace({1, 1, 2}), 1));
}

TEST(ChainOracle, TermsSumToChainTrace)
{
    for (auto p : {singularity_params{3, 4, 17}, singularity_params{2, 5, 13}, singularity_params{6, 1, 11}}) {
        auto c = resolve(p);
        for (long j : {1L, 2L, 5L}) {
            if (gcd(integer(j), p.n) != 1)
                continue;
            cyclotomic_number sum(static_cast<std::size_t>(p.n));
            for (std::size_t l = 1; l <= c.length(); ++l)
                for (integer k = 1; k <= c.mu(l); ++k)
                    sum += chain_term(c, l, k, j);
            EXPECT_EQ(sum, chain_edge_trace(p, j));
        }
    }
}

TEST(ChainOracle, CachedPathMatchesDirectInverses)
{
    param_source src(31, 6, 30);
    for (int i = 0; i < 30; ++i) {
        auto p = src.next();
        for (long j : gcd_one_values(static_cast<long>(p.n)))
            EXPECT_EQ(chain_edge_trace(p, j), slow_chain_sum(p, j)) << p.m1 << " " << p.m2 << " " << p.n << " j=" << j;
    }
}

TEST(ChainOracle, ComplexEmbeddingAgrees)
{
    param_source src(32, 6, 120);
    for (int i = 0; i < 30; ++i) {
        auto p = src.next();
        auto closed = edge_trace(p);
        for (long j : gcd_one_values(static_cast<long>(p.n))) {
            auto v = embed(chain_edge_trace(p, j));
            EXPECT_LT(std::abs(v - embed(closed, j)), 1e-6);
        }
    }
}

TEST(ChainOracle, VerifyExamples)
{
    EXPECT_TRUE(verify_edge_trace({2, 3, 7}));
    EXPECT_TRUE(verify_edge_trace({3, 4, 17}));
    EXPECT_TRUE(verify_edge_trace({2, 3, 5}));
    auto rep = verify_edge_trace_report({3, 4, 17});
    EXPECT_EQ(rep.roots.size(), 16u);
}

TEST(ChainOracle, SwapInvariance)
{
    param_source src(33, 6, 120);
    for (int i = 0; i < 60; ++i) {
        auto p = src.next();
        for (long j : gcd_one_values(static_cast<long>(p.n)))
            EXPECT_EQ(chain_edge_trace(p, j), chain_edge_trace({p.m2, p.m1, p.n}, j));
    }
}

TEST(ChainOracle, DetectsPerturbedPolynomial)
{
    // Negative control: shifting one coefficient must break agreement.
    const singularity_params p{3, 4, 17};
    auto wrong = edge_trace(p) + character_poly::monomial(17, 3);
    bool any_mismatch = false;
    for (long j = 1; j < 17; ++j)
        any_mismatch |= !(evaluate(wrong, j) == chain_edge_trace(p, j));
    EXPECT_TRUE(any_mismatch);
}

TEST(ChainOracle, Errors)
{
    auto c = resolve({2, 3, 7});
    EXPECT_THROW(chain_term(c, 0, 1, 1), error);
    EXPECT_THROW(chain_term(c, 1, 0, 1), error);
    EXPECT_THROW(chain_edge_trace({1, 2, 9}, 3), error);
    try {
        chain_edge_trace({1, 2, 9}, 6);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_primitive);
    }
}

TEST(ChainOracle, MismatchLogIsQuietOnAgreement)
{
    std::ostringstream log;
    EXPECT_TRUE(verify_edge_trace({5, 3, 49}, &log));
    EXPECT_TRUE(log.str().empty());
}
