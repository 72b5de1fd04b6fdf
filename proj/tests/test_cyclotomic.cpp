#include "support.hpp"

#include <gtest/gtest.h>

using namespace nj_test;

namespace {

int_poly ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

int_poly multiply(const int_poly& a, const int_poly& b)
{
    int_poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            out[i + k] += a[i] * b[k];
    return out;
}

cyclotomic_number random_number(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    rat_poly c(euler_phi(n));
    for (auto& x : c)
        x = rational(num(rng), den(rng));
    return cyclotomic_number::from_coefficients(n, c);
}

// A few monomials with small integer weights, so exact inversion stays cheap.
cyclotomic_number sparse_number(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<long> coef(-3, 3), exp(0, static_cast<long>(n) - 1);
    cyclotomic_number out(n);
    for (int i = 0; i < 3; ++i)
        out += cyclotomic_number::from_monomial(n, exp(rng), coef(rng));
    return out;
}

constexpr double tol = 1e-6;

} // namespace

TEST(Cyclotomic, SmallPolynomials)
{
    EXPECT_EQ(cyclotomic_polynomial(1), ints({-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), ints({1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(7), ints({1, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), ints({1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), ints({1, 0, 1}));
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne)
{
    for (std::size_t n = 1; n <= 120; ++n) {
        int_poly prod{1};
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0)
                prod = multiply(prod, cyclotomic_polynomial(d));
        int_poly expect(n + 1, 0);
        expect[0] = -1;
        expect[n] = 1;
        EXPECT_EQ(prod, expect) << n;
    }
}

TEST(Cyclotomic, DegreeIsTotient)
{
    for (long n = 1; n <= 150; ++n) {
        std::size_t count = 0;
        for (long k = 1; k <= n; ++k)
            count += std::gcd(k, n) == 1;
        EXPECT_EQ(euler_phi(static_cast<std::size_t>(n)), count) << n;
    }
}

TEST(Cyclotomic, Examples)
{
    auto x = cyclotomic_number::from_monomial(4, 1);
    EXPECT_EQ(x * x, cyclotomic_number::from_integer(4, -1));
    auto one = cyclotomic_number::from_integer(9, 1);
    EXPECT_EQ(one.inverse(), one);
    auto a = cyclotomic_number::from_monomial(9, 5, rational(3, 2));
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_TRUE(cy_sub(a, a).is_zero());
    EXPECT_EQ(cyclotomic_number::from_monomial(5, 5), cyclotomic_number::from_integer(5, 1));
    EXPECT_EQ(cyclotomic_number::from_monomial(5, -1), cyclotomic_number::from_monomial(5, 4));
}

TEST(Cyclotomic, Errors)
{
    EXPECT_THROW(cyclotomic_number(7).inverse(), error);
    EXPECT_THROW(cyclotomic_number(7) + cyclotomic_number(9), error);
    EXPECT_THROW(cy_mul(cyclotomic_number(7), cyclotomic_number(9)), error);
    EXPECT_THROW(cyclotomic_polynomial(0), error);
}

TEST(Cyclotomic, FieldAxioms)
{
    std::mt19937_64 rng(21);
    for (std::size_t n = 1; n <= 60; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            auto a = random_number(rng, n), b = random_number(rng, n), c = random_number(rng, n);
            EXPECT_EQ((a * b) * c, a * (b * c)) << n;
            EXPECT_EQ(a * (b + c), a * b + a * c) << n;
            EXPECT_EQ(a * b, b * a) << n;
            auto u = sparse_number(rng, n);
            if (!u.is_zero()) {
                EXPECT_EQ(u * cy_inverse(u), cyclotomic_number::from_integer(n, 1)) << n;
            }
        }
    }
}

TEST(Cyclotomic, AgreesWithComplexEmbedding)
{
    std::mt19937_64 rng(22);
    for (std::size_t n : {3u, 5u, 8u, 12u, 15u, 30u, 42u, 60u}) {
        auto a = random_number(rng, n), b = random_number(rng, n);
        EXPECT_LT(std::abs(embed(a * b) - embed(a) * embed(b)), tol) << n;
        EXPECT_LT(std::abs(embed(a + b) - (embed(a) + embed(b))), tol) << n;
        if (!a.is_zero()) {
            EXPECT_LT(std::abs(embed(a.inverse()) * embed(a) - 1.0), tol) << n;
        }
        // x maps to a primitive root: x^n = 1 and x^d != 1 for d < n
        auto x = cyclotomic_number::from_monomial(n, 1);
        EXPECT_LT(std::abs(embed(x) - std::polar(1.0, 2 * std::numbers::pi / static_cast<double>(n))), tol);
    }
}

TEST(Cyclotomic, InverseOfOneMinusRootMatchesGeometricIdentity)
{
    // 1/(1 - w) = -(1/d) sum_{k<d} k w^k for w of exact order d > 1.
    for (std::size_t n = 2; n <= 40; ++n)
        for (std::size_t e = 1; e < n; ++e) {
            const std::size_t d = n / std::gcd(e, n);
            cyclotomic_number rhs(n);
            for (std::size_t k = 1; k < d; ++k)
                rhs += cyclotomic_number::from_monomial(n, integer(e * k), rational(-static_cast<long>(k), d));
            auto lhs = (cyclotomic_number::from_integer(n, 1) - cyclotomic_number::from_monomial(n, integer(e))).inverse();
            EXPECT_EQ(lhs, rhs) << n << " " << e;
        }
}
