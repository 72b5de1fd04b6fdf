#ifndef NERON_JUMPS_TESTS_SUPPORT_HPP
#define NERON_JUMPS_TESTS_SUPPORT_HPP

// Shared fixtures and brute-force oracles for the unit tests.

#include "neron_jumps.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace nj_test {

using namespace neron_jumps;

inline dual_graph type_iv()
{
    return parse_graph(R"(
vertex v1 genus=0 mult=1
vertex v2 genus=0 mult=1
vertex v3 genus=0 mult=1
vertex v4 genus=0 mult=3
edge v1 v4
edge v2 v4
edge v3 v4
)");
}

inline dual_graph type_vi() { return parse_graph(data::type_vi_graph); }

inline dual_graph single_elliptic()
{
    dual_graph g("I");
    g.add_vertex("e", 1, 1);
    return g;
}

// Inverse by exhaustive search.
inline long brute_inverse(long a, long n)
{
    for (long x = 0; x < n; ++x)
        if (((a % n + n) % n) * x % n == 1 % n)
            return x;
    return -1;
}

// Rotation r by exhaustive search: 0 < r < n with m1 + r m2 = 0 mod n.
inline long brute_rotation(long m1, long m2, long n)
{
    for (long r = 1; r < n; ++r)
        if ((m1 + r * m2) % n == 0)
            return r;
    return -1;
}

// b_1 - 1/(b_2 - 1/(... - 1/b_L)) evaluated exactly.
inline rational continued_fraction_value(const std::vector<integer>& b)
{
    rational v = b.back();
    for (std::size_t i = b.size() - 1; i-- > 0;)
        v = rational(b[i]) - rational(1) / v;
    return v;
}

// Image of a cyclotomic number under x -> exp(2 pi i j / n).
inline std::complex<double> embed(const cyclotomic_number& c, long j = 1)
{
    const auto n = static_cast<double>(c.modulus());
    std::complex<double> z = 0;
    const auto& co = c.coordinates();
    for (std::size_t i = 0; i < co.size(); ++i) {
        const double angle = 2 * std::numbers::pi * static_cast<double>(j) * static_cast<double>(i) / n;
        z += static_cast<double>(co[i]) * std::polar(1.0, angle);
    }
    return z;
}

// Value of a character polynomial at exp(2 pi i j / n), in floating point.
inline std::complex<double> embed(const character_poly& p, long j)
{
    const auto n = static_cast<double>(p.modulus());
    std::complex<double> z = 0;
    for (const auto& [e, c] : p.terms())
        z += static_cast<double>(c) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) * j / n);
    return z;
}

inline std::vector<long> gcd_one_values(long n)
{
    std::vector<long> out;
    for (long j = 1; j < n; ++j)
        if (std::gcd(j, n) == 1)
            out.push_back(j);
    return out;
}

// Random (m1, m2, n) with m1, m2 <= max_m, 2 <= n <= max_n and n prime to both.
struct param_source {
    std::mt19937_64 rng;
    long max_m, max_n;

    param_source(std::uint64_t seed, long mm, long mn) : rng(seed), max_m(mm), max_n(mn) {}

    singularity_params next()
    {
        std::uniform_int_distribution<long> dm(1, max_m), dn(2, max_n);
        for (;;) {
            long a = dm(rng), b = dm(rng), n = dn(rng);
            if (std::gcd(a, n) == 1 && std::gcd(b, n) == 1)
                return {a, b, n};
        }
    }
};

} // namespace nj_test

#endif // NERON_JUMPS_TESTS_SUPPORT_HPP
