#ifndef NERON_JUMPS_HJ_RESOLUTION_HPP
#define NERON_JUMPS_HJ_RESOLUTION_HPP

// Minimal resolution of the tame cyclic quotient singularity (m1, m2, n) that
// appears over an intersection point after base change of degree n.
//
// The exceptional locus is a chain C_1 .. C_L of rational curves with
// self-intersections -b_l and multiplicities mu_l. With r_{-1} = n and
// r_0 = r (the branch rotation),
//
//   r_{l-1} = b_{l+1} r_l - r_{l+1}           0 <= l <= L-1,  r_L = 0
//   mu_{l+1} = b_l mu_l - mu_{l-1}            1 <= l <= L
//   mu_0 = m2,  mu_{L+1} = m1,  n mu_1 = m1 + r m2

#include "integer.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace neron_jumps {

struct singularity_params {
    integer m1;
    integer m2;
    integer n;

    friend bool operator==(const singularity_params&, const singularity_params&) = default;
};

inline void require_valid(const singularity_params& p)
{
    if (p.m1 < 1 || p.m2 < 1)
        throw error(errc::bad_input, "branch multiplicities must be positive");
    if (p.n < 2)
        throw error(errc::bad_input, "degree n must be at least 2");
    if (gcd(p.n, p.m1) != 1 || gcd(p.n, p.m2) != 1)
        throw error(errc::not_coprime,
            "(" + p.m1.str() + ", " + p.m2.str() + ", " + p.n.str() + "): n must be prime to m1 and m2");
}

/// The unique 0 < r < n with m1 + r m2 = 0 (mod n).
inline integer branch_rotation(const singularity_params& p)
{
    require_valid(p);
    return mod_floor(-p.m1 * mod_inverse(p.m2, p.n), p.n);
}

/// Negative-regular continued fraction n/r = b_1 - 1/(b_2 - ... - 1/b_L).
inline std::vector<integer> jung_hirzebruch(const integer& n, const integer& r)
{
    if (!(0 < r && r < n) || gcd(n, r) != 1)
        throw error(errc::bad_input, "need 0 < r < n with gcd(n, r) = 1");
    std::vector<integer> b;
    integer prev = n, cur = r;
    while (cur != 0) {
        integer bl = ceil_div(prev, cur);
        b.push_back(bl);
        prev = std::exchange(cur, bl * cur - prev);
    }
    return b;
}

class resolution_chain {
public:
    singularity_params params;
    /// r_{-1} .. r_L, stored with offset one: r_seq[i + 1] == r_i.
    std::vector<integer> r_seq;
    /// b_1 .. b_L, stored at b_seq[l - 1].
    std::vector<integer> b_seq;
    /// mu_0 .. mu_{L+1}.
    std::vector<integer> mu_seq;
    /// Inverse of m1 modulo n.
    integer alpha1;

    std::size_t length() const noexcept { return b_seq.size(); }

    const integer& rotation() const { return r_seq.at(1); }

    /// r_i for -1 <= i <= L.
    const integer& r(long i) const { return r_seq.at(static_cast<std::size_t>(i + 1)); }

    /// b_l for 1 <= l <= L.
    const integer& b(std::size_t l) const { return b_seq.at(l - 1); }

    /// mu_l for 0 <= l <= L + 1.
    const integer& mu(std::size_t l) const { return mu_seq.at(l); }
};

/// Full resolution numerics; mu is computed forward from (mu_0, mu_1) and the
/// far endpoint mu_{L+1} = m1 is checked.
inline resolution_chain resolve(const singularity_params& p)
{
    resolution_chain c;
    c.params = p;
    const integer r = branch_rotation(p);
    c.alpha1 = mod_inverse(p.m1, p.n);
    c.b_seq = jung_hirzebruch(p.n, r);
    const std::size_t L = c.b_seq.size();

    c.r_seq = {p.n, r};
    for (std::size_t l = 0; l < L; ++l) {
        // r_{l+1} = b_{l+1} r_l - r_{l-1}
        c.r_seq.push_back(c.b_seq[l] * c.r_seq[l + 1] - c.r_seq[l]);
    }

    const integer top = p.m1 + r * p.m2;
    if (top % p.n != 0)
        throw std::logic_error("m1 + r m2 is not divisible by n");
    c.mu_seq = {p.m2, top / p.n};
    for (std::size_t l = 1; l <= L; ++l)
        c.mu_seq.push_back(c.b_seq[l - 1] * c.mu_seq[l] - c.mu_seq[l - 1]);
    if (c.mu_seq.back() != p.m1)
        throw std::logic_error("resolution of (" + p.m1.str() + ", " + p.m2.str() + ", " + p.n.str()
            + ") does not close: mu_{L+1} = " + c.mu_seq.back().str());
    return c;
}

/// Strictly decreasing, then constant at gcd(m1, m2), then strictly
/// increasing. A lone minimum (no plateau) is accepted when it is >= gcd.
inline bool is_shape_regular(const resolution_chain& c)
{
    const auto& mu = c.mu_seq;
    if (mu.empty())
        return false;
    const integer m = gcd(c.params.m1, c.params.m2);
    std::size_t lo = 0;
    while (lo + 1 < mu.size() && mu[lo + 1] < mu[lo])
        ++lo;
    std::size_t hi = mu.size() - 1;
    while (hi > 0 && mu[hi - 1] < mu[hi])
        --hi;
    if (hi < lo)
        return false;
    for (std::size_t i = lo; i <= hi; ++i)
        if (mu[i] != mu[lo])
            return false;
    if (hi > lo)
        return mu[lo] == m;
    return mu[lo] >= m;
}

inline bool is_shape_regular(const singularity_params& p)
{
    return is_shape_regular(resolve(p));
}

struct chart_exponents {
    integer z;
    integer w;

    friend bool operator==(const chart_exponents&, const chart_exponents&) = default;
};

/// Eigen-exponents of the coordinates (z_{l-1}, w_{l-1}) of chart l, for
/// 1 <= l <= L + 1, under the ring-side action xi . pi' = xi pi'.
inline chart_exponents action_exponents(const resolution_chain& c, std::size_t l)
{
    if (l < 1 || l > c.length() + 1)
        throw error(errc::index_out_of_range, "chart index " + std::to_string(l) + " outside 1.."
            + std::to_string(c.length() + 1));
    const auto& n = c.params.n;
    const long li = static_cast<long>(l);
    return {mod_floor(c.alpha1 * c.r(li - 2), n), mod_floor(-c.alpha1 * c.r(li - 1), n)};
}

} // namespace neron_jumps

#endif // NERON_JUMPS_HJ_RESOLUTION_HPP
