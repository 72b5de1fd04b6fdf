#ifndef NERON_JUMPS_JUMPS_HPP
#define NERON_JUMPS_JUMPS_HPP

// Jump spectrum by sweeping the H^1 character over degrees n = 1 (mod lcm of
// multiplicities). On the Jacobian side the character is inverted; each
// sorted inverse exponent e_i(n) is then exactly affine in n along the
// progression, and the slope is the i-th jump.

#include "dual_graph.hpp"
#include "traces.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace neron_jumps {

struct rank_fit {
    rational alpha;
    rational beta;
};

struct spectrum {
    /// Jumps in [0, 1), sorted, with multiplicity.
    std::vector<rational> jumps;
    integer predicted_denominator = 1;
    std::vector<integer> samples;
    std::vector<rank_fit> fits;

    /// Distinct jumps with their multiplicities.
    std::vector<std::pair<rational, std::size_t>> grouped() const
    {
        std::vector<std::pair<rational, std::size_t>> out;
        for (const auto& j : jumps) {
            if (!out.empty() && out.back().first == j)
                ++out.back().second;
            else
                out.emplace_back(j, 1);
        }
        return out;
    }
};

/// First `count` degrees n >= n_min with n = 1 (mod lcm) and every edge
/// chain shape-regular.
inline std::vector<integer> degree_sequence(const dual_graph& g, std::size_t count, const integer& n_min)
{
    if (count < 3)
        throw error(errc::bad_input, "need at least three sample degrees");
    const integer l = g.multiplicity_lcm();
    integer n = std::max(n_min, integer(2));
    n += mod_floor(1 - n, l);
    if (n < 2)
        n += l;

    std::vector<integer> out;
    for (std::size_t tries = 0; out.size() < count; ++tries, n += l) {
        if (tries > 1000000)
            throw std::logic_error("no shape-regular degrees found");
        bool regular = true;
        for (std::size_t e = 0; e < g.edges().size() && regular; ++e)
            regular = is_shape_regular(edge_singularity(g, e, n));
        if (regular)
            out.push_back(n);
    }
    return out;
}

/// d -> (-d) mod n, sorted ascending.
inline std::vector<integer> inverse_exponents(const std::vector<integer>& exponents, const integer& n)
{
    std::vector<integer> out;
    out.reserve(exponents.size());
    for (const auto& d : exponents)
        out.push_back(mod_floor(-d, n));
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// One attempt at fixed samples; empty result means a fit did not validate.
inline std::optional<spectrum> fit_spectrum(const dual_graph& g, const std::vector<integer>& degrees)
{
    std::vector<std::vector<integer>> rows;
    for (const auto& n : degrees)
        rows.push_back(inverse_exponents(h1_character(g, n), n));

    const std::size_t rank_count = rows.front().size();
    const std::size_t hi = degrees.size() - 1, lo = degrees.size() - 2;
    spectrum s;
    s.samples = degrees;
    for (std::size_t i = 0; i < rank_count; ++i) {
        const rational alpha = rational(rows[hi][i] - rows[lo][i], degrees[hi] - degrees[lo]);
        const rational beta = rational(rows[hi][i]) - alpha * degrees[hi];
        for (std::size_t k = 0; k < lo; ++k)
            if (alpha * degrees[k] + beta != rational(rows[k][i]))
                return std::nullopt;
        if (alpha < 0 || alpha >= 1)
            return std::nullopt;
        s.fits.push_back({alpha, beta});
        s.jumps.push_back(alpha);
    }
    std::sort(s.jumps.begin(), s.jumps.end());
    return s;
}

} // namespace detail

/// Jump spectrum of the Jacobian of the generic fiber. Retries from larger
/// n_min when a per-rank fit fails to validate.
inline spectrum jump_spectrum(const dual_graph& g, std::size_t count = 4, const integer& n_min = 50)
{
    require_valid(g);
    if (genus(g) < 1)
        throw error(errc::bad_input, "genus must be at least 1");

    integer start = n_min;
    for (int attempt = 0; attempt < 6; ++attempt, start *= 2) {
        auto s = detail::fit_spectrum(g, degree_sequence(g, count, start));
        if (!s)
            continue;
        s->predicted_denominator = expected_denominator(g);
        for (const auto& j : s->jumps)
            if (denominator(j * rational(s->predicted_denominator)) != 1)
                throw error(errc::denominator_violation,
                    "jump " + to_string(j) + " is not a multiple of 1/" + s->predicted_denominator.str());
        return *s;
    }
    throw error(errc::fit_failed, "per-rank affine fits did not stabilize up to n_min = " + start.str());
}

/// gcd(n~, i_1, ..., i_g) == 1 where the jumps are i_k / n~.
inline bool check_minimality(const spectrum& s)
{
    const integer& d = s.predicted_denominator;
    if (d <= 1)
        return true;
    integer acc = d;
    for (const auto& j : s.jumps) {
        rational scaled = j * rational(d);
        if (denominator(scaled) != 1)
            return false;
        acc = gcd(acc, numerator(scaled));
    }
    return acc == 1;
}

/// "i/n~" over the predicted denominator.
inline std::string format_over(const rational& j, const integer& d)
{
    rational scaled = j * rational(d);
    if (denominator(scaled) != 1)
        return to_string(j);
    return numerator(scaled).str() + "/" + d.str();
}

} // namespace neron_jumps

#endif // NERON_JUMPS_JUMPS_HPP
