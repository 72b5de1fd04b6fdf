#ifndef NERON_JUMPS_CHAIN_ORACLE_HPP
#define NERON_JUMPS_CHAIN_ORACLE_HPP

// Independent evaluation of an edge contribution as a fixed-point sum over the
// exceptional chain, at a primitive root zeta^j:
//
//   sum_{l=1}^{L} sum_{k=1}^{mu_l}  chi^{a}/(1 - chi^{-r_{l-1}}) + chi^{b}/(1 - chi^{r_{l-1}})
//
//   a = r_{l-2}(mu_l - k)                  (1 when l = 1)
//   b = -r_l(mu_l - k) + r_{l-1} mu_{l+1}  (1 when l = L)
//   chi = zeta^{j alpha_1}
//
// Values are accumulated scaled by n in the integer group ring, using cached
// n/(1 - x^e) mod Phi_n, and only divided by n at the end.

#include "character_poly.hpp"
#include "cyclotomic.hpp"
#include "hj_resolution.hpp"
#include "traces.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace neron_jumps {

namespace detail {

struct overflow_signal {};

inline void add_mul(std::int64_t& acc, std::int64_t c, std::int64_t v)
{
    std::int64_t p;
    if (__builtin_mul_overflow(c, v, &p) || __builtin_add_overflow(acc, p, &acc))
        throw overflow_signal{};
}

inline void add_mul(integer& acc, const integer& c, const integer& v) { acc += c * v; }

inline void add_to(std::int64_t& acc, std::int64_t v)
{
    if (__builtin_add_overflow(acc, v, &acc))
        throw overflow_signal{};
}

inline void add_to(integer& acc, std::int64_t v) { acc += v; }

// Reduce a length-n group-ring vector modulo Phi_n (given densely).
template <class T>
std::vector<T> reduce_cyclic(std::vector<T> a, const std::vector<std::int64_t>& phi)
{
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = a.size(); i-- > d;) {
        if (a[i] == 0)
            continue;
        const T c = a[i];
        for (std::size_t t = 0; t < d; ++t)
            if (phi[t] != 0)
                add_mul(a[i - d + t], T(-phi[t]), c);
        a[i] = 0;
    }
    a.resize(d, T(0));
    return a;
}

// v shifted by s inside a group ring of size n, added into acc.
template <class T>
void add_shifted(std::vector<T>& acc, const std::vector<std::int64_t>& v, std::size_t s)
{
    const std::size_t n = acc.size();
    const std::size_t split = std::min(v.size(), n - s);
    for (std::size_t i = 0; i < split; ++i)
        add_to(acc[i + s], v[i]);
    for (std::size_t i = split; i < v.size(); ++i)
        add_to(acc[i + s - n], v[i]);
}

inline std::size_t residue(const integer& e, std::size_t n)
{
    return static_cast<std::size_t>(mod_floor(e, integer(n)));
}

} // namespace detail

/// Per-degree tables: Phi_n and n/(1 - x^e) mod Phi_n for 0 < e < n, the
/// latter built lazily and certified by multiplying back.
class oracle_cache {
public:
    explicit oracle_cache(std::size_t n) : n_(n), inverses_(n)
    {
        if (n < 2)
            throw error(errc::bad_input, "oracle needs n >= 2");
        for (const auto& c : cyclotomic_polynomial(n))
            phi_.push_back(static_cast<std::int64_t>(c));
    }

    std::size_t modulus() const noexcept { return n_; }
    const std::vector<std::int64_t>& phi() const noexcept { return phi_; }
    std::size_t degree() const noexcept { return phi_.size() - 1; }

    /// n / (1 - x^e) reduced modulo Phi_n; integral since
    /// 1/(1 - w) = -(1/d) sum_{k<d} k w^k for w of order d.
    const std::vector<std::int64_t>& scaled_inverse(std::size_t e)
    {
        e %= n_;
        if (e == 0)
            throw error(errc::division_by_zero, "1 - x^0 is not invertible");
        std::lock_guard lock(mu_);
        auto& slot = inverses_[e];
        if (!slot) {
            const std::size_t d = n_ / std::gcd(e, n_);
            const auto scale = static_cast<std::int64_t>(n_ / d);
            std::vector<std::int64_t> v(n_, 0);
            for (std::size_t k = 1; k < d; ++k)
                v[(e * k) % n_] -= scale * static_cast<std::int64_t>(k);
            auto red = detail::reduce_cyclic(v, phi_);

            std::vector<std::int64_t> check(n_, 0);
            detail::add_shifted(check, red, 0);
            std::vector<std::int64_t> neg(red.size());
            for (std::size_t i = 0; i < red.size(); ++i)
                neg[i] = -red[i];
            detail::add_shifted(check, neg, e);
            auto prod = detail::reduce_cyclic(std::move(check), phi_);
            for (std::size_t i = 0; i < prod.size(); ++i)
                if (prod[i] != (i == 0 ? static_cast<std::int64_t>(n_) : 0))
                    throw std::logic_error("scaled inverse of 1 - x^" + std::to_string(e) + " failed its check");
            slot = std::make_unique<std::vector<std::int64_t>>(std::move(red));
        }
        return *slot;
    }

private:
    std::size_t n_;
    std::vector<std::int64_t> phi_;
    std::vector<std::unique_ptr<std::vector<std::int64_t>>> inverses_;
    std::mutex mu_;
};

/// Process-wide cache keyed by degree.
inline oracle_cache& shared_oracle_cache(std::size_t n)
{
    static std::map<std::size_t, std::unique_ptr<oracle_cache>> caches;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto& slot = caches[n];
    if (!slot)
        slot = std::make_unique<oracle_cache>(n);
    return *slot;
}

namespace detail {

inline std::size_t oracle_degree(const resolution_chain& c) { return to_size(c.params.n); }

inline std::size_t chi_unit(const resolution_chain& c, const integer& j)
{
    if (gcd(j, c.params.n) != 1)
        throw error(errc::not_primitive, "zeta^" + j.str() + " is not a primitive " + c.params.n.str() + "-th root");
    return residue(j * c.alpha1, oracle_degree(c));
}

// n * (term l, k), added into a length-n group-ring accumulator.
template <class T>
void accumulate_term(std::vector<T>& acc, const resolution_chain& c, std::size_t l, const integer& k,
    std::size_t u, oracle_cache& cache)
{
    const std::size_t n = cache.modulus();
    const std::size_t L = c.length();
    const long li = static_cast<long>(l);
    const integer U(u);
    const integer& rl1 = c.r(li - 1);
    const integer rest = c.mu(l) - k;

    const integer a = l == 1 ? integer(0) : c.r(li - 2) * rest;
    const integer b = l == L ? integer(0) : -c.r(li) * rest + rl1 * c.mu(l + 1);

    add_shifted(acc, cache.scaled_inverse(residue(-rl1 * U, n)), residue(a * U, n));
    add_shifted(acc, cache.scaled_inverse(residue(rl1 * U, n)), residue(b * U, n));
}

template <class T>
std::vector<T> chain_sum_scaled(const resolution_chain& c, std::size_t u, oracle_cache& cache)
{
    std::vector<T> acc(cache.modulus(), T(0));
    for (std::size_t l = 1; l <= c.length(); ++l)
        for (integer k = 1; k <= c.mu(l); ++k)
            accumulate_term(acc, c, l, k, u, cache);
    return reduce_cyclic(std::move(acc), cache.phi());
}

inline std::vector<integer> widen(const std::vector<std::int64_t>& v)
{
    return {v.begin(), v.end()};
}

// n * (chain sum at zeta^j), as Phi_n coordinates.
inline std::vector<integer> chain_sum_scaled(const resolution_chain& c, const integer& j, oracle_cache& cache)
{
    const std::size_t u = chi_unit(c, j);
    try {
        return widen(chain_sum_scaled<std::int64_t>(c, u, cache));
    } catch (const overflow_signal&) {
        return chain_sum_scaled<integer>(c, u, cache);
    }
}

// n * p(zeta^j), as Phi_n coordinates.
inline std::vector<integer> evaluate_scaled(const character_poly& p, const integer& j, oracle_cache& cache)
{
    const std::size_t n = cache.modulus();
    if (p.modulus() != n)
        throw error(errc::modulus_mismatch, "polynomial modulus " + p.modulus().str() + " vs " + std::to_string(n));
    std::vector<integer> acc(n, 0);
    for (const auto& [e, c] : p.terms())
        acc[residue(e * j, n)] += c * integer(n);
    return reduce_cyclic(std::move(acc), cache.phi());
}

inline cyclotomic_number unscale(std::size_t n, const std::vector<integer>& v)
{
    rat_poly q;
    q.reserve(v.size());
    for (const auto& c : v)
        q.emplace_back(c, integer(n));
    return cyclotomic_number::from_coefficients(n, std::move(q));
}

} // namespace detail

/// Single summand (l, k) of the chain sum at zeta^j.
inline cyclotomic_number chain_term(const resolution_chain& c, std::size_t l, const integer& k, const integer& j)
{
    if (l < 1 || l > c.length())
        throw error(errc::index_out_of_range, "chain index l = " + std::to_string(l));
    if (k < 1 || k > c.mu(l))
        throw error(errc::index_out_of_range, "k = " + k.str() + " outside 1.." + c.mu(l).str());
    const std::size_t n = detail::oracle_degree(c);
    auto& cache = shared_oracle_cache(n);
    const std::size_t u = detail::chi_unit(c, j);
    std::vector<integer> acc(n, 0);
    detail::accumulate_term(acc, c, l, k, u, cache);
    return detail::unscale(n, detail::reduce_cyclic(std::move(acc), cache.phi()));
}

/// Whole chain sum at zeta^j.
inline cyclotomic_number chain_edge_trace(const singularity_params& p, const integer& j)
{
    auto c = resolve(p);
    const std::size_t n = detail::oracle_degree(c);
    return detail::unscale(n, detail::chain_sum_scaled(c, j, shared_oracle_cache(n)));
}

/// p(zeta^j) in Q(zeta_n).
inline cyclotomic_number evaluate(const character_poly& p, const integer& j)
{
    const std::size_t n = detail::to_size(p.modulus());
    if (n < 2)
        return cyclotomic_number::from_integer(1, rational(p.coefficient_sum()));
    return detail::unscale(n, detail::evaluate_scaled(p, j, shared_oracle_cache(n)));
}

struct root_check {
    integer j;
    bool pass;
};

struct verification_report {
    singularity_params params;
    std::vector<root_check> roots;

    bool all_pass() const
    {
        for (const auto& r : roots)
            if (!r.pass)
                return false;
        return true;
    }
};

/// Compares the chain sum with the closed edge trace at every primitive root.
inline verification_report verify_edge_trace_report(const singularity_params& p, std::ostream* log = nullptr)
{
    const auto closed = edge_trace(p);
    const auto c = resolve(p);
    const std::size_t n = detail::oracle_degree(c);
    auto& cache = shared_oracle_cache(n);
    verification_report rep{p, {}};
    for (std::size_t j = 1; j < n; ++j) {
        const integer J(j);
        if (gcd(J, p.n) != 1)
            continue;
        const auto lhs = detail::chain_sum_scaled(c, J, cache);
        const auto rhs = detail::evaluate_scaled(closed, J, cache);
        const bool ok = lhs == rhs;
        rep.roots.push_back({J, ok});
        if (!ok && log)
            *log << "mismatch (" << p.m1 << ", " << p.m2 << ", " << p.n << ") j=" << j
                 << ": chain " << detail::unscale(n, lhs) << " vs closed " << detail::unscale(n, rhs) << "\n";
    }
    return rep;
}

inline bool verify_edge_trace(const singularity_params& p, std::ostream* log = nullptr)
{
    return verify_edge_trace_report(p, log).all_pass();
}

} // namespace neron_jumps

#endif // NERON_JUMPS_CHAIN_ORACLE_HPP
