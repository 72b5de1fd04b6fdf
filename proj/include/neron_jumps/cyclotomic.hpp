#ifndef NERON_JUMPS_CYCLOTOMIC_HPP
#define NERON_JUMPS_CYCLOTOMIC_HPP

// Exact arithmetic in Q(zeta_n) = Q[x]/(Phi_n), x a fixed primitive n-th root.
// Polynomials are coefficient vectors, lowest degree first.

#include "integer.hpp"

#include <cstddef>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace neron_jumps {

using int_poly = std::vector<integer>;
using rat_poly = std::vector<rational>;

namespace detail {

template <class T>
void trim(std::vector<T>& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Exact quotient of a by a monic integer polynomial d; the remainder must vanish.
inline int_poly exact_div_monic(int_poly a, const int_poly& d)
{
    const std::size_t dd = d.size() - 1;
    if (a.size() < d.size())
        throw std::logic_error("exact_div_monic: dividend too short");
    int_poly q(a.size() - dd, 0);
    for (std::size_t i = a.size(); i-- > dd;) {
        const integer c = a[i];
        if (c == 0)
            continue;
        q[i - dd] = c;
        for (std::size_t t = 0; t <= dd; ++t)
            a[i - dd + t] -= c * d[t];
    }
    trim(a);
    if (!a.empty())
        throw std::logic_error("exact_div_monic: nonzero remainder");
    return q;
}

inline std::size_t to_size(const integer& v)
{
    if (v < 0 || v > integer(std::numeric_limits<std::size_t>::max() / 4))
        throw error(errc::bad_input, "value " + v.str() + " out of range");
    return static_cast<std::size_t>(v);
}

} // namespace detail

/// Phi_n with integer coefficients, lowest degree first. Cached.
inline const int_poly& cyclotomic_polynomial(std::size_t n)
{
    if (n == 0)
        throw error(errc::bad_input, "cyclotomic_polynomial needs n >= 1");
    static std::map<std::size_t, int_poly> cache;
    static std::recursive_mutex mu;
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end())
        return it->second;

    int_poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::size_t d = 1; d < n; ++d)
        if (n % d == 0)
            p = detail::exact_div_monic(std::move(p), cyclotomic_polynomial(d));
    return cache.emplace(n, std::move(p)).first->second;
}

inline std::size_t euler_phi(std::size_t n)
{
    return cyclotomic_polynomial(n).size() - 1;
}

namespace detail {

// Remainder of p modulo the monic integer polynomial m.
template <class T>
std::vector<T> reduce_monic(std::vector<T> p, const int_poly& m)
{
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = p.size(); i-- > dm;) {
        if (p[i] == 0)
            continue;
        const T c = p[i];
        for (std::size_t t = 0; t < dm; ++t)
            if (m[t] != 0)
                p[i - dm + t] -= c * T(m[t]);
        p[i] = 0;
    }
    p.resize(dm, T(0));
    return p;
}

inline rat_poly mul(const rat_poly& a, const rat_poly& b)
{
    if (a.empty() || b.empty())
        return {};
    rat_poly out(a.size() + b.size() - 1, rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t k = 0; k < b.size(); ++k)
            out[i + k] += a[i] * b[k];
    }
    return out;
}

inline rat_poly sub(rat_poly a, const rat_poly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), rational(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

// Division with remainder over Q; b must be nonzero and trimmed.
inline std::pair<rat_poly, rat_poly> divmod(rat_poly a, const rat_poly& b)
{
    trim(a);
    if (a.size() < b.size())
        return {{}, a};
    const std::size_t db = b.size() - 1;
    rat_poly q(a.size() - db, rational(0));
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i] == 0)
            continue;
        const rational c = a[i] / b.back();
        q[i - db] = c;
        for (std::size_t t = 0; t <= db; ++t)
            a[i - db + t] -= c * b[t];
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

} // namespace detail

class cyclotomic_number {
public:
    cyclotomic_number() : cyclotomic_number(1) {}

    /// Zero of Q(zeta_n).
    explicit cyclotomic_number(std::size_t n) : n_(n), coords_(euler_phi(n), rational(0)) {}

    /// Reduces an arbitrary-length coefficient vector modulo Phi_n.
    static cyclotomic_number from_coefficients(std::size_t n, rat_poly coeffs)
    {
        cyclotomic_number out(n);
        out.coords_ = detail::reduce_monic(std::move(coeffs), cyclotomic_polynomial(n));
        return out;
    }

    static cyclotomic_number from_integer(std::size_t n, const rational& c)
    {
        cyclotomic_number out(n);
        out.coords_[0] = c;
        return out;
    }

    /// c * x^e, e taken modulo n.
    static cyclotomic_number from_monomial(std::size_t n, const integer& e, const rational& c = 1)
    {
        const std::size_t k = detail::to_size(mod_floor(e, integer(n)));
        rat_poly p(k + 1, rational(0));
        p[k] = c;
        return from_coefficients(n, std::move(p));
    }

    std::size_t modulus() const noexcept { return n_; }
    const rat_poly& coordinates() const noexcept { return coords_; }

    bool is_zero() const
    {
        for (const auto& c : coords_)
            if (c != 0)
                return false;
        return true;
    }

    cyclotomic_number& operator+=(const cyclotomic_number& o)
    {
        require_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i)
            coords_[i] += o.coords_[i];
        return *this;
    }

    cyclotomic_number& operator-=(const cyclotomic_number& o)
    {
        require_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i)
            coords_[i] -= o.coords_[i];
        return *this;
    }

    cyclotomic_number& operator*=(const rational& k)
    {
        for (auto& c : coords_)
            c *= k;
        return *this;
    }

    friend cyclotomic_number operator+(cyclotomic_number a, const cyclotomic_number& b) { return a += b; }
    friend cyclotomic_number operator-(cyclotomic_number a, const cyclotomic_number& b) { return a -= b; }
    friend cyclotomic_number operator-(cyclotomic_number a) { return a *= rational(-1); }

    friend cyclotomic_number operator*(const cyclotomic_number& a, const cyclotomic_number& b)
    {
        a.require_same(b);
        return from_coefficients(a.n_, detail::mul(a.coords_, b.coords_));
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_n.
    cyclotomic_number inverse() const
    {
        if (is_zero())
            throw error(errc::division_by_zero, "inverse of zero in Q(zeta_" + std::to_string(n_) + ")");
        const auto& phi = cyclotomic_polynomial(n_);
        rat_poly r0(phi.begin(), phi.end());
        rat_poly r1 = coords_;
        detail::trim(r1);
        rat_poly s0, s1{rational(1)};
        while (r1.size() > 1) {
            auto [q, rem] = detail::divmod(r0, r1);
            r0 = std::exchange(r1, std::move(rem));
            s0 = std::exchange(s1, detail::sub(s0, detail::mul(q, s1)));
            if (r1.empty())
                throw std::logic_error("Phi_n is reducible?");
        }
        auto out = from_coefficients(n_, std::move(s1));
        out *= rational(1) / r1[0];
        return out;
    }

    friend bool operator==(const cyclotomic_number& a, const cyclotomic_number& b)
    {
        return a.n_ == b.n_ && a.coords_ == b.coords_;
    }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0)
                continue;
            if (!s.empty())
                s += " + ";
            s += "(" + to_string(coords_[i]) + ")";
            if (i > 0)
                s += "*x^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

    friend std::ostream& operator<<(std::ostream& os, const cyclotomic_number& c) { return os << c.str(); }

private:
    void require_same(const cyclotomic_number& o) const
    {
        if (o.n_ != n_)
            throw error(errc::modulus_mismatch,
                "Q(zeta_" + std::to_string(n_) + ") vs Q(zeta_" + std::to_string(o.n_) + ")");
    }

    std::size_t n_;
    rat_poly coords_;
};

inline cyclotomic_number cy_add(const cyclotomic_number& a, const cyclotomic_number& b) { return a + b; }
inline cyclotomic_number cy_sub(const cyclotomic_number& a, const cyclotomic_number& b) { return a - b; }
inline cyclotomic_number cy_mul(const cyclotomic_number& a, const cyclotomic_number& b) { return a * b; }
inline cyclotomic_number cy_inverse(const cyclotomic_number& a) { return a.inverse(); }

} // namespace neron_jumps

#endif // NERON_JUMPS_CYCLOTOMIC_HPP
