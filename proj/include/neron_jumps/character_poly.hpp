#ifndef NERON_JUMPS_CHARACTER_POLY_HPP
#define NERON_JUMPS_CHARACTER_POLY_HPP

#include "integer.hpp"

#include <map>
#include <ostream>
#include <string>

namespace neron_jumps {

/// Element of the group ring Z[x]/(x^n - 1): a formal integer combination of
/// powers of a fixed primitive n-th root. Exponents are kept in [0, n) and
/// zero coefficients are dropped.
class character_poly {
public:
    using term_map = std::map<integer, integer>;

    explicit character_poly(integer modulus) : modulus_(std::move(modulus))
    {
        if (modulus_ < 1)
            throw error(errc::bad_input, "modulus must be positive");
    }

    static character_poly constant(const integer& modulus, const integer& c)
    {
        return monomial(modulus, 0, c);
    }

    static character_poly monomial(const integer& modulus, const integer& exponent, const integer& coeff = 1)
    {
        character_poly p(modulus);
        p.add_term(exponent, coeff);
        return p;
    }

    const integer& modulus() const noexcept { return modulus_; }
    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    integer coefficient(const integer& exponent) const
    {
        auto it = terms_.find(mod_floor(exponent, modulus_));
        return it == terms_.end() ? integer(0) : it->second;
    }

    /// Value at the identity element (x = 1).
    integer coefficient_sum() const
    {
        integer s = 0;
        for (const auto& [e, c] : terms_)
            s += c;
        return s;
    }

    void add_term(const integer& exponent, const integer& coeff)
    {
        if (coeff == 0)
            return;
        integer e = mod_floor(exponent, modulus_);
        auto [it, inserted] = terms_.try_emplace(e, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    character_poly& operator+=(const character_poly& o)
    {
        require_same_modulus(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    character_poly& operator-=(const character_poly& o)
    {
        require_same_modulus(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    friend character_poly operator+(character_poly a, const character_poly& b) { return a += b; }
    friend character_poly operator-(character_poly a, const character_poly& b) { return a -= b; }

    friend character_poly operator-(const character_poly& a) { return a.scaled(-1); }

    character_poly scaled(const integer& k) const
    {
        character_poly out(modulus_);
        for (const auto& [e, c] : terms_)
            out.add_term(e, c * k);
        return out;
    }

    /// Multiplication by x^e.
    character_poly shifted(const integer& e) const
    {
        character_poly out(modulus_);
        for (const auto& [ex, c] : terms_)
            out.add_term(ex + e, c);
        return out;
    }

    /// Group-ring product.
    friend character_poly operator*(const character_poly& a, const character_poly& b)
    {
        a.require_same_modulus(b);
        character_poly out(a.modulus_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term(ea + eb, ca * cb);
        return out;
    }

    friend bool operator==(const character_poly& a, const character_poly& b)
    {
        return a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty())
                s += c < 0 ? " - " : " + ";
            else if (c < 0)
                s += "-";
            integer mag = c < 0 ? integer(-c) : c;
            if (e == 0) {
                s += mag.str();
                continue;
            }
            if (mag != 1)
                s += mag.str() + "*";
            s += "x^" + e.str();
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const character_poly& p) { return os << p.str(); }

private:
    void require_same_modulus(const character_poly& o) const
    {
        if (o.modulus_ != modulus_)
            throw error(errc::modulus_mismatch, "moduli " + modulus_.str() + " and " + o.modulus_.str());
    }

    integer modulus_;
    term_map terms_;
};

inline character_poly poly_add(const character_poly& a, const character_poly& b) { return a + b; }
inline character_poly poly_scale(const character_poly& a, const integer& k) { return a.scaled(k); }
inline character_poly poly_shift(const character_poly& a, const integer& e) { return a.shifted(e); }

} // namespace neron_jumps

#endif // NERON_JUMPS_CHARACTER_POLY_HPP
