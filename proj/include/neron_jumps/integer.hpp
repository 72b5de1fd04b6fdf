#ifndef NERON_JUMPS_INTEGER_HPP
#define NERON_JUMPS_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace neron_jumps {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

enum class errc {
    bad_input,
    not_coprime,
    index_out_of_range,
    not_integer,
    shape_not_regular,
    modulus_mismatch,
    division_by_zero,
    not_primitive,
    negative_coefficient,
    wrong_degree,
    fit_failed,
    denominator_violation,
    parse_error,
    unknown_type,
    invalid_graph,
};

inline std::string_view to_string(errc code)
{
    switch (code) {
    case errc::bad_input: return "BAD_INPUT";
    case errc::not_coprime: return "NOT_COPRIME";
    case errc::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case errc::not_integer: return "NOT_INTEGER";
    case errc::shape_not_regular: return "SHAPE_NOT_REGULAR";
    case errc::modulus_mismatch: return "MODULUS_MISMATCH";
    case errc::division_by_zero: return "DIVISION_BY_ZERO";
    case errc::not_primitive: return "NOT_PRIMITIVE";
    case errc::negative_coefficient: return "NEGATIVE_COEFFICIENT";
    case errc::wrong_degree: return "WRONG_DEGREE";
    case errc::fit_failed: return "FIT_FAILED";
    case errc::denominator_violation: return "DENOMINATOR_VIOLATION";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::unknown_type: return "UNKNOWN_TYPE";
    case errc::invalid_graph: return "INVALID_GRAPH";
    }
    return "UNKNOWN";
}

/// Every failure in the library is reported through this exception; `code()`
/// carries the machine-readable kind.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Representative of `a` in [0, n).
inline integer mod_floor(const integer& a, const integer& n)
{
    integer r = a % n;
    if (r < 0)
        r += n;
    return r;
}

inline integer gcd(const integer& a, const integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline integer lcm(const integer& a, const integer& b)
{
    if (a == 0 || b == 0)
        return 0;
    return boost::multiprecision::lcm(a, b);
}

/// Inverse of `a` modulo `n`, in (0, n) for n >= 2 (and 0 for n == 1).
inline integer mod_inverse(const integer& a, const integer& n)
{
    if (n < 1)
        throw error(errc::bad_input, "modulus must be positive");
    integer old_r = mod_floor(a, n), r = n;
    integer old_s = 1, s = 0;
    while (r != 0) {
        integer q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1 && n != 1)
        throw error(errc::not_coprime, "gcd(" + a.str() + ", " + n.str() + ") != 1");
    return mod_floor(old_s, n);
}

/// Ceiling of p/q for q > 0.
inline integer ceil_div(const integer& p, const integer& q)
{
    integer quot = p / q;
    if (quot * q != p && p > 0)
        ++quot;
    return quot;
}

inline std::string to_string(const rational& x)
{
    return numerator(x).str() + "/" + denominator(x).str();
}

} // namespace neron_jumps

#endif // NERON_JUMPS_INTEGER_HPP
