#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <vector>

namespace gapforge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;

Rational make_rational(const Integer& num, const Integer& den);

/// Always "p/q" with q > 0, e.g. "-3/2", "4/1".
std::string format_rational(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws SchemaViolation on bad text.
Rational parse_rational(const std::string& text);

Integer parse_integer(const std::string& text);

/// True iff the rational has denominator 1.
bool is_integral(const Rational& r);

Integer abs_sum(const IntVector& v);

/// A value a + b·ε where ε is a positive infinitesimal. Ordered
/// lexicographically on (standard, eps).
struct DualValue {
    Rational standard;
    Rational eps;

    DualValue() = default;
    DualValue(Rational s, Rational e = 0) : standard(std::move(s)), eps(std::move(e)) {}

    DualValue& operator+=(const DualValue& other)
    {
        standard += other.standard;
        eps += other.eps;
        return *this;
    }

    friend DualValue operator*(const Rational& k, const DualValue& v)
    {
        return DualValue(k * v.standard, k * v.eps);
    }

    friend bool operator==(const DualValue&, const DualValue&) = default;

    int sign() const
    {
        if (standard != 0)
            return standard > 0 ? 1 : -1;
        if (eps != 0)
            return eps > 0 ? 1 : -1;
        return 0;
    }
};

bool is_prime(const Integer& n);

/// Smallest prime strictly greater than `bound`.
Integer next_prime_above(const Integer& bound);

}  // namespace gapforge
