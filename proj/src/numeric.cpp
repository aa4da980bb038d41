#include "gapforge/numeric.hpp"

#include "gapforge/error.hpp"

#include <cctype>

namespace gapforge {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        fail(ErrorCode::BadParameters, "zero denominator");
    return Rational(num, den);
}

std::string format_rational(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {
    bool is_integer_text(const std::string& s)
    {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (! std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    }
}

Integer parse_integer(const std::string& text)
{
    if (! is_integer_text(text))
        fail(ErrorCode::SchemaViolation, "not an integer: '" + text + "'");
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(text));
    auto den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        fail(ErrorCode::SchemaViolation, "zero denominator in '" + text + "'");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

bool is_integral(const Rational& r)
{
    return denominator(r) == 1;
}

Integer abs_sum(const IntVector& v)
{
    Integer total = 0;
    for (const auto& x : v)
        total += abs(x);
    return total;
}

bool is_prime(const Integer& n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0)
        return false;
    for (Integer d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

Integer next_prime_above(const Integer& bound)
{
    Integer candidate = bound < 1 ? Integer(2) : Integer(bound + 1);
    while (! is_prime(candidate))
        ++candidate;
    return candidate;
}

}  // namespace gapforge
