#include "augvar/rational.hpp"

#include <cctype>

#include "augvar/errors.hpp"

namespace augvar {

std::string to_string(const Rational& q)
{
    const Integer& num = boost::multiprecision::numerator(q);
    const Integer& den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool valid_integer(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s)
{
    if (!valid_integer(s))
        fail(ErrorKind::ParseError, "malformed integer '" + std::string(s) + "'");
    if (s[0] == '+')
        s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(trim(text.substr(0, slash)));
    Integer den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0)
        fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational pow_rational(const Rational& q, long e)
{
    if (e < 0) {
        if (q == 0)
            fail(ErrorKind::NotInvertible, "0 to a negative power");
        return pow_rational(Rational(1) / q, -e);
    }
    Rational acc(1), base = q;
    for (; e > 0; e >>= 1) {
        if (e & 1)
            acc *= base;
        base *= base;
    }
    return acc;
}

}  // namespace augvar
