#include "operadkit/rational.hpp"

#include <stdexcept>

namespace operadkit {

Rational rational_from_string(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    }
    catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

std::string rational_to_string(const Rational& q)
{
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace operadkit
