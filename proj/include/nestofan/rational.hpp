#ifndef NESTOFAN_RATIONAL_HPP
#define NESTOFAN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace nestofan {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/** Parse an exact rational from "p/q" or plain integer form. Decimal
 *  notation is rejected so floating-point values can never sneak in. */
inline Rat parse_rational(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        throw std::invalid_argument("decimal notation rejected, use p/q: " + s);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0)
            throw std::invalid_argument("zero denominator: " + s);
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline std::string format_rational(const Rat& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace nestofan

#endif  // NESTOFAN_RATIONAL_HPP
