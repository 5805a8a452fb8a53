#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace csp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Errors caused by calling an operation outside its contract.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Renders "p" or "p/q", the catalog wire format for exact coefficients.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw UsageError("zero denominator in rational '" + s + "'");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw UsageError("malformed rational '" + s + "'");
    }
}

inline long long to_ll(const Int& v) {
    return v.convert_to<long long>();
}

}  // namespace csp
