#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace permuto {

// All arithmetic in the library is exact. Rationals are kept in lowest
// terms with a positive denominator by the backend.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(BigInt(std::string(s)));
        BigInt num{std::string(s.substr(0, slash))};
        BigInt den{std::string(s.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_from_string: cannot parse '" + std::string(s) + "'");
    }
}

}  // namespace permuto
