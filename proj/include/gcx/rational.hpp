#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace gcx {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Pivot-size heuristic for rational elimination: |numerator * denominator|.
inline Int pivot_weight(const Rational& q) {
    Int w = rat_num(q) * rat_den(q);
    return w < 0 ? Int(-w) : w;
}

inline std::string to_string(const Rational& q) { return q.str(); }

} // namespace gcx
