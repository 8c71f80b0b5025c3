#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "cyclepack/common.hpp"

namespace cyclepack {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Serialized as "p/q" with q > 0 and gcd(|p|,q) = 1 (cpp_rational keeps the
// canonical form for us). The denominator is always written, "1/1" included.
inline std::string to_pq(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_pq(const std::string& s);

inline Rational rat(long long p, long long q = 1) { return Rational(Int(p), Int(q)); }

} // namespace cyclepack
