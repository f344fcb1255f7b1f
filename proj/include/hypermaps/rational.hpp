#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hypermaps {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

} // namespace hypermaps
