#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace quotdt {

// Exact arbitrary-precision integer. Coefficients of MacMahon powers such as
// M(q)^{-400} overflow 64-bit machine words within a handful of terms, so
// every coefficient in the library is a Bigint.
using Bigint = boost::multiprecision::cpp_int;

// Binomial coefficient C(top, k) for k >= 0; top may be any Bigint.
// Computed as top(top-1)...(top-k+1)/k! with exact stepwise division.
inline Bigint binomial(const Bigint& top, unsigned long k) {
    Bigint result = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        result *= top - static_cast<long>(i) + 1;
        result /= static_cast<long>(i);
    }
    return result;
}

} // namespace quotdt
