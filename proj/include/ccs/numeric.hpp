#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

namespace ccs {

// All colouring counts are exact. They fit 64 bits at typical sizes, but
// composition chains multiply counts, so we keep them arbitrary precision
// throughout rather than guessing a safe cap.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

/// Decimal rendering of count * order^(-half_exponent/2) with 12 significant
/// digits. Display only; all comparisons elsewhere are exact.
inline std::string approx_decimal(const BigInt& count, std::uint64_t order,
                                  std::uint64_t half_exponent) {
    using Float = boost::multiprecision::cpp_dec_float_50;
    Float v(count.str());
    Float root = sqrt(Float(order));
    for (std::uint64_t i = 0; i < half_exponent; ++i) v /= root;
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace ccs
