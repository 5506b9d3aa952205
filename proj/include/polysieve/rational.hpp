#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace polysieve {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient with the conventions the counting formulas rely on:
// C(a, 0) = 1 for every a (including negative a), and C(a, b) = 0 whenever
// b < 0, or a < 0 with b > 0, or b > a >= 0.
inline BigInt binomial(long long a, long long b) {
    if (b == 0) return 1;
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;
    }
    return r;
}

// ceil(1/p) for a probability 0 < p <= 1.
inline std::uint64_t ceil_inverse(const Rational& p) {
    if (p <= 0) throw std::domain_error("ceil_inverse: nonpositive probability");
    BigInt num = boost::multiprecision::numerator(p);
    BigInt den = boost::multiprecision::denominator(p);
    BigInt r = (den + num - 1) / num;
    return r.convert_to<std::uint64_t>();
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace polysieve
