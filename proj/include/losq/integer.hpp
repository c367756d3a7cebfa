#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace losq {

// Exact arbitrary-precision signed integer. Everything in this library is
// computed over Z (or Z[q]/(q^p - 1)); there is no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;

// a / b when b divides a exactly; throws otherwise. Used wherever a formula
// carries a 1/2 or 1/p factor that is known to cancel, so a failed division
// is a genuine verification failure, not a rounding site.
inline Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("exact_div: division by zero");
    Integer q = a / b;
    if (q * b != a) throw std::domain_error("exact_div: inexact division");
    return q;
}

// Binomial coefficient C(n, k), zero outside 0 <= k <= n. The running
// product n(n-1)...(n-i+1)/i! is divided stepwise; each step is exact.
inline Integer binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace losq
