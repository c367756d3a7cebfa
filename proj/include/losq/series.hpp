#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "losq/poly.hpp"

namespace losq {

// Rational generating function num/den in a series variable (normally z),
// with coefficients that are x-polynomials; plain integer sequences use
// untagged constant coefficients. The denominator's constant term must be 1
// so the expansion is an exact linear recurrence.
struct RationalGF {
    Poly<UniPoly> num;
    Poly<UniPoly> den;
};

// 1 - g * v^m, the usual denominator building block.
inline Poly<UniPoly> one_minus(const UniPoly& g, std::size_t m, Var v = Var::z) {
    std::vector<UniPoly> c(m + 1);
    c[0] = UniPoly::constant(Var::none, 1);
    c[m] = -g;
    return Poly<UniPoly>(v, std::move(c));
}

// Univariate polynomial reinterpreted with scalar (x-free) coefficients,
// for generating functions of plain integer sequences.
inline Poly<UniPoly> with_scalar_coeffs(const UniPoly& u) {
    std::vector<UniPoly> c;
    c.reserve(u.coeffs().size());
    for (const Integer& v : u.coeffs()) c.push_back(v == 0 ? UniPoly() : UniPoly::constant(Var::none, v));
    return Poly<UniPoly>(u.var(), std::move(c));
}

// Coefficients c_0..c_max_n with sum c_n z^n = num/den (mod z^{max_n+1}),
// by the recurrence c_n = num_n - sum_{i>=1} den_i c_{n-i}.
inline std::vector<UniPoly> series_expand(const RationalGF& gf, std::size_t max_n) {
    if (gf.den.coeff(0) != UniPoly::constant(Var::none, 1))
        throw std::invalid_argument("series_expand: denominator constant term must be 1");
    std::vector<UniPoly> c(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        UniPoly v = gf.num.coeff(n);
        for (std::size_t i = 1; i <= n; ++i) {
            if (static_cast<long long>(i) > gf.den.degree()) break;
            v -= gf.den.coeff(i) * c[n - i];
        }
        c[n] = std::move(v);
    }
    return c;
}

}  // namespace losq
