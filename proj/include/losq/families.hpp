#pragma once

#include <stdexcept>
#include <vector>

#include "losq/integer.hpp"
#include "losq/poly.hpp"
#include "losq/residue.hpp"
#include "losq/triangles.hpp"

namespace losq {

// (1 + v)^n.
inline UniPoly binomial_poly(long long n, Var v = Var::x) {
    if (n < 0) throw std::invalid_argument("binomial_poly: negative n");
    return poly_pow(UniPoly(v, {1, 1}), static_cast<unsigned long long>(n));
}

// Coefficientwise exact division.
inline UniPoly div_coeffs(const UniPoly& f, const Integer& d) {
    return map_coeffs(f, [&](const Integer& c) { return exact_div(c, d); });
}

// Row polynomial of even-set counts: e_{2m}(x) = ((1+x)^{2m} + (1-x^2)^m)/2
// and e_{2m+1}(x) = ((1+x)^{2m+1} + (1-x)(1-x^2)^m)/2.
inline UniPoly e_poly(long long n) {
    if (n < 0) throw std::invalid_argument("e_poly: negative n");
    UniPoly tail = poly_pow(UniPoly(Var::x, {1, 0, -1}), static_cast<unsigned long long>(n / 2));
    if (n % 2) tail = UniPoly(Var::x, {1, -1}) * tail;
    return div_coeffs(binomial_poly(n) + tail, 2);
}

inline UniPoly o_poly(long long n) { return binomial_poly(n) - e_poly(n); }

// Losanitsch row polynomial: L_{2m}(x) = ((1+x)^{2m} + (1+x^2)^m)/2 and
// L_{2m+1}(x) = ((1+x)^{2m+1} + (1+x)(1+x^2)^m)/2.
inline UniPoly L_poly(long long n) {
    if (n < 0) throw std::invalid_argument("L_poly: negative n");
    UniPoly tail = poly_pow(UniPoly(Var::x, {1, 0, 1}), static_cast<unsigned long long>(n / 2));
    if (n % 2) tail = UniPoly(Var::x, {1, 1}) * tail;
    return div_coeffs(binomial_poly(n) + tail, 2);
}

inline UniPoly Lbar_poly(long long n) { return binomial_poly(n) - L_poly(n); }

// Rogers-Szego polynomial r_n(x,q) = sum_k [n k]_q x^k.
inline XPolyOverQ rogers_szego(long long n) {
    if (n < 0) throw std::invalid_argument("rogers_szego: negative n");
    return XPolyOverQ(Var::x, q_binomial_row(n));
}

// q-Newton polynomial p_n(x,q) = prod_{j=1}^n (1 + q^j x), expanded exactly
// as the product; the q-binomial sum form is a separate checked identity.
inline XPolyOverQ q_newton(long long n) {
    if (n < 0) throw std::invalid_argument("q_newton: negative n");
    XPolyOverQ r = XPolyOverQ::constant(Var::x, UniPoly::constant(Var::q, 1));
    for (long long j = 1; j <= n; ++j)
        r *= XPolyOverQ(Var::x, {UniPoly::constant(Var::q, 1),
                                 UniPoly::monomial(Var::q, 1, static_cast<std::size_t>(j))});
    return r;
}

// q-Fibonacci polynomial F_n(s,q), built by the recursion
// F_n = F_{n-1} + q^{n-3} s F_{n-2}; the q-power is ill-typed below n = 3,
// so rows 0..2 are seeded from the sum definition
// F_n(s,q) = sum_k q^{k(k-1)} [n-1-k k]_q s^k, which gives 0, 1, 1.
inline XPolyOverQ q_fibonacci(long long n) {
    if (n < 0) throw std::invalid_argument("q_fibonacci: negative n");
    XPolyOverQ prev(Var::s);
    XPolyOverQ cur = XPolyOverQ::constant(Var::s, UniPoly::constant(Var::q, 1));
    if (n == 0) return prev;
    for (long long m = 2; m <= n; ++m) {
        XPolyOverQ next;
        if (m == 2)
            next = cur;  // F_2 = 1 from the sum definition
        else
            next = cur + XPolyOverQ::monomial(Var::s, UniPoly::monomial(Var::q, 1, static_cast<std::size_t>(m - 3)), 1) *
                             prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Partial sums of Euler's pentagonal series:
// f(n) = sum_k (-1)^k q^{C(k+1,2)} [n-1-k k]_q, terms with n-1-k < 0 vanish.
inline UniPoly pentagonal_f(long long n) {
    if (n < 0) throw std::invalid_argument("pentagonal_f: negative n");
    UniPoly total(Var::q);
    for (long long k = 0; 2 * k <= n - 1; ++k) {
        UniPoly term = shifted(q_binomial(n - 1 - k, k), static_cast<std::size_t>(k * (k + 1) / 2));
        if (k % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

// phi(n) = f(n) mod (q^2 - 1); 12-periodic.
inline ResiduePoly pentagonal_phi(long long n) { return residue_reduce(pentagonal_f(n), 2); }

inline void check_odd_prime(long long p, const char* what) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument(std::string(what) + ": p must be an odd prime");
}

// e_n(x,p) = sum_k e(n,k,0,p) x^k, the zero-residue column polynomial.
inline UniPoly general_e_poly(long long n, long long p) {
    check_odd_prime(p, "general_e_poly");
    if (n < 0) throw std::invalid_argument("general_e_poly: negative n");
    Triangle<ResiduePoly> eps = epsilon_table(static_cast<std::size_t>(n), static_cast<std::size_t>(p));
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k)
        c[k] = eps.at(static_cast<std::size_t>(n), k).coeff(0);
    return UniPoly(Var::x, std::move(c));
}

// b_i(x) = p * e_i(x,p) - (1+x)^i for 0 <= i < p: the n = 0 instance of the
// decomposition e_{pn+i}(x,p) = ((1+x)^{pn+i} + b_i(x)(1+x^p)^n)/p.
inline std::vector<UniPoly> b_polys(long long p) {
    check_odd_prime(p, "b_polys");
    std::vector<UniPoly> b;
    b.reserve(static_cast<std::size_t>(p));
    for (long long i = 0; i < p; ++i)
        b.push_back(UniPoly::constant(Var::none, p) * general_e_poly(i, p) - binomial_poly(i));
    return b;
}

}  // namespace losq
