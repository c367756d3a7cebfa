#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "losq/integer.hpp"

namespace losq {

// Formal variable tag. A default-constructed polynomial is the "untagged"
// zero; it unifies with any variable on first use. Combining two different
// bound tags in one operation is a usage error and throws.
enum class Var : char { none = '?', x = 'x', z = 'z', q = 'q', s = 's' };

inline char var_letter(Var v) { return static_cast<char>(v); }

template <class C>
class Poly;

namespace detail {

inline Var unify_var(Var a, Var b) {
    if (a == Var::none) return b;
    if (b == Var::none || b == a) return a;
    throw std::invalid_argument("polynomial variable mismatch");
}

template <class C>
bool is_zero_coeff(const C& c) {
    if constexpr (std::is_same_v<C, Integer>)
        return c == 0;
    else
        return c.is_zero();
}

template <class C>
struct ring_one_impl {
    static C get() { return C(1); }
};
template <class C>
struct ring_one_impl<Poly<C>> {
    static Poly<C> get() { return Poly<C>(Var::none, {ring_one_impl<C>::get()}); }
};

template <class C>
C ring_one() {
    return ring_one_impl<C>::get();
}

}  // namespace detail

// Dense univariate polynomial over an exact coefficient ring C: Integer,
// ResiduePoly, or another Poly (Poly<Poly<Integer>> covers the bivariate
// families, e.g. x-polynomials whose coefficients live in Z[q]).
// Canonical form: no trailing zero coefficients, so the zero polynomial
// has an empty vector and degree -1.
template <class C>
class Poly {
public:
    Poly() = default;
    explicit Poly(Var v) : var_(v) {}
    Poly(Var v, std::vector<C> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

    static Poly constant(Var v, C value) { return Poly(v, std::vector<C>{std::move(value)}); }

    static Poly monomial(Var v, C value, std::size_t deg) {
        std::vector<C> c(deg + 1);
        c[deg] = std::move(value);
        return Poly(v, std::move(c));
    }

    // Multiplicative identity, untagged so it can join any product.
    static Poly one() { return Poly(Var::none, std::vector<C>{detail::ring_one<C>()}); }

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }

    // Coefficient of var^i; zero beyond the degree.
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C{}; }
    const std::vector<C>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Var v = detail::unify_var(a.var_, b.var_);
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(v, std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        Poly r = *this;
        for (C& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Var v = detail::unify_var(a.var_, b.var_);
        if (a.is_zero() || b.is_zero()) return Poly(v);
        std::vector<C> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(v, std::move(r));
    }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    // Equal values only; a bound variable never equals a different bound
    // variable, while untagged zero equals any zero.
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        if (a.var_ != b.var_ && a.var_ != Var::none && b.var_ != Var::none) return false;
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && detail::is_zero_coeff(c_.back())) c_.pop_back();
    }

    Var var_ = Var::none;
    std::vector<C> c_;
};

template <class C>
Poly<C> poly_add(const Poly<C>& a, const Poly<C>& b) {
    return a + b;
}

template <class C>
Poly<C> poly_mul(const Poly<C>& a, const Poly<C>& b) {
    return a * b;
}

template <class C>
Poly<C> poly_pow(const Poly<C>& a, unsigned long long m) {
    Poly<C> r = Poly<C>::one();
    Poly<C> base = a;
    for (; m; m >>= 1) {
        if (m & 1) r = r * base;
        if (m > 1) base = base * base;
    }
    return r;
}

// f * var^m.
template <class C>
Poly<C> shifted(const Poly<C>& f, std::size_t m) {
    if (f.is_zero()) return f;
    std::vector<C> r(f.coeffs().size() + m);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) r[i + m] = f.coeffs()[i];
    return Poly<C>(f.var(), std::move(r));
}

// Same coefficients read as a polynomial in a different variable.
template <class C>
Poly<C> retagged(const Poly<C>& f, Var v) {
    return Poly<C>(v, f.coeffs());
}

// f(var^m): spreads coefficient i to position i*m.
template <class C>
Poly<C> dilated(const Poly<C>& f, std::size_t m) {
    if (m == 0) throw std::invalid_argument("dilated: exponent must be positive");
    if (f.is_zero()) return f;
    std::vector<C> r(static_cast<std::size_t>(f.degree()) * m + 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) r[i * m] = f.coeffs()[i];
    return Poly<C>(f.var(), std::move(r));
}

// var^n * f(1/var) for n >= deg f.
template <class C>
Poly<C> reversed(const Poly<C>& f, std::size_t n) {
    if (f.degree() > static_cast<long long>(n))
        throw std::invalid_argument("reversed: n below degree");
    std::vector<C> r(n + 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) r[n - i] = f.coeffs()[i];
    return Poly<C>(f.var(), std::move(r));
}

// New polynomial in the same variable with fn applied to every coefficient.
template <class C, class F>
auto map_coeffs(const Poly<C>& f, F fn) -> Poly<std::decay_t<decltype(fn(std::declval<const C&>()))>> {
    using D = std::decay_t<decltype(fn(std::declval<const C&>()))>;
    std::vector<D> r;
    r.reserve(f.coeffs().size());
    for (const C& c : f.coeffs()) r.push_back(fn(c));
    return Poly<D>(f.var(), std::move(r));
}

using UniPoly = Poly<Integer>;

inline Integer eval_int(const UniPoly& f, const Integer& t) {
    Integer acc = 0;
    for (long long i = f.degree(); i >= 0; --i) acc = acc * t + f.coeff(static_cast<std::size_t>(i));
    return acc;
}

// f(g), computed by Horner over the coefficients of f; the result lives in
// g's variable.
inline UniPoly substitute(const UniPoly& f, const UniPoly& g) {
    UniPoly acc(g.var());
    for (long long i = f.degree(); i >= 0; --i)
        acc = acc * g + UniPoly::constant(g.var(), f.coeff(static_cast<std::size_t>(i)));
    return acc;
}

// Row n of the q-Pascal triangle: [n 0]_q .. [n n]_q, built by the
// division-free recursion [n k] = q^k [n-1 k] + [n-1 k-1], never through
// factorial quotients.
inline std::vector<UniPoly> q_binomial_row(long long n) {
    if (n < 0) throw std::invalid_argument("q_binomial_row: negative n");
    std::vector<UniPoly> row{UniPoly::constant(Var::q, 1)};
    for (long long m = 1; m <= n; ++m) {
        std::vector<UniPoly> next(static_cast<std::size_t>(m) + 1);
        next[0] = UniPoly::constant(Var::q, 1);
        next[static_cast<std::size_t>(m)] = row[static_cast<std::size_t>(m) - 1];
        for (std::size_t j = 1; j < static_cast<std::size_t>(m); ++j)
            next[j] = shifted(row[j], j) + row[j - 1];
        row = std::move(next);
    }
    return row;
}

// Gaussian binomial [n k]_q; zero outside 0 <= k <= n.
inline UniPoly q_binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("q_binomial: negative n");
    if (k < 0 || k > n) return UniPoly(Var::q);
    return q_binomial_row(n)[static_cast<std::size_t>(k)];
}

// Polynomial in x whose coefficients are polynomials in q: either exact
// (Rogers-Szego, q-Newton) or, as Poly<ResiduePoly>, residues mod q^p - 1
// (the epsilon_n(x) / lambda_n(x) rows). The same template also carries the
// z-series and s-variable (q-Fibonacci) families under other tags.
using XPolyOverQ = Poly<UniPoly>;

}  // namespace losq
