#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "losq/integer.hpp"
#include "losq/poly.hpp"

namespace losq {

// Element of Z[q]/(q^p - 1), stored as the full length-p coefficient vector
// (c_0, ..., c_{p-1}); equality is componentwise, so trailing zeros are
// kept. A default-constructed value is an unbound zero: it carries no p yet
// and adopts the other operand's modulus on first use, which lets these sit
// inside Poly<ResiduePoly> coefficient vectors.
class ResiduePoly {
public:
    ResiduePoly() = default;

    explicit ResiduePoly(std::size_t p) : p_(checked(p)), c_(p) {}

    ResiduePoly(std::size_t p, std::vector<Integer> coeffs) : p_(checked(p)), c_(std::move(coeffs)) {
        if (c_.size() > p_) throw std::invalid_argument("ResiduePoly: more than p coefficients");
        c_.resize(p_);
    }

    static ResiduePoly constant(std::size_t p, Integer value) {
        ResiduePoly r(p);
        r.c_[0] = std::move(value);
        return r;
    }

    // q^m, exponent folded mod p.
    static ResiduePoly q_power(std::size_t p, unsigned long long m) {
        ResiduePoly r(p);
        r.c_[m % p] = 1;
        return r;
    }

    std::size_t modulus_degree() const { return p_; }
    bool is_bound() const { return p_ != 0; }

    bool is_zero() const {
        for (const Integer& c : c_)
            if (c != 0) return false;
        return true;
    }

    Integer coeff(std::size_t j) const {
        if (p_ == 0) return 0;
        if (j >= p_) throw std::out_of_range("ResiduePoly: coefficient index past p-1");
        return c_[j];
    }
    const std::vector<Integer>& coeffs() const { return c_; }

    // Value at q = 1.
    Integer coeff_sum() const {
        Integer s = 0;
        for (const Integer& c : c_) s += c;
        return s;
    }

    friend ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b) {
        std::size_t p = unify(a.p_, b.p_);
        if (p == 0) return {};
        ResiduePoly r(p);
        for (std::size_t j = 0; j < p; ++j) r.c_[j] = a.at(j) + b.at(j);
        return r;
    }

    friend ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b) { return a + (-b); }

    ResiduePoly operator-() const {
        ResiduePoly r = *this;
        for (Integer& c : r.c_) c = -c;
        return r;
    }

    // Cyclic convolution: q^p wraps to 1.
    friend ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b) {
        std::size_t p = unify(a.p_, b.p_);
        if (p == 0) return {};
        ResiduePoly r(p);
        for (std::size_t i = 0; i < p; ++i) {
            if (a.at(i) == 0) continue;
            for (std::size_t j = 0; j < p; ++j) r.c_[(i + j) % p] += a.at(i) * b.at(j);
        }
        return r;
    }

    ResiduePoly& operator+=(const ResiduePoly& b) { return *this = *this + b; }
    ResiduePoly& operator-=(const ResiduePoly& b) { return *this = *this - b; }
    ResiduePoly& operator*=(const ResiduePoly& b) { return *this = *this * b; }

    friend bool operator==(const ResiduePoly& a, const ResiduePoly& b) {
        if (a.p_ == b.p_) return a.c_ == b.c_;
        if (a.p_ == 0) return a.is_zero() && b.is_zero();
        if (b.p_ == 0) return a.is_zero() && b.is_zero();
        return false;
    }
    friend bool operator!=(const ResiduePoly& a, const ResiduePoly& b) { return !(a == b); }

private:
    static std::size_t checked(std::size_t p) {
        if (p < 2) throw std::invalid_argument("ResiduePoly: modulus degree must be >= 2");
        return p;
    }

    static std::size_t unify(std::size_t a, std::size_t b) {
        if (a == 0) return b;
        if (b == 0 || a == b) return a;
        throw std::invalid_argument("ResiduePoly: modulus mismatch");
    }

    Integer at(std::size_t j) const { return j < c_.size() ? c_[j] : Integer(0); }

    std::size_t p_ = 0;
    std::vector<Integer> c_;
};

// Image of an exact q-polynomial in Z[q]/(q^p - 1): exponents fold mod p.
inline ResiduePoly residue_reduce(const UniPoly& a, std::size_t p) {
    if (a.var() != Var::q && a.var() != Var::none)
        throw std::invalid_argument("residue_reduce: expected a q-polynomial");
    ResiduePoly r(p);
    for (long long i = 0; i <= a.degree(); ++i) {
        Integer c = a.coeff(static_cast<std::size_t>(i));
        if (c != 0) r += ResiduePoly::q_power(p, static_cast<unsigned long long>(i)) * ResiduePoly::constant(p, c);
    }
    return r;
}

inline ResiduePoly residue_add(const ResiduePoly& a, const ResiduePoly& b) { return a + b; }
inline ResiduePoly residue_mul(const ResiduePoly& a, const ResiduePoly& b) { return a * b; }

// Canonical representative of degree < p as a plain q-polynomial.
inline UniPoly to_unipoly(const ResiduePoly& a) {
    return UniPoly(Var::q, a.coeffs());
}

// Residue-coefficient instantiation of the x-polynomial type.
using XPolyOverRes = Poly<ResiduePoly>;

// Further reduction of Z[q]/(q^p - 1) modulo the p-th cyclotomic polynomial
// 1 + q + ... + q^{p-1}, for prime p only: substitutes
// q^{p-1} = -(1 + q + ... + q^{p-2}) and returns the degree < p-1
// representative. Composite p would need a different quotient, so reject it.
inline UniPoly cyclotomic_reduce(const ResiduePoly& a) {
    std::size_t p = a.modulus_degree();
    if (p == 0) throw std::invalid_argument("cyclotomic_reduce: unbound residue");
    if (!is_prime(static_cast<long long>(p)))
        throw std::invalid_argument("cyclotomic_reduce: p must be prime");
    std::vector<Integer> c(p - 1);
    const Integer top = a.coeffs()[p - 1];
    for (std::size_t j = 0; j + 1 < p; ++j) c[j] = a.coeffs()[j] - top;
    return UniPoly(Var::q, std::move(c));
}

}  // namespace losq
