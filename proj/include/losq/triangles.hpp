#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "losq/integer.hpp"
#include "losq/residue.hpp"
#include "losq/triangle.hpp"

namespace losq {

struct EOTables {
    Triangle<Integer> even;
    Triangle<Integer> odd;
};

// e(n,k) / o(n,k): k-subsets of {1..n} with even / odd element sum, built by
// the coupled two-step recursion
//   e(n,k) = e(n-2,k) + C(n-2,k-1) + o(n-2,k-2)
//   o(n,k) = o(n-2,k) + C(n-2,k-1) + e(n-2,k-2)
// from the explicit rows n = 0, 1. Note o is not derived as C - e here; the
// complement identity stays an independent check.
inline EOTables e_o_tables(std::size_t max_n) {
    std::vector<std::vector<Integer>> e(max_n + 1), o(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        e[n].assign(n + 1, 0);
        o[n].assign(n + 1, 0);
    }
    e[0][0] = 1;
    if (max_n >= 1) {
        e[1][0] = 1;
        o[1][1] = 1;
    }
    auto cell = [](const std::vector<std::vector<Integer>>& t, long long n, long long k) -> Integer {
        if (k < 0 || k > n) return 0;
        return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    };
    for (std::size_t n = 2; n <= max_n; ++n) {
        long long m = static_cast<long long>(n);
        for (std::size_t k = 0; k <= n; ++k) {
            long long j = static_cast<long long>(k);
            Integer cross = binomial(m - 2, j - 1);
            e[n][k] = cell(e, m - 2, j) + cross + cell(o, m - 2, j - 2);
            o[n][k] = cell(o, m - 2, j) + cross + cell(e, m - 2, j - 2);
        }
    }
    auto pack = [&](const std::vector<std::vector<Integer>>& t, const char* tag) {
        return Triangle<Integer>::build(max_n, tag, [&](std::size_t n, std::size_t k) { return t[n][k]; });
    };
    return {pack(e, "e:coupled-two-step-recursion"), pack(o, "o:coupled-two-step-recursion")};
}

// Closed form: e(n,k) = sum_j C(floor((n+1)/2), 2j) * C(floor(n/2), k-2j).
inline Integer e_closed(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("e_closed: negative n");
    if (k < 0 || k > n) return 0;
    Integer total = 0;
    for (long long j = 0; 2 * j <= (n + 1) / 2; ++j) total += binomial((n + 1) / 2, 2 * j) * binomial(n / 2, k - 2 * j);
    return total;
}

struct LTables {
    Triangle<Integer> l;
    Triangle<Integer> lbar;
};

// Losanitsch triangle by the two-step recursion
//   L(n,k) = L(n-2,k) + C(n-2,k-1) + L(n-2,k-2)
// from rows n = 0, 1, with the complement Lbar(n,k) = C(n,k) - L(n,k).
inline LTables L_tables(std::size_t max_n) {
    std::vector<std::vector<Integer>> l(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) l[n].assign(n + 1, 0);
    l[0][0] = 1;
    if (max_n >= 1) {
        l[1][0] = 1;
        l[1][1] = 1;
    }
    auto cell = [&](long long n, long long k) -> Integer {
        if (k < 0 || k > n) return 0;
        return l[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    };
    for (std::size_t n = 2; n <= max_n; ++n) {
        long long m = static_cast<long long>(n);
        for (std::size_t k = 0; k <= n; ++k) {
            long long j = static_cast<long long>(k);
            l[n][k] = cell(m - 2, j) + binomial(m - 2, j - 1) + cell(m - 2, j - 2);
        }
    }
    Triangle<Integer> lt = Triangle<Integer>::build(max_n, "L:two-step-recursion",
                                                    [&](std::size_t n, std::size_t k) { return l[n][k]; });
    Triangle<Integer> lb = Triangle<Integer>::build(max_n, "Lbar:binomial-complement", [&](std::size_t n, std::size_t k) {
        return binomial(static_cast<long long>(n), static_cast<long long>(k)) - l[n][k];
    });
    return {std::move(lt), std::move(lb)};
}

// Closed form: C(n,k)/2 for even n, odd k; (C(n,k) + C(floor(n/2), floor(k/2)))/2 otherwise.
inline Integer L_closed(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("L_closed: negative n");
    if (k < 0 || k > n) return 0;
    if (n % 2 == 0 && k % 2 == 1) return exact_div(binomial(n, k), 2);
    return exact_div(binomial(n, k) + binomial(n / 2, k / 2), 2);
}

// Column k of L is the e-column when k = 0,3 (mod 4) and the o-column when
// k = 1,2 (mod 4); Lbar takes the opposite one.
inline bool column_composition_check(std::size_t max_n) {
    EOTables eo = e_o_tables(max_n);
    LTables lt = L_tables(max_n);
    for (std::size_t k = 0; k <= max_n; ++k) {
        bool even_col = (k % 4 == 0) || (k % 4 == 3);
        for (std::size_t n = k; n <= max_n; ++n) {
            const Integer& a = even_col ? eo.even.at(n, k) : eo.odd.at(n, k);
            const Integer& b = even_col ? eo.odd.at(n, k) : eo.even.at(n, k);
            if (lt.l.at(n, k) != a || lt.lbar.at(n, k) != b) return false;
        }
    }
    return true;
}

// [n k]_{q=-1}: 0 for even n, odd k; C(floor(n/2), floor(k/2)) otherwise.
inline Integer qbinom_at_minus1(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("qbinom_at_minus1: need 0 <= k <= n");
    if (n % 2 == 0 && k % 2 == 1) return 0;
    return binomial(n / 2, k / 2);
}

// epsilon(n,k) in Z[q]/(q^p - 1): coefficient of q^j counts k-subsets of
// {1..n} with sum j mod p. One-step recursion epsilon(n,k) =
// q^k (epsilon(n-1,k) + epsilon(n-1,k-1)), epsilon(0,0) = 1.
inline Triangle<ResiduePoly> epsilon_table(std::size_t max_n, std::size_t p) {
    std::vector<std::vector<ResiduePoly>> t(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) t[n].assign(n + 1, ResiduePoly(p));
    t[0][0] = ResiduePoly::constant(p, 1);
    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            ResiduePoly sum = k <= n - 1 ? t[n - 1][k] : ResiduePoly(p);
            if (k >= 1 && k - 1 <= n - 1) sum += t[n - 1][k - 1];
            t[n][k] = ResiduePoly::q_power(p, k) * sum;
        }
    return Triangle<ResiduePoly>::build(max_n, "epsilon:one-step-recursion",
                                        [&](std::size_t n, std::size_t k) { return t[n][k]; });
}

// lambda(n,k) in Z[q]/(q^p - 1): coefficient of q^j counts weight-k words of
// length n with inv = j mod p. Recursion lambda(n,k) =
// q^k lambda(n-1,k) + lambda(n-1,k-1), lambda(0,0) = 1.
inline Triangle<ResiduePoly> lambda_table(std::size_t max_n, std::size_t p) {
    std::vector<std::vector<ResiduePoly>> t(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) t[n].assign(n + 1, ResiduePoly(p));
    t[0][0] = ResiduePoly::constant(p, 1);
    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            ResiduePoly s = k <= n - 1 ? ResiduePoly::q_power(p, k) * t[n - 1][k] : ResiduePoly(p);
            if (k >= 1 && k - 1 <= n - 1) s += t[n - 1][k - 1];
            t[n][k] = s;
        }
    return Triangle<ResiduePoly>::build(max_n, "lambda:one-step-recursion",
                                        [&](std::size_t n, std::size_t k) { return t[n][k]; });
}

inline void check_residue_args(long long n, long long k, long long j, long long p, const char* what) {
    if (p < 2) throw std::invalid_argument(std::string(what) + ": p must be >= 2");
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument(std::string(what) + ": need 0 <= k <= n");
    if (j < 0 || j >= p) throw std::invalid_argument(std::string(what) + ": need 0 <= j < p");
}

inline Integer e_residue(long long n, long long k, long long j, long long p) {
    check_residue_args(n, k, j, p, "e_residue");
    Triangle<ResiduePoly> t = epsilon_table(static_cast<std::size_t>(n), static_cast<std::size_t>(p));
    return t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)).coeff(static_cast<std::size_t>(j));
}

inline Integer L_residue(long long n, long long k, long long j, long long p) {
    check_residue_args(n, k, j, p, "L_residue");
    Triangle<ResiduePoly> t = lambda_table(static_cast<std::size_t>(n), static_cast<std::size_t>(p));
    return t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)).coeff(static_cast<std::size_t>(j));
}

}  // namespace losq
