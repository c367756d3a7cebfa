#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "losq/integer.hpp"

// Brute-force reference implementations. Everything here enumerates the
// defining objects outright and counts, with no recursions, closed forms or
// generating functions, so these routines stay independent of the code they
// are used to check. Exponential in n, guarded accordingly.
namespace losq::oracle {

inline constexpr int kMaxEnumN = 24;

inline void check_enum_bound(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative size");
    if (n > kMaxEnumN) throw std::domain_error(std::string(what) + ": enumeration bound exceeded");
}

// Binary word w_1 ... w_n.
struct Word {
    std::vector<unsigned char> bits;

    int length() const { return static_cast<int>(bits.size()); }

    int weight() const {
        int k = 0;
        for (unsigned char b : bits) k += b;
        return k;
    }
};

// Subset of {1..n}, elements strictly increasing.
struct KSubset {
    int n = 0;
    std::vector<int> elements;
};

inline void validate(const KSubset& s) {
    if (s.n < 0) throw std::invalid_argument("KSubset: negative ambient size");
    int prev = 0;
    for (int e : s.elements) {
        if (e <= prev || e > s.n) throw std::invalid_argument("KSubset: elements must be strictly increasing in 1..n");
        prev = e;
    }
}

inline Integer subset_sum(const KSubset& s) {
    validate(s);
    Integer t = 0;
    for (int e : s.elements) t += e;
    return t;
}

// Indicator word of S: w_i = 1 iff i is in S.
inline Word indicator_word(const KSubset& s) {
    validate(s);
    Word w;
    w.bits.assign(static_cast<std::size_t>(s.n), 0);
    for (int e : s.elements) w.bits[static_cast<std::size_t>(e - 1)] = 1;
    return w;
}

// Indicator word of the reflected set S* = { n+1-i : i in S }.
inline Word star_word(const KSubset& s) {
    validate(s);
    Word w;
    w.bits.assign(static_cast<std::size_t>(s.n), 0);
    for (int e : s.elements) w.bits[static_cast<std::size_t>(s.n - e)] = 1;
    return w;
}

// Number of inversions: pairs i < j with w_i > w_j. Plain pair count.
inline Integer inv(const Word& w) {
    Integer c = 0;
    for (std::size_t i = 0; i < w.bits.size(); ++i)
        for (std::size_t j = i + 1; j < w.bits.size(); ++j)
            if (w.bits[i] > w.bits[j]) ++c;
    return c;
}

// Visits the element list of every k-subset of {1..n} in lexicographic
// order (the empty list once when k = 0).
template <class F>
void for_each_ksubset(int n, int k, F visit) {
    check_enum_bound(n, "for_each_ksubset");
    if (k < 0 || k > n) return;
    std::vector<int> el(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) el[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
        visit(static_cast<const std::vector<int>&>(el));
        int i = k - 1;
        while (i >= 0 && el[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++el[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) el[static_cast<std::size_t>(j)] = el[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// counts[j] = number of k-subsets of {1..n} whose element sum is j mod p.
inline std::vector<Integer> subset_residue_counts(int n, int k, int p) {
    if (p < 1) throw std::invalid_argument("subset_residue_counts: p must be >= 1");
    check_enum_bound(n, "subset_residue_counts");
    std::vector<Integer> counts(static_cast<std::size_t>(p));
    for_each_ksubset(n, k, [&](const std::vector<int>& el) {
        long long s = 0;
        for (int e : el) s += e;
        ++counts[static_cast<std::size_t>(s % p)];
    });
    return counts;
}

// counts[j] = number of weight-k binary words of length n with inv(w) = j mod p.
inline std::vector<Integer> inv_residue_counts(int n, int k, int p) {
    if (p < 1) throw std::invalid_argument("inv_residue_counts: p must be >= 1");
    check_enum_bound(n, "inv_residue_counts");
    std::vector<Integer> counts(static_cast<std::size_t>(p));
    for_each_ksubset(n, k, [&](const std::vector<int>& el) {
        KSubset s{n, el};
        Integer m = inv(indicator_word(s)) % p;
        ++counts[static_cast<std::size_t>(m.convert_to<long long>())];
    });
    return counts;
}

struct ReversalClasses {
    Integer classes;
    Integer palindromes;
};

// Orbits of weight-k words of length n under reversal, counted by picking
// the lexicographically smaller of {w, reverse(w)} as representative.
inline ReversalClasses reversal_classes(int n, int k) {
    check_enum_bound(n, "reversal_classes");
    ReversalClasses r{0, 0};
    for_each_ksubset(n, k, [&](const std::vector<int>& el) {
        Word w = indicator_word(KSubset{n, el});
        std::vector<unsigned char> rev(w.bits.rbegin(), w.bits.rend());
        if (w.bits == rev) ++r.palindromes;
        if (w.bits <= rev) ++r.classes;
    });
    return r;
}

// Bracelets with one blue, n_white white and k_red red beads: enumerate
// every linear arrangement and count distinct canonical forms, where the
// canonical form is the lexicographic minimum over all rotations and
// reflected rotations.
inline Integer bracelet_count(int n_white, int k_red) {
    if (n_white < 0 || k_red < 0) throw std::invalid_argument("bracelet_count: negative bead count");
    check_enum_bound(n_white + k_red, "bracelet_count");
    const int m = n_white + k_red + 1;
    auto canonical = [m](const std::string& s) {
        std::string best = s;
        std::string rev(s.rbegin(), s.rend());
        for (int r = 0; r < m; ++r) {
            std::string a = s.substr(static_cast<std::size_t>(r)) + s.substr(0, static_cast<std::size_t>(r));
            std::string b = rev.substr(static_cast<std::size_t>(r)) + rev.substr(0, static_cast<std::size_t>(r));
            if (a < best) best = a;
            if (b < best) best = b;
        }
        return best;
    };
    std::set<std::string> seen;
    for (int blue = 0; blue < m; ++blue) {
        // Red positions among the remaining m-1 slots.
        for_each_ksubset(m - 1, k_red, [&](const std::vector<int>& el) {
            std::string s(static_cast<std::size_t>(m), 'w');
            s[static_cast<std::size_t>(blue)] = 'b';
            for (int e : el) {
                int pos = e - 1;
                if (pos >= blue) ++pos;
                s[static_cast<std::size_t>(pos)] = 'r';
            }
            seen.insert(canonical(s));
        });
    }
    return Integer(seen.size());
}

}  // namespace losq::oracle
