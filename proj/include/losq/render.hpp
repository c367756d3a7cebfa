#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "losq/integer.hpp"
#include "losq/poly.hpp"
#include "losq/residue.hpp"
#include "losq/triangle.hpp"

namespace losq {

inline std::string to_string(const Integer& v) { return v.str(); }

// Ascending powers, explicit +/- separators, unit coefficients suppressed
// on powers: "1+2x+4x^2+2x^3+x^4", "q", "0".
inline std::string to_string(const UniPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Integer& c = f.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty())
            out += c < 0 ? '-' : '+';
        else if (c < 0)
            out += '-';
        Integer a = abs(c);
        if (i == 0 || a != 1) out += a.str();
        if (i > 0) {
            out += var_letter(f.var());
            if (i > 1) out += '^' + std::to_string(i);
        }
    }
    return out;
}

// Degree < p representative: "4+3q+3q^2".
inline std::string to_string(const ResiduePoly& r) { return to_string(to_unipoly(r)); }

// Outer polynomial with non-constant coefficients parenthesized:
// "1+(1+q)x+x^2".
template <class C>
std::string to_string(const Poly<C>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const C& c = f.coeffs()[i];
        if (detail::is_zero_coeff(c)) continue;
        std::string cs = to_string(c);
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") out += cs.find_first_of("+-", 1) != std::string::npos || cs[0] == '-' ? "(" + cs + ")" : cs;
        out += var_letter(f.var());
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

// Full (N+1) x (N+1) square, zeros above the diagonal, columns right-aligned
// to match the printed matrices.
template <class E>
std::string render_table(const Triangle<E>& t) {
    std::size_t rows = t.max_n() + 1;
    std::vector<std::vector<std::string>> cell(rows, std::vector<std::string>(rows, "0"));
    std::vector<std::size_t> width(rows, 1);
    for (std::size_t n = 0; n < rows; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            cell[n][k] = to_string(t.at(n, k));
            if (cell[n][k].size() > width[k]) width[k] = cell[n][k].size();
        }
    std::string out;
    for (std::size_t n = 0; n < rows; ++n) {
        for (std::size_t k = 0; k < rows; ++k) {
            if (k) out += ' ';
            out.append(width[k] - cell[n][k].size(), ' ');
            out += cell[n][k];
        }
        out += '\n';
    }
    return out;
}

// One line per triangle row, entries k = 0..n comma-separated.
template <class E>
std::string render_csv(const Triangle<E>& t) {
    std::string out;
    for (std::size_t n = 0; n <= t.max_n(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (k) out += ',';
            out += to_string(t.at(n, k));
        }
        out += '\n';
    }
    return out;
}

}  // namespace losq
