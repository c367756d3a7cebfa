#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>

#include "losq/losq.hpp"

namespace {

using namespace losq;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

std::optional<std::string> http_fetch(const std::string& url) {
    auto scheme = url.find("://");
    if (scheme == std::string::npos) return std::nullopt;
    auto path_start = url.find('/', scheme + 3);
    if (path_start == std::string::npos) return std::nullopt;
    httplib::Client client(url.substr(0, path_start));
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(url.substr(path_start));
    if (!res || res->status != 200) return std::nullopt;
    return res->body;
}

std::string cache_dir_for(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("LOSQ_CACHE_DIR"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/losq";
    return ".losq-cache";
}

struct TriangleArgs {
    std::string name;
    long long rows = 6;
    long long p = 0;
    long long j = 0;
    std::string format = "table";
};

bool needs_p(const std::string& name) {
    return name == "epsilon" || name == "lambda" || name == "e_mod_p" || name == "L_mod_p";
}

int emit_integer_triangle(const Triangle<Integer>& t, const std::string& format) {
    if (format == "table") {
        std::cout << render_table(t);
    } else if (format == "csv") {
        std::cout << render_csv(t);
    } else {
        std::vector<Integer> values = oeis::linearize(t, oeis::SequenceView{oeis::ViewKind::rows, 0});
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << i << " " << to_string(values[i]) << "\n";
    }
    return 0;
}

int run_triangle(const TriangleArgs& a) {
    if (a.rows < 0) return usage_error("--rows must be >= 0");
    auto n = static_cast<std::size_t>(a.rows);
    if (needs_p(a.name)) {
        if (a.p < 2) return usage_error("--p (>= 2) is required for " + a.name);
        if (a.j < 0 || a.j >= a.p) return usage_error("--j must satisfy 0 <= j < p");
    }
    auto p = static_cast<std::size_t>(a.p);

    if (a.name == "epsilon" || a.name == "lambda") {
        if (a.format == "bfile") return usage_error("b-file output needs integer entries; pick e_mod_p or L_mod_p");
        Triangle<ResiduePoly> t = a.name == "epsilon" ? epsilon_table(n, p) : lambda_table(n, p);
        std::cout << (a.format == "csv" ? render_csv(t) : render_table(t));
        return 0;
    }

    Triangle<Integer> t = [&] {
        if (a.name == "e") return e_o_tables(n).even;
        if (a.name == "o") return e_o_tables(n).odd;
        if (a.name == "L") return L_tables(n).l;
        if (a.name == "Lbar") return L_tables(n).lbar;
        if (a.name == "qbinom_minus1")
            return Triangle<Integer>::build(n, "qbinom(-1)", [](std::size_t nn, std::size_t kk) {
                return qbinom_at_minus1(static_cast<long long>(nn), static_cast<long long>(kk));
            });
        auto j = static_cast<std::size_t>(a.j);
        Triangle<ResiduePoly> r = a.name == "e_mod_p" ? epsilon_table(n, p) : lambda_table(n, p);
        return Triangle<Integer>::build(n, a.name, [&](std::size_t nn, std::size_t kk) {
            return r.at(nn, kk).coeff(j);
        });
    }();
    return emit_integer_triangle(t, a.format);
}

struct VerifyArgs {
    std::string id;
    long long max_n = 14;
    std::vector<long long> primes = {3, 5, 7};
};

int run_verify(const VerifyArgs& a) {
    std::vector<CheckReport> reports;
    if (a.id == "all")
        reports = identity_battery(a.max_n, a.primes);
    else
        reports.push_back(run_identity_check(a.id, a.max_n, a.primes));
    bool all_pass = true;
    for (const CheckReport& r : reports) {
        std::cout << to_line(r) << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

struct SeriesArgs {
    std::string name;
    long long terms = 10;
    long long k = 0;
    long long p = 0;
};

RationalGF eo_denominator(bool plus_sign) {
    // (1 -- (1+x)z)(1 -+ (1-x^2)z^2)
    UniPoly tail(Var::x, {1, 0, -1});
    if (plus_sign) tail = -tail;
    return {Poly<UniPoly>(), one_minus(UniPoly(Var::x, {1, 1}), 1) * one_minus(tail, 2)};
}

int run_series(const SeriesArgs& a) {
    if (a.terms < 0) return usage_error("--terms must be >= 0");
    if (a.k < 0) return usage_error("--k must be >= 0");
    auto terms = static_cast<std::size_t>(a.terms);
    long long k = a.k;
    std::vector<UniPoly> out;

    if (a.name == "2.5" || a.name == "2.6" || a.name == "2.7" || a.name == "3.11") {
        RationalGF gf;
        if (a.name == "2.5") {
            gf = eo_denominator(false);
            gf.num = Poly<UniPoly>(Var::z, {UniPoly::constant(Var::none, 1), -UniPoly(Var::x, {0, 1}),
                                            -UniPoly(Var::x, {1, 0, -1})});
        } else if (a.name == "2.6") {
            gf = eo_denominator(false);
            gf.num = Poly<UniPoly>(Var::z, {UniPoly(), UniPoly(Var::x, {0, 1})});
        } else if (a.name == "2.7") {
            gf = eo_denominator(true);
            gf.num = Poly<UniPoly>(Var::z, {UniPoly::constant(Var::none, 1), -UniPoly::constant(Var::none, 1),
                                            -UniPoly(Var::x, {-1, 0, 1})});
        } else {
            gf.den = one_minus(UniPoly(Var::x, {1, 1}), 1) * one_minus(UniPoly(Var::x, {1, 0, 1}), 2);
            gf.num = Poly<UniPoly>(Var::z, {UniPoly::constant(Var::none, 1), UniPoly(), -UniPoly(Var::x, {1, 1, 1})});
        }
        out = series_expand(gf, terms);
    } else if (a.name == "2.11" || a.name == "2.12") {
        bool odd_col = a.name == "2.12";
        long long col = odd_col ? 2 * k + 1 : 2 * k;
        const UniPoly one = UniPoly::constant(Var::none, 1);
        RationalGF first{with_scalar_coeffs(UniPoly::monomial(Var::z, 1, static_cast<std::size_t>(col))),
                         poly_pow(one_minus(one, 1), static_cast<unsigned long long>(col + 1))};
        std::vector<Integer> numb(static_cast<std::size_t>(col) + 2);
        numb[static_cast<std::size_t>(col)] = 1;
        if (!odd_col) numb[static_cast<std::size_t>(col) + 1] = 1;  // (1+z) factor only in the even case
        RationalGF second{with_scalar_coeffs(UniPoly(Var::z, numb)),
                          poly_pow(one_minus(one, 2), static_cast<unsigned long long>(k + 1))};
        auto sa = series_expand(first, terms);
        auto sb = series_expand(second, terms);
        bool minus = odd_col ? k % 2 == 0 : k % 2 == 1;  // (-1)^{k+1} vs (-1)^k
        for (std::size_t n = 0; n <= terms; ++n)
            out.push_back(div_coeffs(minus ? sa[n] - sb[n] : sa[n] + sb[n], 2));
    } else if (a.name == "2.13" || a.name == "3.12") {
        bool use_e = a.name == "3.12" || k % 4 == 0 || k % 4 == 3;
        UniPoly g = retagged(use_e ? e_poly(k) : o_poly(k), Var::z);
        UniPoly den = poly_pow(UniPoly(Var::z, {1, -1}), static_cast<unsigned long long>(k + 1)) *
                      poly_pow(UniPoly(Var::z, {1, 1}), static_cast<unsigned long long>(k));
        RationalGF gf{with_scalar_coeffs(shifted(g, static_cast<std::size_t>(k))), with_scalar_coeffs(den)};
        out = series_expand(gf, terms);
    } else if (a.name == "3.13") {
        long long half = k / 2;
        long long lrow = k % 2 ? 2 * half + 3 : 2 * half + 2;
        long long minus_pow = k % 2 ? 2 * half + 3 : 2 * half + 1;
        UniPoly den = poly_pow(UniPoly(Var::z, {1, -1}), static_cast<unsigned long long>(minus_pow)) *
                      poly_pow(UniPoly(Var::z, {1, 0, 1}), static_cast<unsigned long long>(half + 1));
        RationalGF gf{with_scalar_coeffs(
                          shifted(substitute(L_poly(lrow), UniPoly(Var::z, {0, -1})), static_cast<std::size_t>(k))),
                      with_scalar_coeffs(den)};
        out = series_expand(gf, terms);
    } else if (a.name == "4.29") {
        if (a.p < 3 || !is_prime(a.p)) return usage_error("4.29 needs --p set to an odd prime");
        std::vector<UniPoly> b = b_polys(a.p);
        std::vector<Integer> xp(static_cast<std::size_t>(a.p) + 1);
        xp[0] = 1;
        xp[static_cast<std::size_t>(a.p)] = 1;
        RationalGF first{Poly<UniPoly>::constant(Var::z, UniPoly::constant(Var::none, 1)),
                         one_minus(UniPoly(Var::x, {1, 1}), 1)};
        RationalGF second{Poly<UniPoly>(Var::z, b), one_minus(UniPoly(Var::x, xp), static_cast<std::size_t>(a.p))};
        auto sa = series_expand(first, terms);
        auto sb = series_expand(second, terms);
        for (std::size_t n = 0; n <= terms; ++n) out.push_back(div_coeffs(sa[n] + sb[n], a.p));
    } else {
        return usage_error("unknown generating function: " + a.name);
    }

    for (const UniPoly& c : out) std::cout << to_string(c) << "\n";
    return 0;
}

struct OeisArgs {
    std::string source;
    std::string id;
    long long rows = 40;
    std::string view = "rows";
    long long k = 0;
    bool fetch = false;
    std::string file;
    std::string cache_dir;
    bool offline = false;
};

std::vector<Integer> oeis_values(const OeisArgs& a) {
    auto n = static_cast<std::size_t>(a.rows);
    if (a.source == "f1") {
        LTables lt = L_tables(n);
        std::vector<Integer> vals;
        for (long long m = 0; m <= a.rows; ++m) {
            Integer t = 0;
            for (long long k = 0; 2 * k <= m - 1; ++k) t += lt.l.at_or_zero(m - 1 - k, k);
            vals.push_back(t);
        }
        return vals;
    }
    Triangle<Integer> t = [&] {
        if (a.source == "e") return e_o_tables(n).even;
        if (a.source == "o") return e_o_tables(n).odd;
        if (a.source == "L") return L_tables(n).l;
        if (a.source == "Lbar") return L_tables(n).lbar;
        throw std::invalid_argument("unknown sequence source: " + a.source);
    }();
    oeis::SequenceView view{oeis::ViewKind::rows, 0};
    if (a.view == "column")
        view = {oeis::ViewKind::column, a.k};
    else if (a.view == "diagonal")
        view = {oeis::ViewKind::diagonal, a.k};
    else if (a.view != "rows")
        throw std::invalid_argument("unknown view: " + a.view);
    return linearize(t, view);
}

int run_export(const OeisArgs& a) {
    if (a.rows < 0) return usage_error("--rows must be >= 0");
    std::vector<Integer> values = oeis_values(a);
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << i << " " << to_string(values[i]) << "\n";
    return 0;
}

int run_compare(const OeisArgs& a) {
    if (a.rows < 0) return usage_error("--rows must be >= 0");
    std::vector<Integer> ours = oeis_values(a);
    std::string text;
    if (!a.file.empty()) {
        std::ifstream in(a.file);
        if (!in) return usage_error("cannot read b-file: " + a.file);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        oeis::BFileCache cache(cache_dir_for(a.cache_dir));
        oeis::Fetcher fetcher;
        if (a.fetch && !a.offline) fetcher = &http_fetch;
        text = oeis::get_bfile_text(a.id, cache, fetcher, a.offline || !a.fetch);
    }
    oeis::BFile ref = oeis::parse_bfile(a.id, text);
    oeis::CompareResult res = oeis::compare_with_shifts(ours, ref);
    if (res.matched) {
        std::cout << a.id << ": match, shift " << (res.shift >= 0 ? "+" : "") << res.shift << ", " << res.compared
                  << " terms compared\n";
        return 0;
    }
    std::cout << a.id << ": mismatch: " << res.detail << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact triangles, q-polynomial identities, and OEIS b-file tooling"};
    app.require_subcommand(1);

    TriangleArgs tri;
    CLI::App* tri_cmd = app.add_subcommand("triangle", "print a number triangle");
    tri_cmd->add_option("name", tri.name, "e|o|L|Lbar|qbinom_minus1|epsilon|lambda|e_mod_p|L_mod_p")
        ->required()
        ->check(CLI::IsMember({"e", "o", "L", "Lbar", "qbinom_minus1", "epsilon", "lambda", "e_mod_p", "L_mod_p"}));
    tri_cmd->add_option("--rows", tri.rows, "highest row index");
    tri_cmd->add_option("--p", tri.p, "modulus for the residue triangles");
    tri_cmd->add_option("--j", tri.j, "residue class for e_mod_p / L_mod_p");
    tri_cmd->add_option("--format", tri.format)->check(CLI::IsMember({"table", "csv", "bfile"}));

    VerifyArgs ver;
    CLI::App* ver_cmd = app.add_subcommand("verify", "run identity checks");
    ver_cmd->add_option("id", ver.id, "identity id or 'all'")->required();
    ver_cmd->add_option("--max-n", ver.max_n, "range bound");
    ver_cmd->add_option("--primes", ver.primes, "odd primes for the residue checks")->delimiter(',');

    SeriesArgs ser;
    CLI::App* ser_cmd = app.add_subcommand("series", "expand a named generating function");
    ser_cmd->add_option("name", ser.name, "2.5|2.6|2.7|3.11|2.11|2.12|2.13|3.12|3.13|4.29")->required();
    ser_cmd->add_option("--terms", ser.terms, "last coefficient index");
    ser_cmd->add_option("--k", ser.k, "column/diagonal parameter");
    ser_cmd->add_option("--p", ser.p, "odd prime for 4.29");

    OeisArgs oe;
    CLI::App* oeis_cmd = app.add_subcommand("oeis", "b-file export and comparison");
    oeis_cmd->require_subcommand(1);
    CLI::App* exp_cmd = oeis_cmd->add_subcommand("export", "print a b-file for a sequence view");
    CLI::App* cmp_cmd = oeis_cmd->add_subcommand("compare", "compare a sequence view against a reference b-file");
    for (CLI::App* c : {exp_cmd, cmp_cmd}) {
        c->add_option("source", oe.source, "e|o|L|Lbar|f1")->required();
        c->add_option("--rows", oe.rows, "triangle rows (or term count for f1)");
        c->add_option("--view", oe.view)->check(CLI::IsMember({"rows", "column", "diagonal"}));
        c->add_option("--k", oe.k, "column or diagonal index");
    }
    cmp_cmd->add_option("id", oe.id, "OEIS sequence id, e.g. A034851")->required();
    cmp_cmd->add_flag("--fetch", oe.fetch, "allow network fetch");
    cmp_cmd->add_option("--file", oe.file, "read the reference b-file from a path");
    cmp_cmd->add_option("--cache-dir", oe.cache_dir, "b-file cache directory");
    cmp_cmd->add_flag("--offline", oe.offline, "forbid network, use cache only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tri_cmd->parsed()) return run_triangle(tri);
        if (ver_cmd->parsed()) return run_verify(ver);
        if (ser_cmd->parsed()) return run_series(ser);
        if (exp_cmd->parsed()) return run_export(oe);
        return run_compare(oe);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}
