#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "losq/battery.hpp"
#include "losq/families.hpp"

using namespace losq;

namespace {

UniPoly truncated(const UniPoly& f, std::size_t below) {
    std::vector<Integer> c;
    for (std::size_t i = 0; i < below; ++i) c.push_back(f.coeff(i));
    return UniPoly(f.var(), std::move(c));
}

// independent oracle: the truncated Euler product prod_{m>=1} (1 - q^m)
UniPoly euler_product(std::size_t below) {
    UniPoly prod = UniPoly::constant(Var::q, 1);
    for (std::size_t m = 1; m < below; ++m) {
        std::vector<Integer> factor(m + 1);
        factor[0] = 1;
        factor[m] = -1;
        prod = truncated(prod * UniPoly(Var::q, std::move(factor)), below);
    }
    return prod;
}

}  // namespace

TEST_CASE("full identity battery passes at the reference configuration") {
    std::vector<CheckReport> reports = identity_battery(14, {3, 5, 7});
    std::vector<std::string> ids = battery_ids();
    REQUIRE(reports.size() == ids.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        INFO(to_line(reports[i]));
        REQUIRE(reports[i].id == ids[i]);
        REQUIRE(reports[i].pass);
    }
}

TEST_CASE("battery catalog covers the required identities") {
    std::vector<std::string> ids = battery_ids();
    std::set<std::string> have(ids.begin(), ids.end());
    REQUIRE(have.size() == ids.size());  // no duplicate ids
    for (const char* required :
         {"1.1",  "2.2",  "2.3",  "2.5",  "2.6",  "2.7",  "2.8",  "2.9",  "2.10", "2.11",    "2.12",
          "2.13", "3.2",  "3.3",  "3.5",  "3.7",  "3.8",  "3.9",  "3.10", "3.11", "3.12",    "3.13",
          "3.14", "4.3",  "4.4",  "4.5",  "4.6",  "4.9",  "4.10", "4.11", "4.12", "4.15",    "4.16",
          "4.17", "4.18", "4.19", "4.20", "4.21", "4.22", "4.23", "4.24", "4.25", "4.26",    "4.27",
          "4.28", "4.29", "4.30", "4.31", "4.32", "4.4a", "thm3.2", "thm4.1", "thm5.3", "prop3.1",
          "prop4.4", "prop5.2", "losert", "bracelet"})
        REQUIRE(have.count(required) == 1);
}

TEST_CASE("flagged printed-form checks pass against corrected forms with a note") {
    CheckReport gf = run_identity_check("3.13", 14, {});
    REQUIRE(gf.pass);
    REQUIRE(gf.detail != "ok");
    REQUIRE(gf.detail.find("per-parity") != std::string::npos);
    CheckReport period = run_identity_check("prop4.4", 14, {});
    REQUIRE(period.pass);
    REQUIRE(period.detail.find("zero") != std::string::npos);
}

TEST_CASE("battery input validation") {
    REQUIRE_THROWS_AS(run_identity_check("bogus", 5, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(identity_battery(5, {4}), std::invalid_argument);
    REQUIRE_THROWS_AS(identity_battery(-1, {}), std::invalid_argument);
}

TEST_CASE("report serialization is tab separated") {
    CheckReport r{"x", "n<=3", true, "ok"};
    REQUIRE(to_line(r) == "x\tn<=3\tpass\tok");
    r.pass = false;
    r.detail = "n=2: lhs=1 rhs=2";
    REQUIRE(to_line(r) == "x\tn<=3\tfail\tn=2: lhs=1 rhs=2");
}

TEST_CASE("small polynomial family values") {
    REQUIRE(e_poly(5) == UniPoly(Var::x, {1, 2, 4, 6, 3}));
    REQUIRE(o_poly(5) == UniPoly(Var::x, {0, 3, 6, 4, 2, 1}));
    REQUIRE(L_poly(5) == UniPoly(Var::x, {1, 3, 6, 6, 3, 1}));
    REQUIRE(Lbar_poly(6) == UniPoly(Var::x, {0, 3, 6, 10, 6, 3, 0}));
    REQUIRE(rogers_szego(2) ==
            XPolyOverQ(Var::x, {UniPoly::constant(Var::q, 1), UniPoly(Var::q, {1, 1}), UniPoly::constant(Var::q, 1)}));
    REQUIRE(q_newton(2) ==
            XPolyOverQ(Var::x, {UniPoly::constant(Var::q, 1), UniPoly(Var::q, {0, 1, 1}), UniPoly::monomial(Var::q, 1, 3)}));
}

TEST_CASE("q-Fibonacci seeds and first polynomials") {
    REQUIRE(q_fibonacci(0).is_zero());
    REQUIRE(q_fibonacci(1) == XPolyOverQ::constant(Var::s, UniPoly::constant(Var::q, 1)));
    REQUIRE(q_fibonacci(2) == XPolyOverQ::constant(Var::s, UniPoly::constant(Var::q, 1)));
    REQUIRE(q_fibonacci(3) == XPolyOverQ(Var::s, {UniPoly::constant(Var::q, 1), UniPoly::constant(Var::q, 1)}));
    REQUIRE(q_fibonacci(4) == XPolyOverQ(Var::s, {UniPoly::constant(Var::q, 1), UniPoly(Var::q, {1, 1})}));
}

TEST_CASE("pentagonal partial sums: printed values and product oracle") {
    REQUIRE(pentagonal_f(9) == UniPoly(Var::q, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
    REQUIRE(pentagonal_f(8) == pentagonal_f(7));
    for (long long n = 2; n <= 30; ++n) {
        auto below = static_cast<std::size_t>(n - 1);
        INFO("n=" << n);
        REQUIRE(truncated(pentagonal_f(n), below) == euler_product(below));
    }
}

TEST_CASE("pentagonal reduction is 12-periodic") {
    for (long long n = 0; n <= 40; ++n) REQUIRE(pentagonal_phi(n + 12) == pentagonal_phi(n));
    REQUIRE(pentagonal_phi(3) == ResiduePoly(2, {1, -1}));
    REQUIRE(pentagonal_phi(6).is_zero());
}

TEST_CASE("general e polynomials and b polynomials") {
    REQUIRE(general_e_poly(0, 3) == UniPoly::constant(Var::x, 1));
    REQUIRE(general_e_poly(5, 3) == UniPoly(Var::x, {1, 1, 4, 4, 1, 1}));
    std::vector<UniPoly> b3 = b_polys(3);
    REQUIRE(b3.size() == 3);
    REQUIRE(b3[0] == UniPoly::constant(Var::x, 2));
    for (long long p : {3LL, 5LL}) {
        std::vector<UniPoly> b = b_polys(p);
        for (long long i = 0; i < p; ++i) REQUIRE(b[i].degree() == i);
    }
    REQUIRE_THROWS_AS(b_polys(4), std::invalid_argument);
    REQUIRE_THROWS_AS(general_e_poly(3, 2), std::invalid_argument);
}

TEST_CASE("battery clamps enumeration checks at the oracle bound") {
    CheckReport r = run_identity_check("4.8", 30, {});
    REQUIRE(r.pass);
    REQUIRE(r.range.find("14") != std::string::npos);
}
