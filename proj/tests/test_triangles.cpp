#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "losq/render.hpp"
#include "losq/triangles.hpp"

using namespace losq;

namespace {

using Grid = std::vector<std::vector<std::string>>;

template <class E>
void require_cells(const Triangle<E>& t, const Grid& expected) {
    REQUIRE(t.max_n() + 1 == expected.size());
    for (std::size_t n = 0; n < expected.size(); ++n) {
        REQUIRE(expected[n].size() == n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            INFO("n=" << n << " k=" << k);
            REQUIRE(to_string(t.at(n, k)) == expected[n][k]);
        }
    }
}

}  // namespace

TEST_CASE("even-set counts match the printed 7x7 matrix") {
    require_cells(e_o_tables(6).even, Grid{{"1"},
                                           {"1", "0"},
                                           {"1", "1", "0"},
                                           {"1", "1", "1", "1"},
                                           {"1", "2", "2", "2", "1"},
                                           {"1", "2", "4", "6", "3", "0"},
                                           {"1", "3", "6", "10", "9", "3", "0"}});
}

TEST_CASE("odd-set counts match the printed 7x7 matrix") {
    require_cells(e_o_tables(6).odd, Grid{{"0"},
                                          {"0", "1"},
                                          {"0", "1", "1"},
                                          {"0", "2", "2", "0"},
                                          {"0", "2", "4", "2", "0"},
                                          {"0", "3", "6", "4", "2", "1"},
                                          {"0", "3", "9", "10", "6", "3", "1"}});
}

TEST_CASE("Losanitsch triangle matches the printed 7x7 matrix") {
    require_cells(L_tables(6).l, Grid{{"1"},
                                      {"1", "1"},
                                      {"1", "1", "1"},
                                      {"1", "2", "2", "1"},
                                      {"1", "2", "4", "2", "1"},
                                      {"1", "3", "6", "6", "3", "1"},
                                      {"1", "3", "9", "10", "9", "3", "1"}});
}

TEST_CASE("complement triangle matches the printed 7x7 matrix") {
    require_cells(L_tables(6).lbar, Grid{{"0"},
                                         {"0", "0"},
                                         {"0", "1", "0"},
                                         {"0", "1", "1", "0"},
                                         {"0", "2", "2", "2", "0"},
                                         {"0", "2", "4", "4", "2", "0"},
                                         {"0", "3", "6", "10", "6", "3", "0"}});
}

TEST_CASE("epsilon and lambda tables for p=2 match the printed 8x8 matrices") {
    require_cells(epsilon_table(7, 2), Grid{{"1"},
                                            {"1", "q"},
                                            {"1", "1+q", "q"},
                                            {"1", "1+2q", "1+2q", "1"},
                                            {"1", "2+2q", "2+4q", "2+2q", "1"},
                                            {"1", "2+3q", "4+6q", "6+4q", "3+2q", "q"},
                                            {"1", "3+3q", "6+9q", "10+10q", "9+6q", "3+3q", "q"},
                                            {"1", "3+4q", "9+12q", "19+16q", "19+16q", "9+12q", "3+4q", "1"}});
    require_cells(lambda_table(7, 2), Grid{{"1"},
                                           {"1", "1"},
                                           {"1", "1+q", "1"},
                                           {"1", "2+q", "2+q", "1"},
                                           {"1", "2+2q", "4+2q", "2+2q", "1"},
                                           {"1", "3+2q", "6+4q", "6+4q", "3+2q", "1"},
                                           {"1", "3+3q", "9+6q", "10+10q", "9+6q", "3+3q", "1"},
                                           {"1", "4+3q", "12+9q", "19+16q", "19+16q", "12+9q", "4+3q", "1"}});
}

TEST_CASE("epsilon and lambda tables for p=3 match the printed 7x7 matrices") {
    require_cells(epsilon_table(6, 3),
                  Grid{{"1"},
                       {"1", "q"},
                       {"1", "q+q^2", "1"},
                       {"1", "1+q+q^2", "1+q+q^2", "1"},
                       {"1", "1+2q+q^2", "2+2q+2q^2", "2+q+q^2", "q"},
                       {"1", "1+2q+2q^2", "4+3q+3q^2", "4+3q+3q^2", "1+2q+2q^2", "1"},
                       {"1", "2+2q+2q^2", "5+5q+5q^2", "8+6q+6q^2", "5+5q+5q^2", "2+2q+2q^2", "1"}});
    require_cells(lambda_table(6, 3),
                  Grid{{"1"},
                       {"1", "1"},
                       {"1", "1+q", "1"},
                       {"1", "1+q+q^2", "1+q+q^2", "1"},
                       {"1", "2+q+q^2", "2+2q+2q^2", "2+q+q^2", "1"},
                       {"1", "2+2q+q^2", "4+3q+3q^2", "4+3q+3q^2", "2+2q+q^2", "1"},
                       {"1", "2+2q+2q^2", "5+5q+5q^2", "8+6q+6q^2", "5+5q+5q^2", "2+2q+2q^2", "1"}});
}

TEST_CASE("q-binomial at q=-1 matches the printed 8x8 matrix") {
    Triangle<Integer> t = Triangle<Integer>::build(7, "qbinom(-1)", [](std::size_t n, std::size_t k) {
        return qbinom_at_minus1(static_cast<long long>(n), static_cast<long long>(k));
    });
    require_cells(t, Grid{{"1"},
                          {"1", "1"},
                          {"1", "0", "1"},
                          {"1", "1", "1", "1"},
                          {"1", "0", "2", "0", "1"},
                          {"1", "1", "2", "2", "1", "1"},
                          {"1", "0", "3", "0", "3", "0", "1"},
                          {"1", "1", "3", "3", "3", "3", "1", "1"}});
}

TEST_CASE("closed forms agree with the recursion tables") {
    EOTables eo = e_o_tables(20);
    LTables lt = L_tables(20);
    for (long long n = 0; n <= 20; ++n)
        for (long long k = 0; k <= n; ++k) {
            REQUIRE(eo.even.at_or_zero(n, k) == e_closed(n, k));
            REQUIRE(lt.l.at_or_zero(n, k) == L_closed(n, k));
            REQUIRE(lt.l.at_or_zero(n, k) + lt.lbar.at_or_zero(n, k) == binomial(n, k));
        }
    REQUIRE(column_composition_check(20));
}

TEST_CASE("triangle container semantics") {
    LTables lt = L_tables(4);
    REQUIRE(lt.l.max_n() == 4);
    REQUIRE(lt.l.provenance() == "L:two-step-recursion");
    REQUIRE(lt.lbar.provenance() == "Lbar:binomial-complement");
    REQUIRE_THROWS_AS(lt.l.at(5, 0), std::out_of_range);
    REQUIRE_THROWS_AS(lt.l.at(3, 4), std::out_of_range);
    REQUIRE(lt.l.at_or_zero(3, 4) == 0);
    REQUIRE(lt.l.at_or_zero(-1, 0) == 0);
    REQUIRE(lt.l.cells().size() == 15);
}

TEST_CASE("residue extraction operations") {
    REQUIRE(e_residue(5, 2, 0, 3) == 4);
    REQUIRE(e_residue(5, 2, 1, 3) == 3);
    REQUIRE(e_residue(5, 2, 2, 3) == 3);
    REQUIRE(L_residue(5, 2, 0, 3) == 4);
    REQUIRE(L_residue(5, 2, 1, 3) == 3);
    REQUIRE(L_residue(6, 3, 0, 3) == 8);
    REQUIRE(e_residue(3, 1, 0, 3) == 1);  // Losert slice at p=3
    REQUIRE_THROWS_AS(e_residue(5, 2, 3, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(e_residue(5, 2, 0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(e_residue(2, 3, 0, 3), std::invalid_argument);
}

TEST_CASE("rendering conventions") {
    LTables lt = L_tables(3);
    REQUIRE(render_table(lt.l) == "1 0 0 0\n1 1 0 0\n1 1 1 0\n1 2 2 1\n");
    REQUIRE(render_csv(lt.l) == "1\n1,1\n1,1,1\n1,2,2,1\n");
}

TEST_CASE("qbinom_at_minus1 guards") {
    REQUIRE_THROWS_AS(qbinom_at_minus1(3, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(qbinom_at_minus1(3, -1), std::invalid_argument);
    REQUIRE(qbinom_at_minus1(6, 3) == 0);
    REQUIRE(qbinom_at_minus1(6, 2) == 3);
}
