#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "parsep/error.hpp"
#include "parsep/family.hpp"
#include "parsep/series.hpp"

using namespace parsep;

TEST_CASE("euler_inverse_even") {
    const Series s = euler_inverse_even(20);
    CHECK(s[0] == 1);
    CHECK(s[3] == 0);
    CHECK(s[8] == 5);
    const auto p = oracle::partition_numbers(10);
    for (int k = 0; k <= 20; ++k) CHECK(s[k] == (k % 2 == 0 ? p[k / 2] : mpz_class(0)));
}

TEST_CASE("theta_squares") {
    const Series t = theta_squares(20);
    CHECK(t[0] == 1);
    CHECK(t[9] == 1);
    CHECK(t[8] == 0);
    CHECK(t[16] == 1);
}

TEST_CASE("mul and invert") {
    Series a(4), b(4);
    a[0] = 1;
    a[1] = 1;
    b[0] = 1;
    b[1] = -1;
    Series expect(4);
    expect[0] = 1;
    expect[2] = -1;
    CHECK(series_mul(a, b) == expect);

    const Series e = euler_product_even(60);
    CHECK(e.coeffs() == oracle::euler_even_product_by_subsets(60));
    CHECK(series_invert(e) == euler_inverse_even(60));
    CHECK(series_mul(e, series_invert(e)) == Series::one(60));
    CHECK(series_mul(a, series_invert(a)) == Series::one(4));

    Series bad(3);
    bad[0] = 2;
    CHECK_THROWS_AS(series_invert(bad), DomainError);
}

TEST_CASE("binomial factor") {
    Series s = Series::one(6);
    s.mul_one_minus_qk(2);
    CHECK(s == Series::binomial(6, 2));
    CHECK_THROWS_AS(s.mul_one_minus_qk(0), DomainError);
}

TEST_CASE("generating functions match the family counts up to 200") {
    const Series eu = series_p_eu_od(200);
    const Series od = series_p_od_eu(200);
    const CountTable ceu = count_table(families::eu_od, 200);
    const CountTable cod = count_table(families::od_eu, 200);
    CHECK(eu[0] == 1);
    CHECK(eu[5] == 2);
    CHECK(od[0] == 1);
    CHECK(od[5] == 3);
    for (int k = 0; k <= 200; ++k) {
        INFO("k=", k);
        CHECK(eu[k] == ceu.counts[k]);
        CHECK(od[k] == cod.counts[k]);
    }
}

TEST_CASE("difference series coefficients") {
    const Series d = diff_series(100);
    CHECK(d[0] == 0);
    const std::vector<std::pair<int, int>> expected{{1, 0},   {2, 0},   {3, -1},  {4, 0},   {5, -1},  {6, 0},
                                                    {7, -2},  {8, -1},  {9, -2},  {10, 0},  {11, -4}, {12, -1},
                                                    {13, -4}, {14, 0},  {15, -8}, {16, 0},  {17, -8}, {18, 2},
                                                    {50, 816}, {51, 18}};
    for (const auto& [k, v] : expected) {
        INFO("k=", k);
        CHECK(d[k] == v);
    }
}

TEST_CASE("difference is positive on 50..1000") {
    const Series d = diff_series(1000);
    for (int k = 50; k <= 1000; ++k) {
        INFO("k=", k);
        CHECK(d[k] > 0);
    }
}

TEST_CASE("series CSV") {
    std::ostringstream out;
    write_series_csv(out, theta_squares(4));
    CHECK(out.str() == "k,coefficient\n0,1\n1,1\n2,0\n3,0\n4,1\n");
}
