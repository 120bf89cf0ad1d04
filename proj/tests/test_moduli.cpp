#include <catch2/catch_amalgamated.hpp>

#include "secant/moduli.hpp"

using namespace secant;

TEST_CASE("covering degree and xi") {
    CHECK(covering_degree(8, 3, 9) == Rational(14));
    CHECK(xi(8, 3, 9) == Rational(45));
    CHECK_THROWS_AS(covering_degree(8, 3, 13), std::domain_error);  // g - m + s < 0
    // Positive integers across the grid.
    for (long a = 2; a <= 6; ++a) {
        for (long d = 1; d <= 8; ++d) {
            auto p = rho_zero_point(a, d);
            Rational n = covering_degree(p.g, p.s, p.m);
            CHECK(n.is_integer());
            CHECK(n > Rational(0));
        }
    }
}

TEST_CASE("gysin pushforward images") {
    auto gb = gysin(TautClass::beta, 8, 3, 9);
    CHECK(gb.lambda_coeff == Rational(108));
    CHECK(gb.delta0_coeff == Rational(-9));
    CHECK_THROWS_AS(gysin(TautClass::alpha, 2, 3, 9), std::domain_error);

    // The closed (a, d) forms and the general formulas agree on the grid.
    for (long a = 2; a <= 6; ++a) {
        for (long d = 1; d <= 10; ++d) {
            auto p = rho_zero_point(a, d);
            for (TautClass c : {TautClass::alpha, TautClass::beta, TautClass::c}) {
                auto lhs = gysin(c, p.g, p.s, p.m);
                auto rhs = gysin_rho_zero(c, a, d);
                CHECK(lhs.lambda_coeff == rhs.lambda_coeff);
                CHECK(lhs.delta0_coeff == rhs.delta0_coeff);
            }
        }
    }
}

TEST_CASE("divisor classes and slopes on the tabulated rows") {
    auto c22 = sec_class(2, 2);
    CHECK(c22.b_lambda / c22.b_0 == Rational(22, 3));
    CHECK((c22.b_lambda - Rational(12) * c22.b_0 + c22.b_1).is_zero());
    CHECK(c22.b_2 == Rational(5, 2) * c22.b_1 - c22.b_lambda / Rational(2));

    struct Row {
        long a, d, g, s, m;
        Rational bn_margin, t1_margin;
        bool has_t2;
        Rational t2_margin;
    };
    const Row rows[] = {
        {2, 2, 8, 3, 9, Rational(0), Rational(-13, 15), false, Rational(0)},
        {3, 2, 12, 3, 12, Rational(693, 12389), Rational(-3952, 6671), false, Rational(0)},
        {4, 2, 16, 3, 15, Rational(756, 13379), Rational(-3257, 7083), false, Rational(0)},
        {5, 2, 20, 3, 18, Rational(1539, 30247), Rational(-1632, 4321), true,
         Rational(-7775369, 27805635)},
        {2, 3, 12, 5, 15, Rational(308, 6539), Rational(-2117, 3521), false, Rational(0)},
        {3, 3, 18, 5, 20, Rational(32232, 596239), Rational(-130031, 313810), false, Rational(0)},
        {2, 4, 16, 7, 21, Rational(2520, 46427), Rational(-11357, 24579), false, Rational(0)},
        {2, 5, 20, 9, 27, Rational(2508, 47159), Rational(-2529, 6737), true,
         Rational(-12023068, 43352595)},
    };
    for (const auto& row : rows) {
        auto rep = slope_report(row.a, row.d);
        CHECK(rep.g == row.g);
        CHECK(rep.s == row.s);
        CHECK(rep.m == row.m);
        CHECK(rep.bn_margin == row.bn_margin);
        CHECK(rep.threshold1_margin == row.t1_margin);
        CHECK(rep.threshold1_ok);
        if (row.has_t2) {
            CHECK(rep.threshold2_applies);
            CHECK(rep.threshold2_margin == row.t2_margin);
            CHECK(rep.threshold2_ok);
        }
        CHECK(rep.slope_certified);
    }
}

TEST_CASE("positivity of the leading coefficients") {
    for (long a = 2; a <= 6; ++a) {
        for (long d = 1; d <= 12; ++d) {
            auto cls = sec_class(a, d);
            CHECK(cls.b_lambda > Rational(0));
            CHECK(cls.b_0 > Rational(0));
        }
    }
}

TEST_CASE("virtual slope closed forms") {
    auto f2 = virtual_slope_closed_form(2);
    CHECK(f2.num_scale * f2.num[0] == 192);
    CHECK(f2.eval(2) == Rational(3234, 441));
    CHECK(f2.eval(2) == Rational(22, 3));
    auto f3 = virtual_slope_closed_form(3);
    auto c32 = sec_class(3, 2);
    CHECK(f3.eval(2) == c32.b_lambda / c32.b_0);
    CHECK_THROWS_AS(virtual_slope_closed_form(6), std::invalid_argument);

    for (int a = 2; a <= 5; ++a) CHECK(virtual_slope_check(a, 8));
}

TEST_CASE("slope asymptotics") {
    auto s = asymptotics(2);
    CHECK(s.s1 == 12288);
    CHECK(s.s2 == 190464);
    CHECK(s.s3 == 24576);
    // (S2 - 6 S3)/S1 = 7/2 matches the d^-1 term of the a = 2 closed form.
    CHECK(Rational(mpz_class(s.s2 - 6 * s.s3)) / Rational(s.s1) == Rational(7, 2));

    for (long a = 2; a <= 4; ++a) {
        CHECK(asymptotic_relative_error(a, 50) <= Rational(1, 100));
        Rational v = asymptotic_gap_value(a, 1000);
        CHECK(v >= Rational(95, 100));
        CHECK(v <= Rational(105, 100));
    }
}
