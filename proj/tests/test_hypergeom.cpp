#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "secant/genfun.hpp"
#include "secant/hypergeom.hpp"

using namespace secant;

namespace {

// Independent oracle: plain re-summation of the terminating series with
// explicit Pochhammer quotients, no incremental term updates.
Rational f32_resum(const HyperParams& p, long kmax) {
    Rational total(0);
    for (long k = 0; k <= kmax; ++k) {
        Rational t = pochhammer(p.upper[0], k) * pochhammer(p.upper[1], k) * pochhammer(p.upper[2], k);
        t /= pochhammer(p.lower[0], k) * pochhammer(p.lower[1], k) * Rational(factorial_z(k));
        total += t;
    }
    return total;
}

}  // namespace

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
    CHECK(pochhammer(Rational(1), 4) == Rational(24));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
}

TEST_CASE("terminating 3F2 at unit argument") {
    CHECK(f32_unit({{Rational(0), Rational(5, 7), Rational(-3)}, {Rational(1, 3), Rational(2)}}) ==
          Rational(1));
    CHECK(f32_unit({{Rational(1), Rational(1), Rational(-1)}, {Rational(1), Rational(1)}}) ==
          Rational(0));

    HyperParams p{{Rational(-1, 2), Rational(1), Rational(-2)}, {Rational(1), Rational(1)}};
    CHECK(f32_unit(p) == f32_resum(p, 2));

    // Random terminating parameter sets against the re-summation oracle.
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4), kdist(0, 6);
    for (int i = 0; i < 60; ++i) {
        long k = kdist(rng);
        HyperParams q{{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(-k)},
                      {Rational(num(rng), den(rng)) + Rational(10), Rational(num(rng), den(rng)) + Rational(10)}};
        long kmax = k;
        for (const auto& u : q.upper)
            if (u.is_integer() && u.sign() <= 0) kmax = std::min(kmax, -u.to_long());
        CHECK(f32_unit(q) == f32_resum(q, kmax));
    }

    // Invariance under permuting upper parameters and swapping lower ones.
    HyperParams a{{Rational(-5, 2), Rational(3, 4), Rational(-4)}, {Rational(13, 2), Rational(7)}};
    HyperParams b{{Rational(-4), Rational(-5, 2), Rational(3, 4)}, {Rational(7), Rational(13, 2)}};
    CHECK(f32_unit(a) == f32_unit(b));

    CHECK_THROWS_AS(
        f32_unit({{Rational(1), Rational(2), Rational(3)}, {Rational(1), Rational(1)}}),
        std::domain_error);  // never terminates
    CHECK_THROWS_AS(
        f32_unit({{Rational(1), Rational(2), Rational(-5)}, {Rational(-2), Rational(1)}}),
        std::domain_error);  // lower Pochhammer vanishes inside the range
}

TEST_CASE("hypergeometric coefficients against the series oracle") {
    CHECK(p_hyper(PKind::Pc, 2, 8, 9) == Rational(-20));
    CHECK(p_hyper(PKind::Pgamma, 1, 8, 9) == Rational(0));
    CHECK(p_hyper(PKind::Pdelta0, 1, 8, 9) == Rational(0));

    auto series_value = [](PKind k, int d, long g, long m) {
        GenFunKind gk = k == PKind::Pc        ? GenFunKind::Pc
                        : k == PKind::Palpha  ? GenFunKind::Palpha
                        : k == PKind::Pbeta   ? GenFunKind::Pbeta
                        : k == PKind::Pgamma  ? GenFunKind::Pgamma
                                              : GenFunKind::Pdelta0;
        return p_series(gk, d + 1, g, m).coeff(d);
    };
    CHECK(p_hyper(PKind::Palpha, 3, 12, 15) == series_value(PKind::Palpha, 3, 12, 15));

    // Exactness across the whole rho = 0 verification grid, d <= 5 here
    // (the acceptance suite pushes to d <= 8).
    for (long d = 1; d <= 5; ++d) {
        for (long a = 2; a <= 4; ++a) {
            long g = 2 * a * d, m = (2 * d - 1) * (a + 1);
            for (PKind k : {PKind::Pc, PKind::Palpha, PKind::Pbeta, PKind::Pgamma, PKind::Pdelta0})
                CHECK(p_hyper(k, d, g, m) == series_value(k, d, g, m));
        }
    }

    CHECK_THROWS_AS(p_hyper(PKind::Pc, 5, 8, 9), std::domain_error);  // g - 2d < 0
}

TEST_CASE("rho-zero specialization of Pc") {
    CHECK(pc_rho_zero(2, 2) == Rational(-20));
    CHECK(pc_rho_zero(2, 1) == Rational(-3));
    CHECK(pc_rho_zero(3, 1) == Rational(-4));
    for (long a = 2; a <= 6; ++a)
        for (long d = 1; d <= 6; ++d)
            CHECK(pc_rho_zero(a, d) == p_hyper(PKind::Pc, d, 2 * a * d, (2 * d - 1) * (a + 1)));
}

TEST_CASE("nonemptiness evidence") {
    CHECK(q_sum(2, 2) > Rational(0));
    CHECK((2 - 1) / 2 == 0);  // a = 2 has a single summand
    auto rep = nonempty_check(3, 4);
    CHECK(rep.factorization_ok);
    CHECK(rep.monotone_ok);
    CHECK(rep.positive_ok);

    // Factorization at (4,3), both sides computed independently.
    Rational lhs = -pc_rho_zero(4, 3);
    Rational rhs = Rational(factorial_z(24)) /
                   (Rational(factorial_z(24 - 3 + 3)) * Rational(factorial_z(3))) * q_sum(4, 3);
    CHECK(lhs == rhs);

    for (long a = 2; a <= 10; ++a)
        for (long d : {1L, 2L, 7L, 25L})
            CHECK(nonempty_check(a, d).pass());
}
