#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "secant/hypergeom.hpp"
#include "secant/invariants.hpp"
#include "secant/rational.hpp"

namespace secant {

/// Degree N of the covering from the space of linear series to the moduli
/// stack: g! prod_{i=1}^s i! / prod_{i=0}^s (g-m+s+i)!.
inline Rational covering_degree(long g, long s, long m) {
    if (g - m + s < 0)
        throw std::domain_error("covering_degree: factorial argument g-m+s = " +
                                std::to_string(g - m + s) + " is negative");
    Rational num(factorial_z(g));
    for (long i = 1; i <= s; ++i) num *= Rational(factorial_z(i));
    Rational den(1);
    for (long i = 0; i <= s; ++i) den *= Rational(factorial_z(g - m + s + i));
    return num / den;
}

inline Rational xi(long g, long s, long m) {
    if (g - m + 2 * s + 1 == 0)
        throw std::domain_error("xi: singular parameter g-m+2s+1 = 0");
    return Rational(3 * (g - 1)) +
           Rational((s - 1) * (g + s + 1) * (3 * g - 2 * m + s - 3), g - m + 2 * s + 1);
}

/// Image of a tautological class under the pushforward to the moduli stack,
/// as a pair of coefficients on (lambda, delta0). The omega-square class
/// never appears separately: it is 12 lambda - delta0 on moduli. Boundary
/// classes delta_i (i >= 1) and psi are dropped throughout.
struct GysinImage {
    Rational lambda_coeff, delta0_coeff;
};

enum class TautClass { alpha, beta, c };

inline GysinImage gysin(TautClass cls, long g, long s, long m) {
    if (g == 1 || g == 2)
        throw std::domain_error("gysin: singular parameter g = " + std::to_string(g));
    const Rational N = covering_degree(g, s, m);
    const Rational g1(g - 1), g2(g - 2);
    switch (cls) {
        case TautClass::alpha: {
            Rational l = Rational(m) * N * Rational(g * m - 2 * g * g + 8 * m - 8 * g + 4) / (g1 * g2);
            Rational d0 = Rational(m) * N * Rational(2 * g * g - g * m + 3 * g - 4 * m - 2) /
                          (Rational(6) * g1 * g2);
            return {l, d0};
        }
        case TautClass::beta: {
            Rational l = Rational(6 * m) * N / g1;
            Rational d0 = -Rational(m) * N / (Rational(2) * g1);
            return {l, d0};
        }
        case TautClass::c: {
            const Rational x = xi(g, s, m);
            Rational l = N * (-Rational(g + 3) * x + Rational(5 * s * (s + 2))) / (Rational(2) * g1 * g2);
            Rational d0 = N * (Rational(g + 1) * x - Rational(3 * s * (s + 2))) / (Rational(12) * g1 * g2);
            return {l, d0};
        }
    }
    throw std::invalid_argument("gysin: unknown class");
}

/// The same pushforwards specialized to the rho = 0, r = 1 grid, written as
/// closed rational expressions in (a, d). Must agree with gysin() on the grid.
inline GysinImage gysin_rho_zero(TautClass cls, long a, long d) {
    const RhoZeroPoint p = rho_zero_point(a, d);
    const Rational N = covering_degree(p.g, p.s, p.m);
    const Rational wide = Rational((2 * d - 1) * (a + 1));
    const Rational den1 = Rational(2 * a * d - 1) * Rational(a * d - 1);
    switch (cls) {
        case TautClass::alpha: {
            Rational l = -N * wide *
                         Rational((2 * a * a - 2 * a) * d * d + (a * a + a - 8) * d + 4 * a + 2) / den1;
            Rational d0 = N * wide *
                          Rational((2 * a * a - 2 * a) * d * d + (a * a - 4) * d + 2 * a + 1) /
                          (Rational(6) * den1);
            return {l, d0};
        }
        case TautClass::beta: {
            Rational l = Rational(6) * N * wide / Rational(2 * a * d - 1);
            Rational d0 = -N * wide / Rational(2 * (2 * a * d - 1));
            return {l, d0};
        }
        case TautClass::c: {
            const Rational den2 = Rational(2 * d + a) * den1;
            Rational l = -N * Rational(2 * d - 1) *
                         Rational((2 * a * a * a - 2 * a) * d * d * d +
                                  (a * a * a + 6 * a * a - a - 8) * d * d +
                                  (3 * a * a + 2 * a - 4) * d + a) /
                         den2;
            Rational d0 = N * Rational(2 * d - 1) * Rational(d) *
                          Rational((2 * a * a * a - 2 * a) * d * d +
                                   (a * a * a + 4 * a * a - a - 4) * d + 2 * a * a - 2) /
                          (Rational(6) * den2);
            return {l, d0};
        }
    }
    throw std::invalid_argument("gysin_rho_zero: unknown class");
}

/// The secant-plane divisor class b_lambda lambda - b_0 delta0 - b_1 delta_1
/// - b_2 delta_2 on the moduli space, for the (a, d) grid point. b_1 and b_2
/// come from the pencil-of-cubics relation b_lambda - 12 b_0 + b_1 = 0 and
/// the Weierstrass-pullback relation b_2 = 5/2 b_1 - b_lambda / 2.
struct DivisorClass {
    long a = 0, d = 0;
    Rational b_lambda, b_0, b_1, b_2;
};

/// Marked-Weierstrass-point divisor class on the genus-2 marked moduli space,
/// (lambda, delta0, delta1) coordinates. Recorded for reference only; just
/// the b_2 relation derived from it enters any output.
struct WeierstrassClassConstants {
    static constexpr long lambda = -1;
    static constexpr long delta0 = 3;
    static constexpr long delta1 = -1;
};

inline DivisorClass sec_class(long a, long d) {
    const RhoZeroPoint p = rho_zero_point(a, d);
    const Rational N = covering_degree(p.g, p.s, p.m);
    const Rational pa = p_hyper(PKind::Palpha, d, p.g, p.m);
    const Rational pb = p_hyper(PKind::Pbeta, d, p.g, p.m);
    const Rational pc = p_hyper(PKind::Pc, d, p.g, p.m);
    const Rational pg = p_hyper(PKind::Pgamma, d, p.g, p.m);
    const Rational pd0 = p_hyper(PKind::Pdelta0, d, p.g, p.m);
    const GysinImage ga = gysin(TautClass::alpha, p.g, p.s, p.m);
    const GysinImage gb = gysin(TautClass::beta, p.g, p.s, p.m);
    const GysinImage gc = gysin(TautClass::c, p.g, p.s, p.m);

    DivisorClass cls;
    cls.a = a;
    cls.d = d;
    cls.b_lambda = pa * ga.lambda_coeff + pb * gb.lambda_coeff + pc * gc.lambda_coeff +
                   Rational(12) * N * pg;
    Rational delta0_coeff =
        pa * ga.delta0_coeff + pb * gb.delta0_coeff + pc * gc.delta0_coeff - N * pg + N * pd0;
    cls.b_0 = -delta0_coeff;
    cls.b_1 = Rational(12) * cls.b_0 - cls.b_lambda;
    cls.b_2 = Rational(5, 2) * cls.b_1 - cls.b_lambda / Rational(2);
    if (!(cls.b_lambda - Rational(12) * cls.b_0 + cls.b_1).is_zero() ||
        cls.b_2 != Rational(5, 2) * cls.b_1 - cls.b_lambda / Rational(2))
        throw std::logic_error("sec_class: boundary-coefficient relations violated");
    return cls;
}

/// Slope b_lambda / b_0 with the comparisons that certify it: the margin over
/// the Brill-Noether slope 6 + 12/(g+1), and the two upper thresholds under
/// which b_lambda / b_0 is known to compute the divisor slope for g <= 23.
struct SlopeReport {
    long a = 0, d = 0, g = 0, s = 0, m = 0;
    DivisorClass cls;
    Rational slope;
    Rational bn_margin;          // slope - (6 + 12/(g+1))
    Rational threshold1_margin;  // slope - (6 + 11/(floor(g/2)+1)), must be <= 0
    bool threshold1_ok = false;
    bool threshold2_applies = false;  // only when g >= 20
    Rational threshold2_margin;       // slope - 88828/12870, must be <= 0 when it applies
    bool threshold2_ok = false;
    bool slope_certified = false;  // g <= 23 and thresholds hold
};

inline SlopeReport slope_report(long a, long d) {
    const RhoZeroPoint p = rho_zero_point(a, d);
    SlopeReport rep;
    rep.a = a;
    rep.d = d;
    rep.g = p.g;
    rep.s = p.s;
    rep.m = p.m;
    rep.cls = sec_class(a, d);
    if (!(rep.cls.b_0 > Rational(0)) || !(rep.cls.b_lambda > Rational(0)))
        throw std::logic_error("slope_report: expected b_lambda > 0 and b_0 > 0 at a=" +
                               std::to_string(a) + ", d=" + std::to_string(d));
    rep.slope = rep.cls.b_lambda / rep.cls.b_0;
    rep.bn_margin = rep.slope - (Rational(6) + Rational(12, p.g + 1));
    rep.threshold1_margin = rep.slope - (Rational(6) + Rational(11, p.g / 2 + 1));
    rep.threshold1_ok = !(rep.threshold1_margin > Rational(0));
    rep.threshold2_applies = p.g >= 20;
    rep.threshold2_margin = rep.slope - Rational(88828, 12870);
    rep.threshold2_ok = !rep.threshold2_applies || !(rep.threshold2_margin > Rational(0));
    rep.slope_certified = p.g <= 23 && rep.threshold1_ok && rep.threshold2_ok;
    return rep;
}

/// Virtual slope b_lambda / b_0 as a ratio of integer polynomials in d, for
/// 2 <= a <= 5. Checked against sec_class by exact evaluation at more points
/// than the degree, which certifies the rational-function identity.
struct VirtualSlopeForm {
    long a = 0;
    long num_scale = 1;
    std::vector<long> num;  // descending powers of d, before num_scale
    std::vector<long> den;

    Rational eval(long d) const {
        Rational n(0), dn(0);
        for (long c : num) n = n * Rational(d) + Rational(c);
        for (long c : den) dn = dn * Rational(d) + Rational(c);
        return Rational(num_scale) * n / dn;
    }
};

inline VirtualSlopeForm virtual_slope_closed_form(int a) {
    switch (a) {
        case 2:
            return {2, 2, {96, 80, -110, -62, 5}, {32, 8, -30, -8, 1}};
        case 3:
            return {3, 3, {9216, 15552, 5240, -6372, -5218, -1067, 69},
                    {4608, 6048, 772, -2780, -1609, -205, 21}};
        case 4:
            return {4, 2, {25920, 45360, 24387, -6006, -12143, -5213, -790, 38},
                    {8640, 12744, 4853, -2585, -3032, -1041, -105, 8}};
        case 5:
            return {5, 2,
                    {9830400, 18595840, 12571776, 958200, -3620196, -2433066, -734307, -89401, 3285},
                    {3276800, 5488640, 3012992, -174328, -1038520, -575170, -145032, -12207, 720}};
        default:
            throw std::invalid_argument("virtual_slope_closed_form: only a = 2..5 are tabulated");
    }
}

inline bool virtual_slope_check(int a, int dmax) {
    const VirtualSlopeForm form = virtual_slope_closed_form(a);
    for (long d = 1; d <= dmax; ++d) {
        const DivisorClass cls = sec_class(a, d);
        if (form.eval(d) != cls.b_lambda / cls.b_0) return false;
    }
    return true;
}

/// Leading coefficients of the large-d expansion of the virtual slope,
/// (6 S1 d + S2 + O(1/d)) / (S1 d + S3 + O(1/d)), as polynomials in a.
struct SlopeAsymptotics {
    mpz_class s1, s2, s3;
};

inline SlopeAsymptotics asymptotics(long a) {
    if (a < 2) throw std::invalid_argument("asymptotics: need a >= 2");
    auto horner = [a](std::initializer_list<long> coeffs) {
        mpz_class r = 0;
        for (long c : coeffs) r = r * a + c;
        return r;
    };
    SlopeAsymptotics s;
    s.s1 = horner({256, -1024, 1280, 0, -1280, 1024, -256, 0, 0, 0, 0});
    s.s2 = horner({384, 384, 768, -13824, 26496, -18048, 3072, 768, 0, 0, 0});
    s.s3 = horner({64, -192, 1024, -2944, 3136, -448, -1152, 512, 0, 0, 0});
    return s;
}

// (slope(a,d) - 6 - 12/(2ad+1)) * ad(a+1)/3, which tends to 1 as d grows.
inline Rational asymptotic_gap_value(long a, long d) {
    const DivisorClass cls = sec_class(a, d);
    Rational delta = cls.b_lambda / cls.b_0 - Rational(6) - Rational(12, 2 * a * d + 1);
    return delta * Rational(a * d * (a + 1), 3);
}

// Relative error of the two-term asymptotic form against the exact slope.
inline Rational asymptotic_relative_error(long a, long d) {
    const SlopeAsymptotics s = asymptotics(a);
    Rational approx = (Rational(6) * Rational(s.s1) * Rational(d) + Rational(s.s2)) /
                      (Rational(s.s1) * Rational(d) + Rational(s.s3));
    const DivisorClass cls = sec_class(a, d);
    Rational slope = cls.b_lambda / cls.b_0;
    return ((approx - slope) / slope).abs();
}

}  // namespace secant
