#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "secant/invariants.hpp"
#include "secant/rational.hpp"

namespace secant {

// Rising factorial x(x+1)...(x+k-1); the empty product is 1.
inline Rational pochhammer(const Rational& x, long k) {
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= x + Rational(i);
    return r;
}

/// Parameters of a terminating 3F2 at unit argument. At least one upper
/// parameter must be a nonpositive integer; the summation length is the
/// smallest modulus among those.
struct HyperParams {
    std::array<Rational, 3> upper;
    std::array<Rational, 2> lower;
};

inline long termination_length(const HyperParams& p) {
    std::optional<long> k;
    for (const auto& a : p.upper) {
        if (a.is_integer() && a.sign() <= 0) {
            long v = -a.to_long();
            if (!k || v < *k) k = v;
        }
    }
    if (!k) throw std::domain_error("f32_unit: no nonpositive-integer upper parameter, series does not terminate");
    return *k;
}

inline Rational f32_unit(const HyperParams& p) {
    long kmax = termination_length(p);
    // Guard against vanishing lower Pochhammers inside the summation range.
    for (const auto& b : p.lower) {
        if (b.is_integer() && b.sign() <= 0 && -b.to_long() < kmax)
            throw std::domain_error("f32_unit: lower parameter " + b.to_string() +
                                    " makes the Pochhammer vanish at k = " + std::to_string(-b.to_long() + 1));
    }
    Rational sum(0), term(1);
    for (long k = 0; k < kmax; ++k) {
        sum += term;
        Rational num = (p.upper[0] + Rational(k)) * (p.upper[1] + Rational(k)) * (p.upper[2] + Rational(k));
        Rational den = (p.lower[0] + Rational(k)) * (p.lower[1] + Rational(k)) * Rational(k + 1);
        term *= num / den;
    }
    return sum + term;
}

enum class PKind { Pc, Palpha, Pbeta, Pgamma, Pdelta0 };

inline const char* pkind_name(PKind k) {
    switch (k) {
        case PKind::Pc: return "Pc";
        case PKind::Palpha: return "Palpha";
        case PKind::Pbeta: return "Pbeta";
        case PKind::Pgamma: return "Pgamma";
        case PKind::Pdelta0: return "Pdelta0";
    }
    return "?";
}

namespace detail {

// x! for the prefactor ratios; rejects negative arguments by name so domain
// violations surface instead of extrapolating.
inline Rational fact_checked(long x, const char* what) {
    if (x < 0)
        throw std::domain_error(std::string("p_hyper: factorial argument ") + what + " = " +
                                std::to_string(x) + " is negative");
    return Rational(factorial_z(x));
}

}  // namespace detail

/// Exact hypergeometric evaluation of the five tautological coefficients at
/// integer (g, m), valid where every factorial argument is nonnegative (the
/// rho = 0 grid g = 2ad, m = (2d-1)(a+1), a >= 2 in particular). For the
/// gamma/delta0 families the d = 2 case drops the first summand and d = 1
/// gives zero.
inline Rational p_hyper(PKind which, long d, long g, long m) {
    using detail::fact_checked;
    if (d < 1) throw std::invalid_argument("p_hyper: d must be >= 1");
    const Rational q = Rational(m - g, 2);  // m/2 - g/2
    const Rational gh = Rational(g, 2);     // g/2
    auto F = [&](Rational a1, Rational a2, Rational a3, Rational b1, Rational b2) {
        return f32_unit(HyperParams{{a1, a2, a3}, {b1, b2}});
    };
    const Rational A1 = q + Rational(1 - d);            // -g/2 + m/2 + 1 - d
    const Rational A2 = q + Rational(3 - 2 * d, 2);     // -g/2 + (m+3)/2 - d
    const Rational A2m = q + Rational(1 - 2 * d, 2);    // -g/2 + (m+1)/2 - d
    const Rational B1 = Rational(g + 1 - 2 * d, 2);     // (g+1)/2 - d
    const Rational B2 = gh + Rational(1 - d);           // g/2 + 1 - d
    const Rational B2m = gh - Rational(d);              // g/2 - d
    const Rational B3 = Rational(g + 3 - 2 * d, 2);     // (g+3)/2 - d

    switch (which) {
        case PKind::Pc: {
            Rational pre = fact_checked(g, "g") * fact_checked(2 * g - 2 - m, "2g-2-m") /
                           (fact_checked(g - 2 * d, "g-2d") * fact_checked(d, "d") *
                            fact_checked(2 * g - 2 - m + d, "2g-2-m+d"));
            return -pre * F(A1, A2, Rational(-d), B1, B2);
        }
        case PKind::Palpha: {
            Rational pre1 = fact_checked(g, "g") * fact_checked(2 * g - 2 - m, "2g-2-m") /
                            (Rational(2) * fact_checked(g - 2 * d, "g-2d") * fact_checked(d, "d") *
                             fact_checked(2 * g - 2 - m + d, "2g-2-m+d"));
            Rational pre2 = fact_checked(g - 1, "g-1") * fact_checked(2 * g - 2 - m, "2g-2-m") /
                            (Rational(2) * fact_checked(g - 2 * d - 1, "g-2d-1") * fact_checked(d, "d") *
                             fact_checked(2 * g - 2 - m + d, "2g-2-m+d"));
            return pre1 * F(A1, A2, Rational(-d), B1, B2) - pre2 * F(A1, A2m, Rational(-d), B1, B2m);
        }
        case PKind::Pbeta: {
            Rational pre1 = Rational(2) * fact_checked(g - 2, "g-2") * fact_checked(2 * g - 2 - m, "2g-2-m") /
                            (fact_checked(g - 2 * d, "g-2d") * fact_checked(d - 1, "d-1") *
                             fact_checked(2 * g - 3 - m + d, "2g-3-m+d"));
            Rational pre2 = Rational(2) * fact_checked(g - 1, "g-1") * fact_checked(2 * g - 1 - m, "2g-1-m") /
                            (fact_checked(g + 1 - 2 * d, "g+1-2d") * fact_checked(d - 1, "d-1") *
                             fact_checked(2 * g - 2 - m + d, "2g-2-m+d"));
            return pre1 * F(A1, A2, Rational(1 - d), B1, B2) - pre2 * F(A1, A2, Rational(1 - d), B2, B3);
        }
        case PKind::Pgamma:
        case PKind::Pdelta0: {
            if (d == 1) return Rational(0);
            const bool gamma = (which == PKind::Pgamma);
            Rational sum(0);
            if (d >= 3) {
                Rational pre = Rational(8) * fact_checked(g - 5, "g-5") * fact_checked(2 * g - 1 - m, "2g-1-m") /
                               (Rational(3) * fact_checked(g + 1 - 2 * d, "g+1-2d") * fact_checked(d - 3, "d-3") *
                                fact_checked(2 * g - m + d - 4, "2g-m+d-4"));
                sum += pre * F(A1, A2, Rational(3 - d), B2, B3);
            }
            {
                Rational c = gamma ? Rational(7) : Rational(1);
                Rational pre = c * fact_checked(g - 2, "g-2") * fact_checked(2 * g - 1 - m, "2g-1-m") /
                               (Rational(12) * fact_checked(g - 2 * d, "g-2d") * fact_checked(d - 1, "d-1") *
                                fact_checked(2 * g - 2 - m + d, "2g-2-m+d"));
                sum -= pre * F(A1, A2m, Rational(1 - d), B1, B2);
            }
            {
                Rational c = gamma ? Rational(3) : Rational(1);
                Rational pre = c * fact_checked(g - 5, "g-5") * fact_checked(2 * g - 1 - m, "2g-1-m") /
                               (fact_checked(g - 1 - 2 * d, "g-1-2d") * fact_checked(d - 2, "d-2") *
                                fact_checked(2 * g - 3 - m + d, "2g-3-m+d"));
                sum += pre * F(q - Rational(d), A2m, Rational(2 - d), B1, B2m);
            }
            {
                Rational c = gamma ? Rational(7) : Rational(1);
                Rational pre = c * fact_checked(g - 5, "g-5") * fact_checked(2 * g - 1 - m, "2g-1-m") /
                               (Rational(12) * fact_checked(g - 3 - 2 * d, "g-3-2d") * fact_checked(d - 1, "d-1") *
                                fact_checked(2 * g - 2 - m + d, "2g-2-m+d"));
                sum += pre * F(q - Rational(2 * d + 1, 2), q - Rational(d + 1), Rational(1 - d),
                               gh - Rational(d + 1), Rational(g - 1 - 2 * d, 2));
            }
            return sum;
        }
    }
    throw std::invalid_argument("p_hyper: unknown kind");
}

/// Pc on the rho = 0 grid as a single hypergeometric expression in (a, d).
inline Rational pc_rho_zero(long a, long d) {
    if (a < 2 || d < 1) throw std::invalid_argument("pc_rho_zero: need a >= 2, d >= 1");
    Rational pre = Rational(factorial_z(2 * a * d)) * Rational(factorial_z(2 * a * d - 2 * d + a - 1)) /
                   (Rational(factorial_z(2 * a * d - 2 * d)) * Rational(factorial_z(d)) *
                    Rational(factorial_z(2 * a * d - d + a - 1)));
    Rational f = f32_unit(HyperParams{{Rational(1 - a, 2), Rational(2 - a, 2), Rational(-d)},
                                      {Rational(2 * a * d + 1 - 2 * d, 2), Rational(a * d + 1 - d)}});
    return -pre * f;
}

// i-th summand of the alternating factorial sum Q(a,d); the falling
// factorials vanish once i exceeds d, which also ends the nonzero range.
inline Rational q_sum_term(long a, long d, long i) {
    mpz_class t = falling_factorial_z((2 * a - 2) * d + a - 1, a - 1 - 2 * i);
    t *= falling_factorial_z(d, i);
    t *= falling_factorial_z(a - 1, 2 * i);
    Rational r = Rational(t) / Rational(factorial_z(i));
    return (i % 2 == 0) ? r : -r;
}

inline Rational q_sum(long a, long d) {
    if (a < 2 || d < 1) throw std::invalid_argument("q_sum: need a >= 2, d >= 1");
    Rational q(0);
    for (long i = 0; i <= (a - 1) / 2; ++i) q += q_sum_term(a, d, i);
    return q;
}

/// Nonemptiness evidence at one grid point: the factorization
/// -Pc(a,d) = (2ad)! / ((2ad-d+a-1)! d!) Q(a,d), strictly decreasing
/// summand moduli (zero tail allowed), and Q(a,d) > 0.
struct NonemptyReport {
    long a = 0, d = 0;
    Rational q;
    bool factorization_ok = false;
    bool monotone_ok = false;
    bool positive_ok = false;
    bool pass() const { return factorization_ok && monotone_ok && positive_ok; }
};

inline NonemptyReport nonempty_check(long a, long d) {
    NonemptyReport rep;
    rep.a = a;
    rep.d = d;
    rep.q = q_sum(a, d);
    Rational scale = Rational(factorial_z(2 * a * d)) /
                     (Rational(factorial_z(2 * a * d - d + a - 1)) * Rational(factorial_z(d)));
    rep.factorization_ok = (-pc_rho_zero(a, d) == scale * rep.q);
    rep.monotone_ok = true;
    for (long i = 0; i < (a - 1) / 2; ++i) {
        Rational cur = q_sum_term(a, d, i).abs();
        Rational nxt = q_sum_term(a, d, i + 1).abs();
        if (cur.is_zero() ? !nxt.is_zero() : !(cur > nxt)) {
            rep.monotone_ok = false;
            break;
        }
    }
    rep.positive_ok = rep.q.sign() > 0;
    return rep;
}

}  // namespace secant
