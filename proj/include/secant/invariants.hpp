#pragma once

#include <stdexcept>
#include <string>

namespace secant {

// Brill-Noether number of a g^s_m on a genus-g curve.
inline long rho(long g, long s, long m) { return g - (s + 1) * (g - m + s); }

// Expected dimension of the space of d-secant (d-r-1)-planes on a fixed series.
inline long mu(long d, long r, long s) { return d - r * (s + 1 - d + r); }

/// Parameters of a secant-plane counting problem. For the r=1 divisor case
/// (mu = -1) the series dimension is forced to s = 2d-1, and the rho = 0
/// specialization is the one-parameter grid g = 2ad, m = (2d-1)(a+1).
struct ProblemContext {
    long d = 1;
    long r = 1;
    long s = 1;
    long g = 0;
    long m = 1;

    void validate() const {
        if (d < 1 || r < 1 || s < 1 || g < 0 || m < 1)
            throw std::invalid_argument("ProblemContext: parameters out of range");
        if (r == 1 && mu(d, r, s) == -1 && s != 2 * d - 1)
            throw std::invalid_argument("ProblemContext: r=1, mu=-1 forces s = 2d-1");
    }
};

/// The rho = 0, r = 1 grid point indexed by (a, d), a >= 2.
struct RhoZeroPoint {
    long a, d, g, s, m;
};

inline RhoZeroPoint rho_zero_point(long a, long d) {
    if (a < 2 || d < 1)
        throw std::invalid_argument("rho_zero_point: need a >= 2, d >= 1 (a=1 series are canonical)");
    RhoZeroPoint p;
    p.a = a;
    p.d = d;
    p.s = 2 * d - 1;
    p.g = 2 * a * d;
    p.m = (2 * d - 1) * (a + 1);
    return p;
}

}  // namespace secant
