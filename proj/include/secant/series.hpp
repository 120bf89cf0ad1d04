#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "secant/multipoly.hpp"
#include "secant/rational.hpp"

namespace secant {

// Coefficient-ring glue for the series engine. The same engine runs over
// Rational and over sparse polynomial rings.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_unit(const Rational& x) { return !x.is_zero(); }
    static Rational inverse(const Rational& x) { return x.inverse(); }
};

template <int N>
struct RingTraits<MultiPoly<N>> {
    static MultiPoly<N> zero() { return MultiPoly<N>(); }
    static MultiPoly<N> one() { return MultiPoly<N>(Rational(1)); }
    static MultiPoly<N> from_rational(const Rational& q) { return MultiPoly<N>(q); }
    // Units of the polynomial ring are the nonzero constants.
    static bool is_unit(const MultiPoly<N>& x) { return x.is_constant() && !x.is_zero(); }
    static MultiPoly<N> inverse(const MultiPoly<N>& x) {
        if (!is_unit(x)) throw std::domain_error("MultiPoly: inverse of non-unit");
        return MultiPoly<N>(x.constant_term().inverse());
    }
};

/// Formal power series in z truncated at a fixed order: coefficients are
/// stored for z^0 .. z^(order-1). Every operation respects the truncation,
/// so [z^k] of a result never depends on input terms at exponent >= order.
template <class R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(check_order(order), RingTraits<R>::zero()) {}

    static TruncatedSeries constant(const R& x, int order) {
        TruncatedSeries s(order);
        s.c_[0] = x;
        return s;
    }
    static TruncatedSeries one(int order) { return constant(RingTraits<R>::one(), order); }

    int order() const { return static_cast<int>(c_.size()); }
    const R& coeff(int k) const { return c_.at(k); }
    void set_coeff(int k, const R& x) { c_.at(k) = x; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k < r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k < r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries r(order());
        for (int k = 0; k < order(); ++k) r.c_[k] = RingTraits<R>::zero() - c_[k];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i < r.order(); ++i) {
            if (is_zero_coeff(a.c_[i])) continue;
            for (int j = 0; i + j < r.order(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& s) {
        TruncatedSeries r(a.order());
        R rs = RingTraits<R>::from_rational(s);
        for (int k = 0; k < r.order(); ++k) r.c_[k] = a.c_[k] * rs;
        return r;
    }
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) { return a * s; }

    // Division by a series whose constant term is a unit of the ring.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a * b.inverse();
    }

    TruncatedSeries inverse() const {
        if (!RingTraits<R>::is_unit(c_[0]))
            throw std::domain_error("TruncatedSeries: constant term is not invertible in the coefficient ring");
        TruncatedSeries r(order());
        R u = RingTraits<R>::inverse(c_[0]);
        r.c_[0] = u;
        for (int k = 1; k < order(); ++k) {
            R acc = RingTraits<R>::zero();
            for (int j = 1; j <= k; ++j) acc = acc + c_[j] * r.c_[k - j];
            r.c_[k] = RingTraits<R>::zero() - u * acc;
        }
        return r;
    }

    TruncatedSeries pow_int(long e) const {
        if (e < 0) return inverse().pow_int(-e);
        TruncatedSeries r = one(order());
        TruncatedSeries base = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    // Multiplication by z^k (shift up, truncating the tail).
    TruncatedSeries shift_up(int k = 1) const {
        TruncatedSeries r(order());
        for (int i = 0; i + k < order(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    // Formal d/dz; output order shrinks by one.
    TruncatedSeries derive() const {
        if (order() == 1) return TruncatedSeries(1);
        TruncatedSeries r(order() - 1);
        for (int k = 1; k < order(); ++k) r.c_[k - 1] = c_[k] * RingTraits<R>::from_rational(Rational(k));
        return r;
    }

    // z d/dz, keeping the order (coefficient k scales by k).
    TruncatedSeries z_derive() const {
        TruncatedSeries r(order());
        for (int k = 1; k < order(); ++k) r.c_[k] = c_[k] * RingTraits<R>::from_rational(Rational(k));
        return r;
    }

    static TruncatedSeries exp(const TruncatedSeries& a) {
        if (!is_zero_coeff(a.c_[0]))
            throw std::domain_error("TruncatedSeries: exp requires zero constant term");
        // exp(f)' = f' exp(f) gives the coefficient recursion
        // k r_k = sum_{j=1..k} j a_j r_{k-j}.
        TruncatedSeries r = one(a.order());
        for (int k = 1; k < a.order(); ++k) {
            R acc = RingTraits<R>::zero();
            for (int j = 1; j <= k; ++j)
                acc = acc + a.c_[j] * r.c_[k - j] * RingTraits<R>::from_rational(Rational(j));
            r.c_[k] = acc * RingTraits<R>::from_rational(Rational(1, k));
        }
        return r;
    }

private:
    static int check_order(int order) {
        if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
        return order;
    }
    static bool is_zero_coeff(const R& x) {
        if constexpr (std::is_same_v<R, Rational>)
            return x.is_zero();
        else
            return x.is_zero();
    }

    std::vector<R> c_;
};

using RationalSeries = TruncatedSeries<Rational>;
using BivarSeries = TruncatedSeries<BivarPoly>;

// Generalized binomial coefficient (q choose n) for rational q.
inline Rational binomial_q(const Rational& q, int n) {
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= (q - Rational(i)) / Rational(i + 1);
    return r;
}

/// (1 + c z)^q expanded to the given order, exact for any rational exponent.
inline RationalSeries series_binomial_pow(long c, const Rational& q, int order) {
    RationalSeries s(order);
    Rational cn(1);
    for (int n = 0; n < order; ++n) {
        s.set_coeff(n, binomial_q(q, n) * cn);
        cn *= Rational(c);
    }
    return s;
}

}  // namespace secant
