#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "secant/rational.hpp"

namespace secant {

template <int N>
struct Monomial {
    std::array<int, N> e{};

    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    // Lex order on exponent vectors; the map key order below is total.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < N; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator+(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < N; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    Monomial operator-(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < N; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
};

/// Sparse polynomial in N variables with Rational coefficients.
/// Zero coefficients are never stored.
template <int N>
class MultiPoly {
public:
    using Term = std::pair<Monomial<N>, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational& c) { add_term(Monomial<N>{}, c); }
    MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(int idx, int power = 1) {
        Monomial<N> mo;
        mo.e[idx] = power;
        MultiPoly p;
        p.add_term(mo, Rational(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
    }
    Rational constant_term() const {
        auto it = terms_.find(Monomial<N>{});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [mo, c] : terms_) d = std::max(d, mo.degree());
        return d;
    }
    int degree_in(int var) const {
        int d = 0;
        for (const auto& [mo, c] : terms_) d = std::max(d, mo.e[var]);
        return d;
    }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial<N>, Rational>& terms() const { return terms_; }

    void add_term(const Monomial<N>& mo, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(mo, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const Monomial<N>& mo) const {
        auto it = terms_.find(mo);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [mo, c] : b.terms_) r.add_term(mo, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [mo, c] : b.terms_) r.add_term(mo, -c);
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [mo, c] : terms_) r.terms_.emplace(mo, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const Rational& s) {
        MultiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [mo, c] : a.terms_) r.terms_.emplace(mo, c * s);
        return r;
    }
    friend MultiPoly operator*(const Rational& s, const MultiPoly& a) { return a * s; }
    friend MultiPoly operator/(const MultiPoly& a, const Rational& s) { return a * s.inverse(); }

    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    Rational eval(const std::array<Rational, N>& x) const {
        Rational r(0);
        for (const auto& [mo, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < N; ++i)
                if (mo.e[i] != 0) t *= pow(x[i], mo.e[i]);
            r += t;
        }
        return r;
    }

    // Substitutes a rational value for one variable, keeping the others.
    MultiPoly eval_partial(int var, const Rational& x) const {
        MultiPoly r;
        for (const auto& [mo, c] : terms_) {
            Monomial<N> m2 = mo;
            m2.e[var] = 0;
            r.add_term(m2, c * pow(x, mo.e[var]));
        }
        return r;
    }

    // Substitutes var -> var + shift.
    MultiPoly shift_var(int var, const Rational& shift) const {
        MultiPoly r;
        for (const auto& [mo, c] : terms_) {
            int k = mo.e[var];
            for (int j = 0; j <= k; ++j) {
                Monomial<N> m2 = mo;
                m2.e[var] = j;
                r.add_term(m2, c * Rational(binomial_z(k, j)) * pow(shift, k - j));
            }
        }
        return r;
    }

    // Exact division; nullopt when the divisor does not divide exactly.
    // Lex leading-term elimination, so it needs no assumptions on the divisor.
    static std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
        if (b.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
        MultiPoly rem = a, quot;
        const auto& [lead_mo, lead_c] = *b.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& [rm, rc] = *rem.terms_.rbegin();
            if (!lead_mo.divides(rm)) return std::nullopt;
            Monomial<N> q = rm - lead_mo;
            Rational qc = rc / lead_c;
            quot.add_term(q, qc);
            MultiPoly sub;
            for (const auto& [mo, c] : b.terms_) sub.add_term(mo + q, c * qc);
            rem = rem - sub;
        }
        return quot;
    }

    std::string to_string(const std::array<std::string, N>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Print highest monomials first.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [mo, c] = *it;
            Rational ac = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            bool printed = false;
            if (!(ac == Rational(1)) || mo.degree() == 0) {
                os << ac.to_string();
                printed = true;
            }
            for (int i = 0; i < N; ++i) {
                if (mo.e[i] == 0) continue;
                if (printed) os << "*";
                os << names[i];
                if (mo.e[i] > 1) os << "^" << mo.e[i];
                printed = true;
            }
        }
        return os.str();
    }

private:
    std::map<Monomial<N>, Rational> terms_;
};

/// Polynomials in (m, g): variable 0 is the degree m, variable 1 the genus g.
using BivarPoly = MultiPoly<2>;

inline BivarPoly var_m() { return BivarPoly::variable(0); }
inline BivarPoly var_g() { return BivarPoly::variable(1); }

inline std::string to_string_mg(const BivarPoly& p) { return p.to_string({"m", "g"}); }

}  // namespace secant
