#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "secant/multipoly.hpp"
#include "secant/rational.hpp"

namespace secant {

/// Diagonal-calculus oracle: expands the Porteous determinant for the
/// corank-one degeneracy locus as the complete homogeneous sum
/// h_n(y_1, ..., y_d) with y_j = l_j - Delta_j, Delta_j = sum_{i<j} D_{i,j},
/// then pushes the monomials to numbers with the diagonal rewriting rules.
/// Fixed mode works on the d-th power of a single curve (n = d); family mode
/// works on the relative d-th power of a one-parameter family with smooth
/// fibers (n = d + 1).
enum class DiagMode { fixed, family };

constexpr int kMaxDiagVertices = 8;

/// One monomial in small diagonals D_{i,j}, line-bundle classes l_i, relative
/// dualizing classes w_i (family) and fiber point classes pt_i (fixed), with
/// an integer scalar times m^m_pow times (2g-2)^w_pow in front. Vertices are
/// 0-based. Total degree (edges + exponents) is conserved by every rewrite.
struct DiagMonomial {
    std::array<std::pair<std::uint8_t, std::uint8_t>, kMaxDiagVertices> edges{};
    std::uint8_t n_edges = 0;
    std::array<std::uint8_t, kMaxDiagVertices> l_exp{};
    std::array<std::uint8_t, kMaxDiagVertices> omega_exp{};
    std::array<std::uint8_t, kMaxDiagVertices> pt_exp{};
    long coeff = 1;
    std::uint8_t m_pow = 0;
    std::uint8_t w_pow = 0;

    void add_edge(int i, int j) {
        if (i > j) std::swap(i, j);
        edges[n_edges++] = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
    }
    void sort_edges() { std::sort(edges.begin(), edges.begin() + n_edges); }

    int degree() const {
        int deg = n_edges;
        for (int v = 0; v < kMaxDiagVertices; ++v) deg += l_exp[v] + omega_exp[v] + pt_exp[v];
        return deg;
    }

    auto key() const { return std::tie(edges, n_edges, l_exp, omega_exp, pt_exp, m_pow, w_pow); }
    friend bool operator<(const DiagMonomial& a, const DiagMonomial& b) { return a.key() < b.key(); }
    bool same_structure(const DiagMonomial& o) const { return key() == o.key(); }
};

struct ClassExpression {
    int d = 0;
    DiagMode mode = DiagMode::fixed;
    std::vector<DiagMonomial> terms;

    // Sorts edges within monomials, then merges structurally equal monomials.
    void canonicalize() {
        for (auto& t : terms) t.sort_edges();
        std::sort(terms.begin(), terms.end());
        std::vector<DiagMonomial> merged;
        for (const auto& t : terms) {
            if (!merged.empty() && merged.back().same_structure(t)) {
                merged.back().coeff += t.coeff;
                if (merged.back().coeff == 0) merged.pop_back();
            } else {
                merged.push_back(t);
            }
        }
        terms = std::move(merged);
    }
};

/// Desk-scale expansion bounds. These are configuration: term counts grow as
/// compositions of the target degree times per-factor branching, so the
/// defaults keep single runs in seconds.
struct DiagBounds {
    int fixed_max_d = 6;
    int family_max_d = 4;
};

namespace detail {

struct UnionFind {
    std::array<std::uint8_t, kMaxDiagVertices> parent{};
    void init(int n) {
        for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // Smaller label becomes the representative.
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a > b) std::swap(a, b);
        parent[b] = a;
    }
};

inline double expansion_size_estimate(int d, DiagMode mode) {
    int target = mode == DiagMode::fixed ? d : d + 1;
    double total = 0, comp = 1;
    // Crude bound: compositions of the target times the worst branching d^target.
    for (int i = 1; i < d; ++i) comp = comp * (target + i) / i;
    for (int i = 0; i < target; ++i) comp *= d;
    total += comp;
    return total;
}

inline void check_bound(int d, DiagMode mode, const DiagBounds& bounds) {
    int limit = mode == DiagMode::fixed ? bounds.fixed_max_d : bounds.family_max_d;
    limit = std::min(limit, kMaxDiagVertices - 1);
    if (d < 1) throw std::invalid_argument("diagcalc: d must be >= 1");
    if (d > limit)
        throw std::domain_error("diagcalc: d = " + std::to_string(d) + " exceeds the configured bound " +
                                std::to_string(limit) + " (~" +
                                std::to_string(static_cast<long long>(expansion_size_estimate(d, mode))) +
                                " raw monomials)");
}

// Enumerates the expansion of h_target(y_1..y_d), emitting every ordered
// choice of l_j / -D_{i,j} per copy of y_j. Ordered choices reproduce the
// binomial and multinomial expansion weights with unit coefficients.
template <class Fn>
void expand_stream(int d, DiagMode mode, const Fn& emit) {
    const int target = mode == DiagMode::fixed ? d : d + 1;
    const int l_cap = mode == DiagMode::fixed ? 1 : 2;
    std::vector<int> comp(static_cast<std::size_t>(d), 0);

    DiagMonomial mono;

    // Expands factor j (0-based) with comp[j] copies, then recurses.
    std::function<void(int, int, int)> factor = [&](int j, int copies_left, int l_used) {
        if (copies_left == 0) {
            if (j + 1 < d) {
                factor(j + 1, comp[j + 1], 0);
            } else {
                emit(mono);
            }
            return;
        }
        if (l_used < l_cap) {
            mono.l_exp[j] += 1;
            factor(j, copies_left - 1, l_used + 1);
            mono.l_exp[j] -= 1;
        }
        for (int i = 0; i < j; ++i) {
            mono.add_edge(i, j);
            mono.coeff = -mono.coeff;
            factor(j, copies_left - 1, l_used);
            mono.coeff = -mono.coeff;
            mono.n_edges -= 1;
        }
    };

    // Compositions (i_1..i_d) of the target degree; y_1 has no diagonal part,
    // so its exponent is capped by the l cap.
    std::function<void(int, int)> compose = [&](int j, int remaining) {
        if (j == d - 1) {
            comp[j] = remaining;
            factor(0, comp[0], 0);
            return;
        }
        for (int i = 0; i <= remaining; ++i) {
            comp[j] = i;
            compose(j + 1, remaining - i);
        }
    };
    for (int i0 = 0; i0 <= std::min(l_cap, target); ++i0) {
        comp[0] = i0;
        if (d == 1) {
            if (i0 == target) factor(0, comp[0], 0);
        } else {
            compose(1, target - i0);
        }
    }
}

// Applies the rewriting rules to one monomial. Edges are processed in the
// stored order; an edge whose endpoints are already identified is a
// self-intersection after transitive relabeling, so it rewrites to -w on the
// component representative (family) or to -(2g-2) times a point class
// (fixed). The retained edges form a forest.
inline DiagMonomial reduce_monomial(const DiagMonomial& in, int d, DiagMode mode) {
    DiagMonomial out = in;
    UnionFind uf;
    uf.init(d);
    out.n_edges = 0;
    for (int e = 0; e < in.n_edges; ++e) {
        int a = uf.find(in.edges[e].first);
        int b = uf.find(in.edges[e].second);
        if (a == b) {
            out.coeff = -out.coeff;
            if (mode == DiagMode::family) {
                out.omega_exp[a] += 1;
            } else {
                out.w_pow += 1;
                out.pt_exp[a] += 1;
            }
        } else {
            out.add_edge(a, b);
            uf.unite(a, b);
        }
    }
    // Rename classes to component representatives.
    DiagMonomial named = out;
    named.l_exp = {};
    named.omega_exp = {};
    named.pt_exp = {};
    std::array<std::uint8_t, kMaxDiagVertices> comp_size{};
    for (int v = 0; v < d; ++v) comp_size[uf.find(v)] += 1;
    for (int v = 0; v < d; ++v) {
        int r = uf.find(v);
        named.l_exp[r] += out.l_exp[v];
        named.omega_exp[r] += out.omega_exp[v];
        named.pt_exp[r] += out.pt_exp[v];
    }
    if (mode == DiagMode::fixed) {
        // l restricted to a positive-dimensional diagonal locus is m times a
        // point class there.
        for (int v = 0; v < d; ++v) {
            if (named.l_exp[v] > 0 && comp_size[v] > 1) {
                named.m_pow += named.l_exp[v];
                named.pt_exp[v] += named.l_exp[v];
                named.l_exp[v] = 0;
            }
        }
    }
    return named;
}

struct ComponentView {
    UnionFind uf;
    int d;
    void build(const DiagMonomial& mono, int dd) {
        d = dd;
        uf.init(d);
        for (int e = 0; e < mono.n_edges; ++e) uf.unite(mono.edges[e].first, mono.edges[e].second);
    }
};

}  // namespace detail

/// Full expansion of the homogeneous sum; desk scale only.
inline ClassExpression porteous_expand(int d, DiagMode mode, const DiagBounds& bounds = {}) {
    detail::check_bound(d, mode, bounds);
    ClassExpression expr;
    expr.d = d;
    expr.mode = mode;
    detail::expand_stream(d, mode, [&](const DiagMonomial& m) { expr.terms.push_back(m); });
    expr.canonicalize();
    return expr;
}

/// Rewrites every monomial to normal form. A nonzero seed shuffles each
/// monomial's edge order first; evaluations must not depend on the order
/// (the confluence property), only intermediate labels may.
inline ClassExpression reduce(const ClassExpression& expr, std::uint64_t edge_order_seed = 0) {
    ClassExpression out;
    out.d = expr.d;
    out.mode = expr.mode;
    out.terms.reserve(expr.terms.size());
    std::mt19937_64 rng(edge_order_seed);
    for (const auto& t : expr.terms) {
        DiagMonomial s = t;
        if (edge_order_seed != 0)
            std::shuffle(s.edges.begin(), s.edges.begin() + s.n_edges, rng);
        out.terms.push_back(detail::reduce_monomial(s, expr.d, expr.mode));
    }
    out.canonicalize();
    return out;
}

namespace detail {

// (2g-2)^k as a polynomial in g.
inline BivarPoly two_g_minus_two_pow(int k) {
    BivarPoly base = Rational(2) * var_g() - BivarPoly(2);
    BivarPoly r(1);
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

inline BivarPoly assemble(const std::map<std::pair<int, int>, mpz_class>& acc, long d) {
    BivarPoly total;
    for (const auto& [key, count] : acc) {
        if (count == 0) continue;
        BivarPoly term = BivarPoly::variable(0, key.first) * Rational(count);
        total += term * two_g_minus_two_pow(key.second);
    }
    return total / Rational(factorial_z(d));
}

}  // namespace detail

namespace detail {

// Pushforward of one normal-form monomial on the fixed curve: nonzero iff
// each component of the vertex set carries exactly one point-degree class;
// a bare l integrates to m, a point class to 1.
struct FixedAccumulator {
    int d;
    std::map<std::pair<int, int>, mpz_class> acc;

    explicit FixedAccumulator(int dd) : d(dd) {}

    void add(const DiagMonomial& mono) {
        ComponentView cv;
        cv.build(mono, d);
        int m_extra = 0;
        std::array<int, kMaxDiagVertices> ones{};
        for (int v = 0; v < d; ++v) {
            int r = cv.uf.find(v);
            ones[r] += mono.l_exp[v] + mono.pt_exp[v];
        }
        for (int v = 0; v < d; ++v) {
            if (cv.uf.find(v) != v) continue;
            if (ones[v] != 1) return;  // wrong dimension, integrates to zero
            if (mono.l_exp[v] == 1) m_extra += 1;
        }
        acc[{mono.m_pow + m_extra, mono.w_pow}] += mono.coeff;
    }

    BivarPoly result() const { return assemble(acc, d); }
};

// Pushforward of one normal-form monomial over a one-dimensional base:
// exactly one component carries surface degree two (the alpha / beta / gamma
// bucket for l^2 / lw / w^2), every other carries fiber degree one and
// integrates to m (l) or 2g-2 (w).
struct FamilyAccumulator {
    int d;
    std::map<std::pair<int, int>, mpz_class> acc_a, acc_b, acc_g;

    explicit FamilyAccumulator(int dd) : d(dd) {}

    void add(const DiagMonomial& mono) {
        ComponentView cv;
        cv.build(mono, d);
        std::array<int, kMaxDiagVertices> l_deg{}, w_deg{};
        for (int v = 0; v < d; ++v) {
            int r = cv.uf.find(v);
            l_deg[r] += mono.l_exp[v];
            w_deg[r] += mono.omega_exp[v];
        }
        int bucket = -1;  // 0 = alpha, 1 = beta, 2 = gamma
        int m_extra = 0, w_extra = 0;
        for (int v = 0; v < d; ++v) {
            if (cv.uf.find(v) != v) continue;
            int deg = l_deg[v] + w_deg[v];
            if (deg == 1) {
                (l_deg[v] == 1 ? m_extra : w_extra) += 1;
            } else if (deg == 2 && bucket == -1) {
                bucket = (l_deg[v] == 2) ? 0 : (l_deg[v] == 1 ? 1 : 2);
            } else {
                return;  // wrong degree distribution, integrates to zero
            }
        }
        if (bucket == -1) return;
        auto& acc = bucket == 0 ? acc_a : (bucket == 1 ? acc_b : acc_g);
        acc[{mono.m_pow + m_extra, mono.w_pow + w_extra}] += mono.coeff;
    }
};

}  // namespace detail

struct FamilyCoeffs {
    BivarPoly p_alpha, p_beta, p_gamma;
};

/// Evaluates an expression already in normal form (output of reduce).
inline BivarPoly evaluate_fixed_expression(const ClassExpression& reduced) {
    detail::FixedAccumulator acc(reduced.d);
    for (const auto& t : reduced.terms) acc.add(t);
    return acc.result();
}

inline FamilyCoeffs evaluate_family_expression(const ClassExpression& reduced) {
    detail::FamilyAccumulator acc(reduced.d);
    for (const auto& t : reduced.terms) acc.add(t);
    return FamilyCoeffs{detail::assemble(acc.acc_a, reduced.d), detail::assemble(acc.acc_b, reduced.d),
                        detail::assemble(acc.acc_g, reduced.d)};
}

/// Number of secant planes on a fixed curve, divided by d! for the ordering
/// of the d-tuple. Equals the z^d coefficient of the count series. Streams
/// the expansion, so nothing is materialized.
inline BivarPoly evaluate_fixed(int d, const DiagBounds& bounds = {}) {
    detail::check_bound(d, DiagMode::fixed, bounds);
    detail::FixedAccumulator acc(d);
    detail::expand_stream(d, DiagMode::fixed, [&](const DiagMonomial& raw) {
        acc.add(detail::reduce_monomial(raw, d, DiagMode::fixed));
    });
    return acc.result();
}

/// The (P_alpha, P_beta, P_gamma) coefficient polynomials for incidence
/// degree d, from the family-mode pushforward divided by d!.
inline FamilyCoeffs evaluate_family(int d, const DiagBounds& bounds = {}) {
    detail::check_bound(d, DiagMode::family, bounds);
    detail::FamilyAccumulator acc(d);
    detail::expand_stream(d, DiagMode::family, [&](const DiagMonomial& raw) {
        acc.add(detail::reduce_monomial(raw, d, DiagMode::family));
    });
    return FamilyCoeffs{detail::assemble(acc.acc_a, d), detail::assemble(acc.acc_b, d),
                        detail::assemble(acc.acc_g, d)};
}

}  // namespace secant
