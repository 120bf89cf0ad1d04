#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "secant/genfun.hpp"
#include "secant/multipoly.hpp"
#include "secant/rational.hpp"
#include "secant/series.hpp"

namespace secant {

/// Labeled-graph enumeration backing the connected-count identities: spanning
/// trees and d-edged connected spanning multigraphs of the complete graph on
/// d vertices, weighted by indegree factorials resp. multinomials. Edges are
/// oriented toward their larger endpoint, so indeg(j) counts edges (i, j)
/// with i < j; that is the only convention under which the small-d hand
/// counts match the identities.
namespace graphcomb {

using Edge = std::pair<int, int>;  // (i, j) with i < j, 0-based

namespace detail {

inline std::vector<Edge> prufer_decode(const std::vector<int>& seq, int d) {
    std::vector<int> deg(static_cast<std::size_t>(d), 1);
    for (int s : seq) deg[s] += 1;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(d) - 1);
    std::vector<bool> used(static_cast<std::size_t>(d), false);
    for (int s : seq) {
        int leaf = -1;
        for (int v = 0; v < d; ++v) {
            if (deg[v] == 1 && !used[v]) {
                leaf = v;
                break;
            }
        }
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        used[leaf] = true;
        deg[leaf] -= 1;
        deg[s] -= 1;
    }
    int u = -1, v = -1;
    for (int w = 0; w < d; ++w) {
        if (deg[w] == 1 && !used[w]) (u < 0 ? u : v) = w;
    }
    edges.emplace_back(u, v);
    return edges;
}

template <class Fn>
void for_each_tree(int d, const Fn& fn) {
    if (d == 1) {
        fn(std::vector<Edge>{});
        return;
    }
    if (d == 2) {
        fn(std::vector<Edge>{{0, 1}});
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(d) - 2, 0);
    while (true) {
        fn(prufer_decode(seq, d));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == d - 1) seq[i--] = 0;
        if (i < 0) break;
        seq[i] += 1;
    }
}

inline bool connected_spanning(const std::vector<Edge>& edges, int d) {
    std::array<int, 16> parent;
    for (int i = 0; i < d; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = d;
    for (const auto& [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[std::max(ra, rb)] = std::min(ra, rb);
            --comps;
        }
    }
    return comps == 1;
}

inline std::vector<int> indegrees(const std::vector<Edge>& edges, int d) {
    std::vector<int> indeg(static_cast<std::size_t>(d), 0);
    for (const auto& [i, j] : edges) indeg[j] += 1;
    return indeg;
}

inline long tree_weight(const std::vector<Edge>& edges, int d) {
    long w = 1;
    for (int x : indegrees(edges, d)) w *= factorial_z(x).get_si();
    return w;
}

}  // namespace detail

struct TreeSumResult {
    int d = 0;
    mpz_class tree_count;
    mpz_class weighted_sum;
    bool identity_ok = false;  // (2d-1) sum = C(2d-1, d-1) (d-1)!
};

inline TreeSumResult tree_weight_sum(int d) {
    if (d < 1 || d > 9) throw std::invalid_argument("tree_weight_sum: need 1 <= d <= 9");
    TreeSumResult r;
    r.d = d;
    detail::for_each_tree(d, [&](const std::vector<Edge>& edges) {
        r.tree_count += 1;
        r.weighted_sum += detail::tree_weight(edges, d);
    });
    r.identity_ok = (2 * d - 1) * r.weighted_sum == binomial_z(2 * d - 1, d - 1) * factorial_z(d - 1);
    return r;
}

struct ConnectedSumResult {
    int d = 0;
    mpz_class s1_sum;  // all d edges simple
    mpz_class s2_sum;  // exactly one doubled edge
    bool s1_ok = false;
    bool s2_ok = false;
};

/// Spanning connected multigraphs with d edges. Simple ones carry one cycle;
/// the doubled-edge ones are spanning trees with one edge repeated, weighted
/// with the 2! denominator of the indegree multinomial at the doubled head.
inline ConnectedSumResult connected_graph_sums(int d) {
    if (d < 2 || d > 9) throw std::invalid_argument("connected_graph_sums: need 2 <= d <= 9");
    ConnectedSumResult r;
    r.d = d;

    std::vector<Edge> all;
    for (int j = 1; j < d; ++j)
        for (int i = 0; i < j; ++i) all.emplace_back(i, j);
    const int ne = static_cast<int>(all.size());

    // S1: d-subsets of distinct edges, connected and spanning.
    std::vector<int> pick;
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(pick.size()) == d) {
            std::vector<Edge> edges;
            edges.reserve(static_cast<std::size_t>(d));
            for (int idx : pick) edges.push_back(all[idx]);
            if (!detail::connected_spanning(edges, d)) return;
            r.s1_sum += detail::tree_weight(edges, d);
            return;
        }
        for (int i = from; i <= ne - (d - static_cast<int>(pick.size())); ++i) {
            pick.push_back(i);
            choose(i + 1);
            pick.pop_back();
        }
    };
    if (d >= 3) choose(0);  // no simple d-edged graph exists on 2 vertices

    // S2: spanning tree plus one doubled tree edge.
    detail::for_each_tree(d, [&](const std::vector<Edge>& tree) {
        long base = detail::tree_weight(tree, d);
        auto indeg = detail::indegrees(tree, d);
        for (const auto& [i, j] : tree) {
            // Doubling (i, j) bumps indeg(j); the multinomial gains (indeg+1)!/indeg! / 2!.
            long w = base * (indeg[j] + 1) / 2;
            r.s2_sum += w;
        }
    });

    mpz_class s1_target = 0;
    for (int i = 0; i <= d - 3; ++i) s1_target += binomial_z(2 * d - 1, i);
    s1_target *= factorial_z(d - 1);
    r.s1_ok = r.s1_sum == s1_target;
    r.s2_ok = r.s2_sum == binomial_z(2 * d - 1, d - 2) * factorial_z(d - 1);
    return r;
}

/// Number of labeled spanning trees whose multiset of nonzero indegrees is
/// lambda, together with the closed form
///   (d-1)!^2 / ((d-k)! e_1! ... e_l! (lambda_1!)^{e_1} ... (lambda_l!)^{e_l})
/// with k the number of parts and e_i the part multiplicities.
struct CLambdaResult {
    std::vector<int> lambda;
    mpz_class enumerated;
    Rational closed_form;
    bool match = false;
};

inline CLambdaResult trees_by_indegree(std::vector<int> lambda, int d) {
    std::sort(lambda.rbegin(), lambda.rend());
    if (std::accumulate(lambda.begin(), lambda.end(), 0) != d - 1)
        throw std::invalid_argument("trees_by_indegree: partition must sum to d-1");
    CLambdaResult r;
    r.lambda = lambda;
    detail::for_each_tree(d, [&](const std::vector<Edge>& edges) {
        auto indeg = detail::indegrees(edges, d);
        std::vector<int> nz;
        for (int x : indeg)
            if (x > 0) nz.push_back(x);
        std::sort(nz.rbegin(), nz.rend());
        if (nz == lambda) r.enumerated += 1;
    });
    const int k = static_cast<int>(lambda.size());
    Rational denom(factorial_z(d - k));
    for (std::size_t i = 0; i < lambda.size();) {
        std::size_t j = i;
        while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
        denom *= Rational(factorial_z(static_cast<long>(j - i)));  // e_i!
        Rational lf(factorial_z(lambda[i]));
        for (std::size_t t = i; t < j; ++t) denom *= lf;  // (lambda_i!)^{e_i}
        i = j;
    }
    Rational fd1(factorial_z(d - 1));
    r.closed_form = fd1 * fd1 / denom;
    r.match = Rational(r.enumerated) == r.closed_form;
    return r;
}

inline std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Builds the connected-count series from the enumerations (tree sum for the
/// m part, S1 + S2 for the 2g-2 part, alternating sign over d!), exponentiates
/// it, and compares with the symbolic count series coefficient by coefficient.
struct ExponentialConsistencyResult {
    int dmax = 0;
    bool ok = false;
};

inline ExponentialConsistencyResult exponential_consistency(int dmax) {
    if (dmax < 1 || dmax > 8) throw std::invalid_argument("exponential_consistency: need 1 <= dmax <= 8");
    const int order = dmax + 1;
    BivarSeries connected(order);
    for (int d = 1; d <= dmax; ++d) {
        mpz_class tree_part = (2 * d - 1) * tree_weight_sum(d).weighted_sum;
        mpz_class s_part = 0;
        if (d >= 2) {
            auto s = connected_graph_sums(d);
            s_part = s.s1_sum + s.s2_sum;
        }
        Rational outer(d % 2 == 1 ? 1 : -1);
        outer /= Rational(factorial_z(d));
        BivarPoly coeff = Rational(tree_part) * var_m() +
                          Rational(s_part) * (Rational(2) * var_g() - BivarPoly(2));
        connected.set_coeff(d, coeff * outer);
    }
    return ExponentialConsistencyResult{dmax, BivarSeries::exp(connected) == z_series_symbolic(order)};
}

}  // namespace graphcomb
}  // namespace secant
