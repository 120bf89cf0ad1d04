// Command-line surface for the secant-plane divisor engine: coefficient
// dumps, verification suites, and table emission. Exit codes: 0 on success,
// 1 on verification failure, 2 on usage or domain errors.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "secant/diagcalc.hpp"
#include "secant/genfun.hpp"
#include "secant/graphcomb.hpp"
#include "secant/hypergeom.hpp"
#include "secant/jsonio.hpp"
#include "secant/moduli.hpp"
#include "secant/relations.hpp"

using nlohmann::json;
using namespace secant;

namespace {

constexpr const char* kSchema = "secant/1";

struct CheckResult {
    std::string suite;
    std::string name;
    bool ok = false;
    std::string detail;
};

struct RunConfig {
    int order = 16;
    int d_max = 8;
    int a_max = 6;
    int fixed_max = 5;
    int family_max = 4;
    std::string mode = "both";
    unsigned long long seed = 20240811ull;
    int jobs = 1;
};

// Order-preserving parallel map over an index range; the workers share
// nothing and results are merged positionally.
template <class Fn>
std::vector<std::vector<CheckResult>> parallel_map(int n, int jobs, const Fn& fn) {
    std::vector<std::vector<CheckResult>> out(static_cast<std::size_t>(n));
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                out[static_cast<std::size_t>(i)] = fn(i);
        });
    }
    for (auto& t : workers) t.join();
    return out;
}

void flatten(std::vector<CheckResult>& into, std::vector<std::vector<CheckResult>>&& chunks) {
    for (auto& c : chunks)
        for (auto& r : c) into.push_back(std::move(r));
}

GenFunKind to_genfun(PKind k) {
    switch (k) {
        case PKind::Pc: return GenFunKind::Pc;
        case PKind::Palpha: return GenFunKind::Palpha;
        case PKind::Pbeta: return GenFunKind::Pbeta;
        case PKind::Pgamma: return GenFunKind::Pgamma;
        case PKind::Pdelta0: return GenFunKind::Pdelta0;
    }
    throw std::invalid_argument("unknown kind");
}

std::vector<CheckResult> suite_series(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    auto push = [&](const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({"series", name, ok, detail});
    };

    const int order = std::max(cfg.order, 10);
    auto [x, y] = xy_series(order + 1);
    bool closed_ok = true;
    for (int n = 2; n <= order; ++n) {
        closed_ok = closed_ok && x.coeff(n) == xy_closed_coeff(GenFunKind::X, n) &&
                    y.coeff(n) == xy_closed_coeff(GenFunKind::Y, n);
    }
    push("xy_closed_forms", closed_ok, "n <= " + std::to_string(order));

    const long ydata[] = {3, -20, 105, -504, 2310, -10296, 45045, -194480};
    const long xdata[] = {-3, 28, -177, 960, -4806, 22920, -105837, 477688};
    bool taylor_ok = true;
    for (int n = 2; n <= 9; ++n)
        taylor_ok = taylor_ok && y.coeff(n) == Rational(ydata[n - 2], 6) &&
                    x.coeff(n) == Rational(xdata[n - 2], 6);
    push("xy_taylor_data", taylor_ok);

    // 2m P_alpha + (2g-2) P_beta - 2d N_d vanishes identically.
    {
        const int dmax = std::max(cfg.d_max, 10);
        auto pa = p_series_symbolic(GenFunKind::Palpha, dmax + 1);
        auto pb = p_series_symbolic(GenFunKind::Pbeta, dmax + 1);
        auto zs = z_series_symbolic(dmax + 1);
        bool ok = true;
        const BivarPoly m = var_m(), gg2 = Rational(2) * var_g() - BivarPoly(2);
        for (int d = 0; d <= dmax; ++d)
            ok = ok && (Rational(2) * m * pa.coeff(d) + gg2 * pb.coeff(d) -
                        Rational(2 * d) * zs.coeff(d))
                           .is_zero();
        push("renormalization_combo", ok, "d <= " + std::to_string(dmax));
    }

    {
        bool ok = true;
        auto sym = z_series_symbolic(8);
        for (long g : {0L, 3L, 8L})
            for (long m : {2L, 9L}) {
                auto num = z_series(g, m, 8);
                for (int k = 0; k < 8; ++k)
                    ok = ok && sym.coeff(k).eval({Rational(m), Rational(g)}) == num.coeff(k);
            }
        push("symbolic_numeric_grid", ok);
    }

    {
        auto repa = first_form_check(8, 6);
        auto repb = first_form_check(0, 6);
        push("derivative_forms", repa.gamma_derivative_form && repa.delta0_derivative_form &&
                                     repb.gamma_derivative_form && repb.delta0_derivative_form,
             "conjectural families; printed variants fail as expected");
    }

    push("multiplicativity_z12", multiplicativity_check(12).ok, "symbolic in (m1,g1,m2,g2)");
    return out;
}

std::vector<CheckResult> suite_hypergeom(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    const int dmax = std::min(cfg.d_max, 10);
    const int amax = cfg.a_max;
    auto chunks = parallel_map(dmax - 1, cfg.jobs, [&](int i) {
        const long d = i + 2;
        std::vector<CheckResult> rs;
        for (long a = 2; a <= amax; ++a) {
            auto p = rho_zero_point(a, d);
            bool ok = true;
            std::string bad;
            for (PKind k : {PKind::Pc, PKind::Palpha, PKind::Pbeta, PKind::Pgamma, PKind::Pdelta0}) {
                Rational hv = p_hyper(k, d, p.g, p.m);
                Rational sv = p_series(to_genfun(k), static_cast<int>(d) + 1, p.g, p.m).coeff(
                    static_cast<int>(d));
                if (hv != sv) {
                    ok = false;
                    bad += std::string(pkind_name(k)) + " ";
                }
            }
            if (pc_rho_zero(a, d) != p_hyper(PKind::Pc, d, p.g, p.m)) {
                ok = false;
                bad += "pc_rho_zero ";
            }
            rs.push_back({"hypergeom", "grid_a" + std::to_string(a) + "_d" + std::to_string(d), ok, bad});
        }
        return rs;
    });
    flatten(out, std::move(chunks));
    return out;
}

std::vector<CheckResult> suite_oracle(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    const bool run_fixed = cfg.mode == "fixed" || cfg.mode == "both";
    const bool run_family = cfg.mode == "family" || cfg.mode == "both";
    DiagBounds bounds{std::max(cfg.fixed_max, 6), std::max(cfg.family_max, 5)};
    if (run_fixed) {
        for (int d = 1; d <= cfg.fixed_max; ++d) {
            bool ok = evaluate_fixed(d, bounds) == n_d(d);
            out.push_back({"oracle", "fixed_d" + std::to_string(d), ok, "vs [z^d] of the count series"});
        }
    }
    if (run_family) {
        const int order = cfg.family_max + 1;
        auto pa = p_series_symbolic(GenFunKind::Palpha, order);
        auto pb = p_series_symbolic(GenFunKind::Pbeta, order);
        auto pg = p_series_symbolic(GenFunKind::Pgamma, order);
        for (int d = 1; d <= cfg.family_max; ++d) {
            auto f = evaluate_family(d, bounds);
            bool ok = f.p_alpha == pa.coeff(d) && f.p_beta == pb.coeff(d) && f.p_gamma == pg.coeff(d);
            out.push_back({"oracle", "family_d" + std::to_string(d), ok,
                           "alpha/beta series and Z*X for the conjectural gamma family"});
        }
    }
    // Confluence spot check with the run seed.
    {
        auto e = porteous_expand(3, DiagMode::family);
        auto a = evaluate_family_expression(reduce(e, 0));
        auto b = evaluate_family_expression(reduce(e, cfg.seed == 0 ? 1 : cfg.seed));
        bool ok = a.p_alpha == b.p_alpha && a.p_beta == b.p_beta && a.p_gamma == b.p_gamma;
        out.push_back({"oracle", "confluence_seed_" + std::to_string(cfg.seed), ok, ""});
    }
    return out;
}

std::vector<CheckResult> suite_graphs(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    const int dmax = std::min(cfg.d_max, 8);
    for (int d = 2; d <= dmax; ++d) {
        auto t = graphcomb::tree_weight_sum(d);
        out.push_back({"graphs", "tree_sum_d" + std::to_string(d), t.identity_ok,
                       t.weighted_sum.get_str()});
        auto s = graphcomb::connected_graph_sums(d);
        out.push_back({"graphs", "s1_s2_d" + std::to_string(d), s.s1_ok && s.s2_ok,
                       s.s1_sum.get_str() + "," + s.s2_sum.get_str()});
    }
    for (int d = 3; d <= std::min(dmax, 6); ++d) {
        bool ok = true;
        for (const auto& lambda : graphcomb::partitions_of(d - 1))
            ok = ok && graphcomb::trees_by_indegree(lambda, d).match;
        out.push_back({"graphs", "indegree_closed_form_d" + std::to_string(d), ok, "all partitions"});
    }
    out.push_back({"graphs", "exponential_consistency",
                   graphcomb::exponential_consistency(std::min(dmax, 6)).ok,
                   "through z^" + std::to_string(std::min(dmax, 6))});
    return out;
}

std::vector<CheckResult> suite_examples(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (ExampleId id : {ExampleId::d2s3, ExampleId::d3s5, ExampleId::d4s7, ExampleId::d5s9,
                         ExampleId::r2d3, ExampleId::r3d5}) {
        auto rep = verify_example(id);
        out.push_back({"examples", example_name(id), rep.ok, ""});
    }
    const int dmax = std::min(cfg.d_max, 8);
    for (int d = 1; d <= dmax; ++d) {
        auto b = solve_coefficients(d);
        bool ok = relation_residuals(b).all_zero() &&
                  evaluate_on_family(b, k3_invariants(2 * d - 1)).is_zero();
        out.push_back({"examples", "relation_web_d" + std::to_string(d), ok,
                       "five relations + K3 vanishing"});
    }
    return out;
}

std::vector<CheckResult> suite_moduli(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    const std::pair<long, long> rows[] = {{2, 2}, {3, 2}, {4, 2}, {5, 2},
                                          {2, 3}, {3, 3}, {2, 4}, {2, 5}};
    const Rational margins[] = {Rational(0),           Rational(693, 12389), Rational(756, 13379),
                                Rational(1539, 30247), Rational(308, 6539),  Rational(32232, 596239),
                                Rational(2520, 46427), Rational(2508, 47159)};
    for (int i = 0; i < 8; ++i) {
        auto rep = slope_report(rows[i].first, rows[i].second);
        bool ok = rep.bn_margin == margins[i] && rep.threshold1_ok && rep.threshold2_ok;
        out.push_back({"moduli", "slope_row_g" + std::to_string(rep.g) + "_d" + std::to_string(rep.d),
                       ok, rep.slope.to_string()});
    }
    {
        auto chunks = parallel_map(4, cfg.jobs, [&](int i) -> std::vector<CheckResult> {
            int a = i + 2;
            bool ok = virtual_slope_check(a, std::max(cfg.d_max, 30));
            return {{"moduli", "virtual_slope_a" + std::to_string(a), ok,
                     "d <= " + std::to_string(std::max(cfg.d_max, 30))}};
        });
        flatten(out, std::move(chunks));
    }
    {
        bool ok = true;
        for (long a = 2; a <= cfg.a_max; ++a)
            for (long d = 1; d <= 10; ++d)
                for (TautClass c : {TautClass::alpha, TautClass::beta, TautClass::c}) {
                    auto p = rho_zero_point(a, d);
                    auto lhs = gysin(c, p.g, p.s, p.m);
                    auto rhs = gysin_rho_zero(c, a, d);
                    ok = ok && lhs.lambda_coeff == rhs.lambda_coeff &&
                         lhs.delta0_coeff == rhs.delta0_coeff;
                }
        out.push_back({"moduli", "gysin_specialization", ok, "a <= " + std::to_string(cfg.a_max)});
    }
    {
        auto chunks = parallel_map(9, cfg.jobs, [&](int i) -> std::vector<CheckResult> {
            long a = i + 2;
            bool ok = true;
            for (long d = 1; d <= 50; ++d) ok = ok && nonempty_check(a, d).pass();
            return {{"moduli", "nonempty_a" + std::to_string(a), ok, "d <= 50"}};
        });
        flatten(out, std::move(chunks));
    }
    {
        bool ok = true;
        for (long a = 2; a <= cfg.a_max; ++a) {
            Rational v = asymptotic_gap_value(a, 1000);
            ok = ok && v >= Rational(95, 100) && v <= Rational(105, 100);
        }
        out.push_back({"moduli", "asymptotic_gap_d1000", ok, ""});
    }
    return out;
}

std::string resolve_output(const std::string& path) {
    if (path.empty()) return path;
    std::filesystem::path p(path);
    const char* dir = std::getenv("SECANT_OUTPUT_DIR");
    if (p.is_relative() && dir && *dir) p = std::filesystem::path(dir) / p;
    return p.string();
}

int write_or_print(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream f(resolve_output(path), std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << path << "\n";
        return 2;
    }
    f << content;
    return 0;
}

int cmd_coeffs(int d, long g, long m, bool numeric, const std::string& format,
               const std::string& output) {
    CoeffBundle b = solve_coefficients(d);
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["schema"] = kSchema;
        if (numeric) {
            std::array<Rational, 2> at{Rational(m), Rational(g)};
            j["bundle"] = {{"d", d},
                           {"g", g},
                           {"m", m},
                           {"P_alpha", b.p_alpha.eval(at).to_string()},
                           {"P_beta", b.p_beta.eval(at).to_string()},
                           {"P_gamma", b.p_gamma.eval(at).to_string()},
                           {"P_c", b.p_c.eval(at).to_string()},
                           {"P_delta0", b.p_delta0.eval(at).to_string()}};
        } else {
            j["bundle"] = to_json(b);
        }
        j["note"] = "Pgamma and Pdelta0 rest on conjectural relations";
        os << j.dump(2) << "\n";
    } else {
        os << "d = " << d << "\n";
        if (numeric) {
            std::array<Rational, 2> at{Rational(m), Rational(g)};
            os << "P_alpha  = " << b.p_alpha.eval(at).to_string() << "\n"
               << "P_beta   = " << b.p_beta.eval(at).to_string() << "\n"
               << "P_gamma  = " << b.p_gamma.eval(at).to_string() << " (conjectural)\n"
               << "P_c      = " << b.p_c.eval(at).to_string() << "\n"
               << "P_delta0 = " << b.p_delta0.eval(at).to_string() << " (conjectural)\n";
        } else {
            os << "P_alpha  = " << to_string_mg(b.p_alpha) << "\n"
               << "P_beta   = " << to_string_mg(b.p_beta) << "\n"
               << "P_gamma  = " << to_string_mg(b.p_gamma) << " (conjectural)\n"
               << "P_c      = " << to_string_mg(b.p_c) << "\n"
               << "P_delta0 = " << to_string_mg(b.p_delta0) << " (conjectural)\n";
        }
    }
    return write_or_print(output, os.str());
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, const std::string& output) {
    std::vector<CheckResult> results;
    auto run = [&](const std::string& name) {
        if (name == "series") return suite_series(cfg);
        if (name == "hypergeom") return suite_hypergeom(cfg);
        if (name == "oracle") return suite_oracle(cfg);
        if (name == "graphs") return suite_graphs(cfg);
        if (name == "examples") return suite_examples(cfg);
        if (name == "moduli") return suite_moduli(cfg);
        throw std::invalid_argument("unknown suite " + name);
    };
    if (suite == "all") {
        for (const char* s : {"series", "hypergeom", "oracle", "graphs", "examples", "moduli"}) {
            auto rs = run(s);
            results.insert(results.end(), rs.begin(), rs.end());
        }
    } else {
        results = run(suite);
    }

    int failures = 0;
    for (const auto& r : results) {
        if (!r.ok) ++failures;
        std::cout << (r.ok ? "[ok]   " : "[FAIL] ") << r.suite << "/" << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
    }
    std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";

    if (failures > 0) {
        json manifest;
        manifest["schema"] = kSchema;
        manifest["failures"] = json::array();
        for (const auto& r : results)
            if (!r.ok)
                manifest["failures"].push_back({{"suite", r.suite}, {"check", r.name}, {"detail", r.detail}});
        std::string path = output.empty() ? std::string("failures.json") : output;
        write_or_print(path, manifest.dump(2) + "\n");
        return 1;
    }
    return 0;
}

int cmd_table(const std::string& which, const RunConfig& cfg, int a_min, int a_max,
              const std::string& format, const std::string& output) {
    std::ostringstream os;
    const bool csv = format != "json";
    json j;
    j["schema"] = kSchema;
    j["table"] = which;
    json rows = json::array();

    if (which == "slopes") {
        if (csv) os << "g,d,s,m,slope,bn_margin,threshold1_margin,threshold2_margin\n";
        const std::pair<long, long> grid[] = {{2, 2}, {3, 2}, {4, 2}, {5, 2},
                                              {2, 3}, {3, 3}, {2, 4}, {2, 5}};
        for (auto [a, d] : grid) {
            auto rep = slope_report(a, d);
            std::string t2 = rep.threshold2_applies ? rep.threshold2_margin.to_string() : "NA";
            if (csv)
                os << rep.g << "," << rep.d << "," << rep.s << "," << rep.m << ","
                   << rep.slope.to_string() << "," << rep.bn_margin.to_string() << ","
                   << rep.threshold1_margin.to_string() << "," << t2 << "\n";
            else
                rows.push_back({{"a", rep.a},
                                {"d", rep.d},
                                {"g", rep.g},
                                {"s", rep.s},
                                {"m", rep.m},
                                {"b_lambda", rep.cls.b_lambda.to_string()},
                                {"b_0", rep.cls.b_0.to_string()},
                                {"b_1", rep.cls.b_1.to_string()},
                                {"b_2", rep.cls.b_2.to_string()},
                                {"slope", rep.slope.to_string()},
                                {"bn_margin", rep.bn_margin.to_string()},
                                {"threshold1_margin", rep.threshold1_margin.to_string()},
                                {"threshold2_margin", t2}});
        }
    } else if (which == "virtual_slopes") {
        if (csv) os << "a,d,closed_form,sec_class,match\n";
        for (int a = a_min; a <= a_max; ++a) {
            auto form = virtual_slope_closed_form(a);
            for (long d = 1; d <= cfg.d_max; ++d) {
                auto cls = sec_class(a, d);
                Rational lhs = form.eval(d), rhs = cls.b_lambda / cls.b_0;
                if (csv)
                    os << a << "," << d << "," << lhs.to_string() << "," << rhs.to_string() << ","
                       << (lhs == rhs ? "yes" : "NO") << "\n";
                else
                    rows.push_back({{"a", a},
                                    {"d", d},
                                    {"closed_form", lhs.to_string()},
                                    {"sec_class", rhs.to_string()},
                                    {"match", lhs == rhs}});
            }
        }
    } else if (which == "xy_taylor") {
        if (csv) os << "n,x_series,x_closed,y_series,y_closed\n";
        auto [x, y] = xy_series(cfg.order + 1);
        for (int n = 2; n <= cfg.order; ++n) {
            Rational xc = xy_closed_coeff(GenFunKind::X, n), yc = xy_closed_coeff(GenFunKind::Y, n);
            if (csv)
                os << n << "," << x.coeff(n).to_string() << "," << xc.to_string() << ","
                   << y.coeff(n).to_string() << "," << yc.to_string() << "\n";
            else
                rows.push_back({{"n", n},
                                {"x_series", x.coeff(n).to_string()},
                                {"x_closed", xc.to_string()},
                                {"y_series", y.coeff(n).to_string()},
                                {"y_closed", yc.to_string()}});
        }
    } else {
        throw std::invalid_argument("unknown table " + which);
    }

    if (!csv) {
        j["rows"] = rows;
        os << j.dump(2) << "\n";
    }
    return write_or_print(output, os.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"secant-plane divisor calculator"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string output, format = "text";

    auto* coeffs = app.add_subcommand("coeffs", "print the solved coefficient bundle for one d");
    int co_d = 0;
    long co_g = 0, co_m = 0;
    coeffs->add_option("--d", co_d, "incidence degree")->required()->check(CLI::PositiveNumber);
    auto* gopt = coeffs->add_option("--g", co_g, "genus (with --m: evaluate numerically)");
    auto* mopt = coeffs->add_option("--m", co_m, "degree (with --g: evaluate numerically)");
    coeffs->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    coeffs->add_option("--output", output, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    verify->add_option("--suite", suite, "series|hypergeom|oracle|graphs|examples|moduli|all")
        ->check(CLI::IsMember({"series", "hypergeom", "oracle", "graphs", "examples", "moduli", "all"}));
    verify->add_option("--d-max", cfg.d_max, "grid bound in d")->check(CLI::PositiveNumber);
    verify->add_option("--a-max", cfg.a_max, "grid bound in a")->check(CLI::Range(2, 10));
    verify->add_option("--order", cfg.order, "series truncation order")->check(CLI::PositiveNumber);
    verify->add_option("--fixed-max", cfg.fixed_max, "oracle bound, fixed mode")->check(CLI::Range(1, 6));
    verify->add_option("--family-max", cfg.family_max, "oracle bound, family mode")->check(CLI::Range(1, 5));
    verify->add_option("--mode", cfg.mode, "oracle mode: fixed|family|both")
        ->check(CLI::IsMember({"fixed", "family", "both"}));
    verify->add_option("--seed", cfg.seed, "seed for randomized checks");
    verify->add_option("--jobs", cfg.jobs, "worker count for grid evaluation")->check(CLI::Range(1, 64));
    verify->add_option("--output", output, "failure manifest path (default failures.json)");

    auto* table = app.add_subcommand("table", "emit a table (CSV or JSON)");
    std::string which;
    int a_min = 2, a_max_t = 5;
    table->add_option("which", which, "slopes|virtual_slopes|xy_taylor")
        ->required()
        ->check(CLI::IsMember({"slopes", "virtual_slopes", "xy_taylor"}));
    table->add_option("--a-min", a_min, "first a for virtual_slopes")->check(CLI::Range(2, 5));
    table->add_option("--a-max", a_max_t, "last a for virtual_slopes")->check(CLI::Range(2, 5));
    table->add_option("--d-max", cfg.d_max, "rows per a for virtual_slopes")->check(CLI::PositiveNumber);
    table->add_option("--order", cfg.order, "last n for xy_taylor")->check(CLI::PositiveNumber);
    table->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--output", output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (coeffs->parsed()) {
            bool numeric = gopt->count() > 0 || mopt->count() > 0;
            if (numeric && (gopt->count() == 0 || mopt->count() == 0)) {
                std::cerr << "error: --g and --m must be given together\n";
                return 2;
            }
            if (format == "text" && coeffs->get_option("--format")->count() == 0) format = "text";
            return cmd_coeffs(co_d, co_g, co_m, numeric, format, output);
        }
        if (verify->parsed()) return cmd_verify(suite, cfg, output);
        if (table->parsed()) {
            if (which == "xy_taylor" && table->get_option("--order")->count() == 0) cfg.order = 10;
            if (which == "virtual_slopes" && table->get_option("--d-max")->count() == 0) cfg.d_max = 10;
            if (format == "text") format = "csv";
            return cmd_table(which, cfg, a_min, a_max_t, format, output);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
