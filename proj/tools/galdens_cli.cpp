// galdens command-line front end.

#include "galdens/acceptance.hpp"
#include "galdens/character_table.hpp"
#include "galdens/density.hpp"
#include "galdens/dirichlet.hpp"
#include "galdens/ellstat.hpp"
#include "galdens/error.hpp"
#include "galdens/gl2fp.hpp"
#include "galdens/json_io.hpp"
#include "galdens/named_groups.hpp"
#include "galdens/presets.hpp"
#include "galdens/sieveshift.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace galdens;

namespace {

struct Globals {
    std::string format;
    unsigned threads = 1;
    std::uint64_t seed = 20240601;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string scalar_text(const Json& j) {
    if (j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den")) {
        const auto den = j["den"].get<std::string>();
        return den == "1" ? j["num"].get<std::string>() : j["num"].get<std::string>() + "/" + den;
    }
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void print_table(const Json& j, std::ostream& out, const std::string& prefix = "") {
    if (j.is_object() && !(j.size() == 2 && j.contains("num") && j.contains("den"))) {
        for (auto it = j.begin(); it != j.end(); ++it)
            print_table(it.value(), out, prefix.empty() ? it.key() : prefix + "." + it.key());
        return;
    }
    if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) print_table(j[i], out, prefix + "[" + std::to_string(i) + "]");
        return;
    }
    if (j.is_array()) {
        out << prefix << ": ";
        for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar_text(j[i]);
        out << "\n";
        return;
    }
    out << prefix << ": " << scalar_text(j) << "\n";
}

void emit(const Globals& g, RunReport report, std::chrono::steady_clock::time_point start) {
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string format = g.format.empty() ? (isatty(STDOUT_FILENO) ? "table" : "json") : g.format;
    if (format == "json") {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << "command: " << report.command << "\n";
        print_table(report.config, std::cout, "config");
        print_table(report.results, std::cout);
        std::cout << "wall_seconds: " << report.wall_seconds << "\n";
    }
}

Json preset_json(const std::string& name) {
    Json r{{"preset", name}, {"predicted", to_json(preset_density(name))}};
    if (name == "tetrahedral-17-32") {
        const auto pair = tetrahedral_pair("c3");
        r["fiber_order"] = pair.fiber.order();
        r["common_quotient"] = pair.to_common.target.name();
        r["integer_trace_characters"] = pair.integer_trace_count;
        r["matching_elementwise"] = to_json(matching_fraction_elementwise(pair.chi1, pair.chi2));
    } else if (name.starts_with("serre-k:")) {
        const auto k = std::stoul(name.substr(8));
        r["zero_density"] = to_json(1 - Rational(1, BigInt(k) * BigInt(k)));
        r["twist_order"] = 2;
        if (k == 2 || k == 3) {
            const auto pair = serre_pair(static_cast<unsigned>(k));
            r["group"] = pair.group.name();
            r["group_order"] = pair.group.order();
            r["matching_realized"] = to_json(matching_fraction(pair.rho, pair.twisted));
        }
    } else if (name.starts_with("steinberg:")) {
        const auto p = static_cast<unsigned>(std::stoul(name.substr(10)));
        r["group_order"] = gl2_group(p).order();
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"galdens: matching and zero-trace densities of finite Galois images"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "json or table (default: table on a terminal)")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--seed", g.seed, "seed for randomized subroutines");

    RunReport report;
    std::function<void()> action;

    auto* density = app.add_subcommand("density", "exact w and zero densities of a prime set");
    std::string primes_arg;
    density->add_option("--primes", primes_arg, "comma-separated distinct primes")->required();
    density->callback([&] {
        action = [&] {
            std::vector<std::uint64_t> ps;
            for (const auto& s : split_csv(primes_arg)) ps.push_back(std::stoull(s));
            report.config = {{"primes", ps}};
            report.results = {{"w", to_json(w_density(ps))}, {"zero_density", to_json(zero_density(ps))}};
            bool small = false;
            for (auto p : ps) small = small || p <= 7;
            if (small) report.results["note"] = "primes <= 7 lie outside the window hypothesis";
        };
    });

    auto* approx = app.add_subcommand("approx", "plan a window (and twist) within eps of a target density");
    std::string target_arg, eps_arg, mode_arg = "zero", convention_arg = "nonzero", preset_arg;
    approx->add_option("--target", target_arg, "rational or decimal in [0, 1]");
    approx->add_option("--eps", eps_arg, "rational or decimal >= 0");
    approx->add_option("--mode", mode_arg, "zero or matching")->check(CLI::IsMember({"zero", "matching"}));
    approx->add_option("--convention", convention_arg, "base density fed to the twist: nonzero or zero")
        ->check(CLI::IsMember({"nonzero", "zero"}));
    approx->add_option("--preset", preset_arg, "tetrahedral-17-32, serre-k:<k> or steinberg:<p>");
    approx->callback([&] {
        action = [&] {
            const PlannerConfig config = PlannerConfig::from_environment();
            report.config = {{"mode", mode_arg}, {"convention", convention_arg}, {"max_prime", config.max_prime}};
            if (!preset_arg.empty()) {
                report.config["preset"] = preset_arg;
                report.results = to_json(preset_plan(preset_arg));
                return;
            }
            if (target_arg.empty() || eps_arg.empty()) throw CLI::ValidationError("--target and --eps are required without --preset");
            const Rational c = parse_rational(target_arg), eps = parse_rational(eps_arg);
            report.config["target"] = to_json(c);
            report.config["eps"] = to_json(eps);
            const BaseConvention conv = convention_arg == "zero" ? BaseConvention::ZeroFraction : BaseConvention::NonzeroProportion;
            report.results = to_json(mode_arg == "zero" ? approximate_zero_density(c, eps, config)
                                                        : approximate_matching_density(c, eps, conv, config));
        };
    });

    auto* gl2 = app.add_subcommand("gl2", "class-type fractions and the Steinberg character of GL2(F_p)");
    unsigned gl2_p = 5;
    bool gl2_report = false;
    gl2->add_option("--p", gl2_p, "odd prime")->required();
    gl2->add_flag("--report", gl2_report, "include enumeration cross-checks (p <= 31)");
    gl2->callback([&] {
        action = [&] {
            report.config = {{"p", gl2_p}, {"report", gl2_report}};
            const auto f = class_type_fractions(gl2_p);
            report.results["class_type_fractions"] = {{"central", to_json(f.central)},
                                                      {"non_semisimple", to_json(f.non_semisimple)},
                                                      {"split_regular", to_json(f.split_regular)},
                                                      {"nonsplit_regular", to_json(f.nonsplit_regular)}};
            if (gl2_p <= kMaxEnumeratedPrime) {
                const ClassFunction st = steinberg_character(gl2_p);
                report.results["group_order"] = st.group().order();
                report.results["classes"] = st.group().classes().size();
                report.results["steinberg_zero_fraction"] = to_json(zero_fraction(st));
                report.results["steinberg_norm"] = inner_product(st, st).to_string();
                if (gl2_report) {
                    const auto c = class_type_counts_by_enumeration(gl2_p);
                    report.results["enumeration_counts"] = {{"central", c.central},
                                                            {"non_semisimple", c.non_semisimple},
                                                            {"split_regular", c.split_regular},
                                                            {"nonsplit_regular", c.nonsplit_regular}};
                }
            } else {
                report.results["steinberg_zero_fraction"] = to_json(f.non_semisimple);
                report.results["note"] = "formula only above the enumeration bound";
            }
        };
    });

    auto* fiber = app.add_subcommand("fiber", "fiber-product and preset matching densities");
    std::string fiber_preset = "tetrahedral-17-32", fiber_over;
    fiber->add_option("--preset", fiber_preset, "tetrahedral-17-32, serre-k:<k> or steinberg:<p>");
    fiber->add_option("--over", fiber_over, "common quotient for the SL2(F3) pair: c3 or a4")
        ->check(CLI::IsMember({"c3", "a4"}));
    fiber->callback([&] {
        action = [&] {
            if (!fiber_over.empty()) {
                const auto pair = tetrahedral_pair(fiber_over);
                report.config = {{"over", fiber_over}};
                report.results = {{"fiber_order", pair.fiber.order()},
                                  {"matching", to_json(matching_fraction(pair.chi1, pair.chi2))},
                                  {"integer_trace_characters", pair.integer_trace_count}};
                return;
            }
            report.config = {{"preset", fiber_preset}};
            report.results = preset_json(fiber_preset);
        };
    });

    auto* chartable = app.add_subcommand("chartable", "character table of a named group");
    std::string group_arg;
    chartable->add_option("--group", group_arg, "trivial, cyclic:n, q8, s3, d4, sl2f3, heisenberg:p, gl2fp:p")->required();
    chartable->callback([&] {
        action = [&] {
            const FiniteGroup grp = named_group(group_arg);
            report.config = {{"group", group_arg}};
            Json chars = Json::array();
            for (const auto& chi : character_table_small(grp)) chars.push_back(to_json(chi));
            report.results = {{"order", grp.order()},
                              {"classes", grp.classes().size()},
                              {"nilpotent", is_nilpotent(grp)},
                              {"characters", chars}};
        };
    });

    auto* shift = app.add_subcommand("shift", "shift a quadratic to avoid small prime factors and scan for almost primes");
    std::string poly_arg;
    std::uint64_t shift_T = 10, scan_max = 0;
    shift->add_option("--poly", poly_arg, "a,b,c for a x^2 + b x + c")->required();
    shift->add_option("--T", shift_T, "avoid prime factors below T")->required();
    shift->add_option("--scan", scan_max, "scan n in [1, n_max]");
    shift->callback([&] {
        action = [&] {
            const auto parts = split_csv(poly_arg);
            if (parts.size() != 3) throw CLI::ValidationError("--poly expects three comma-separated integers");
            const QuadPoly f{BigInt(parts[0]), BigInt(parts[1]), BigInt(parts[2])};
            report.config = {{"poly", {parts[0], parts[1], parts[2]}}, {"T", shift_T}, {"scan", scan_max}};
            const ShiftSpec s = find_shift(f, shift_T);
            report.results = {{"A", s.A.get_str()}, {"B", s.B.get_str()},
                              {"F", {s.F.a.get_str(), s.F.b.get_str(), s.F.c.get_str()}}};
            if (scan_max) {
                const auto scan = almost_prime_scan(s.F, scan_max, g.threads);
                Json hits = Json::array();
                for (const auto& h : scan.hits) {
                    Json fs = Json::array();
                    for (const auto& q : h.factors) fs.push_back(q.get_str());
                    hits.push_back({{"n", h.n}, {"value", h.value.get_str()}, {"factors", fs}});
                }
                report.results["hits"] = hits;
                report.results["unresolved"] = scan.unresolved;
            }
        };
    });

    auto* ell = app.add_subcommand("ellstat", "Frobenius class statistics of an elliptic curve mod p");
    std::int64_t ea = 0, eb = 0;
    std::uint64_t ep = 11, eqmax = 100000, econd = 0;
    std::string curves_file;
    bool resolve = false;
    ell->add_option("--a", ea, "coefficient a of y^2 = x^3 + a x + b");
    ell->add_option("--b", eb, "coefficient b");
    ell->add_option("--p", ep, "torsion prime");
    ell->add_option("--qmax", eqmax, "largest q sampled");
    ell->add_option("--conductor", econd, "declared conductor (square-free check only)");
    ell->add_option("--curves", curves_file, "file with lines 'a b [N] [label]'");
    ell->add_flag("--resolve-scalars", resolve, "separate scalar from unipotent Frobenius where possible");
    ell->callback([&] {
        action = [&] {
            std::vector<Curve> curves;
            if (!curves_file.empty()) {
                std::ifstream in(curves_file);
                if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + curves_file);
                curves = parse_curve_list(in);
            } else {
                Curve c{ea, eb, {}, ""};
                if (econd) c.conductor = econd;
                curves.push_back(c);
            }
            report.config = {{"p", ep}, {"qmax", eqmax}, {"resolve_scalars", resolve}};
            HistogramOptions opt;
            opt.threads = g.threads;
            opt.seed = g.seed;
            opt.resolve_scalars = resolve;
            Json out = Json::array();
            for (const auto& c : curves) {
                const auto h = chebotarev_histogram(c, ep, eqmax, opt);
                Json r{{"a", c.a}, {"b", c.b}, {"samples", h.samples}};
                if (c.conductor) r["conductor"] = *c.conductor;
                if (!c.label.empty()) r["label"] = c.label;
                auto entry = [&](std::uint64_t count, const Rational& expected) {
                    return Json{{"count", count}, {"fraction", h.fraction(count)}, {"expected", to_json(expected)},
                                {"standard_error", h.standard_error(expected)}, {"z", h.z_score(count, expected)}};
                };
                r["split_regular"] = entry(h.split, h.expected_split);
                r["nonsplit_regular"] = entry(h.nonsplit, h.expected_nonsplit);
                r["ambiguous"] = entry(h.ambiguous, h.expected_ambiguous);
                if (resolve) r["resolved"] = {{"central", h.central}, {"non_semisimple", h.non_semisimple}};
                if (!h.warnings.empty()) r["warnings"] = h.warnings;
                out.push_back(r);
            }
            report.results = {{"curves", out}};
        };
    });

    auto* dir = app.add_subcommand("dirichlet", "matching density of two Dirichlet characters");
    std::uint64_t dN = 5, dchi = 0, dchi2 = 0, dxmax = 1000000;
    std::vector<double> s_values = kDefaultSchedule;
    dir->add_option("--modulus", dN, "modulus N")->required();
    dir->add_option("--chi", dchi, "index of the first character (generator-exponent convention)")->required();
    dir->add_option("--chi2", dchi2, "index of the second character")->required();
    dir->add_option("--xmax", dxmax, "largest prime sampled");
    dir->add_option("--s", s_values, "decreasing s values in (1, 2]")->delimiter(',');
    dir->callback([&] {
        action = [&] {
            const auto x = DirichletChar::from_index(dN, dchi), y = DirichletChar::from_index(dN, dchi2);
            report.config = {{"modulus", dN}, {"chi", dchi}, {"chi2", dchi2}, {"xmax", dxmax}, {"s", s_values}};
            const auto series = matching_series(x, y, dxmax);
            const auto nat = natural_density_estimate(series);
            const auto dd = dirichlet_density_estimate(series, s_values);
            Json gens = Json::array();
            for (const auto& u : unit_generators(dN)) gens.push_back({{"g", u.g}, {"order", u.order}});
            Json per_s = Json::array();
            for (std::size_t i = 0; i < dd.size(); ++i) per_s.push_back({{"s", s_values[i]}, {"estimate", dd[i]}});
            report.results = {{"generators", gens},
                              {"orders", {x.order(), y.order()}},
                              {"exact", to_json(exact_matching_density_dirichlet(x, y))},
                              {"natural", {{"estimate", nat.estimate}, {"standard_error", nat.standard_error},
                                           {"marked", nat.marked}, {"total", nat.total}}},
                              {"dirichlet", per_s},
                              {"note", "partial sums truncated at xmax; no limit s -> 1 is taken"}};
        };
    });

    auto* verify = app.add_subcommand("verify-all", "run the acceptance checks");
    std::vector<int> only;
    verify->add_option("--only", only, "criterion numbers")->delimiter(',')->check(CLI::Range(1, 10));
    bool verify_ok = true;
    verify->callback([&] {
        action = [&] {
            AcceptanceOptions o;
            o.threads = g.threads;
            o.seed = g.seed;
            report.config = {{"threads", g.threads}, {"seed", g.seed}};
            Json out = Json::array();
            for (const auto& r : run_acceptance(o, only)) {
                verify_ok = verify_ok && r.passed;
                out.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
            }
            report.results = {{"criteria", out}, {"all_passed", verify_ok}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    report.command = app.get_subcommands().front()->get_name();
    try {
        action();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "galdens " << report.command << ": " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "galdens " << report.command << ": invalid number (" << e.what() << ")\n";
        return 2;
    }
    emit(g, report, start);
    return verify_ok ? 0 : 1;
}
