// k3atlas command line: evaluates the Siegel-form engine, the inverse period
// map and the parameter-space reports, and drives the verification suites.
//
// Exit codes: 0 success, 1 check failure, 2 input error.

#include <complex>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "k3atlas/forms.hpp"
#include "k3atlas/k3family.hpp"
#include "k3atlas/kummer.hpp"
#include "k3atlas/polydata.hpp"
#include "k3atlas/suite.hpp"
#include "k3atlas/theta.hpp"

using json = nlohmann::json;
using namespace k3atlas;

namespace {

json cplx(const Complex& z) { return json::array({z.real(), z.imag()}); }

json wp_json(const WeightedPoint& p) {
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(cplx(c));
    return json{{"weights", p.weights}, {"coords", coords}};
}

Complex parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return Complex(std::stod(s), 0.0);
        return Complex(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
    } catch (const std::exception&) {
        throw InputError("cannot parse complex value '" + s + "' (expected re or re,im)");
    }
}

struct KappaFlags {
    std::string tau, z, u;
    bool given() const { return !tau.empty() || !z.empty() || !u.empty(); }
    SiegelPoint point() const {
        if (tau.empty() || z.empty() || u.empty())
            throw InputError("--tau, --z and --u must all be given");
        return validate_siegel_point(parse_complex(tau), parse_complex(z), parse_complex(u));
    }
};

struct ParamFlags {
    std::string reals;     // --params a,b,g,d
    std::string as_json;   // --params-json [[re,im],...]
    std::string wp;        // --wp {"weights":[...],"coords":[...]}

    bool given() const { return !reals.empty() || !as_json.empty() || !wp.empty(); }

    k3::K3Params params() const {
        if (!reals.empty()) {
            std::array<double, 4> v{};
            std::string rest = reals;
            for (int i = 0; i < 4; ++i) {
                const auto comma = rest.find(',');
                const std::string tok = rest.substr(0, comma);
                try {
                    v[i] = std::stod(tok);
                } catch (const std::exception&) {
                    throw InputError("cannot parse --params component '" + tok + "'");
                }
                if (i < 3) {
                    if (comma == std::string::npos)
                        throw InputError("--params needs four comma-separated values");
                    rest = rest.substr(comma + 1);
                }
            }
            return {v[0], v[1], v[2], v[3]};
        }
        json j;
        WeightedPoint point({Complex(1, 0)}, {1});
        try {
            if (!as_json.empty()) {
                j = json::parse(as_json);
                std::vector<Complex> coords;
                for (const auto& e : j) coords.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
                point = WeightedPoint(coords, {2, 3, 5, 6});
            } else {
                j = json::parse(wp);
                std::vector<Complex> coords;
                for (const auto& e : j.at("coords"))
                    coords.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
                point = wp_normalize(WeightedPoint(coords, j.at("weights").get<std::vector<int>>()));
            }
        } catch (const json::exception& e) {
            throw InputError(std::string("bad parameter JSON: ") + e.what());
        }
        if (point.size() != 4) throw InputError("parameter point needs four coordinates");
        return {point.coords[0], point.coords[1], point.coords[2], point.coords[3]};
    }
};

void emit(const json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

json suite_json(const suite::SuiteReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"id", c.id},
                              {"status", c.pass ? "PASS" : "FAIL"},
                              {"detail", c.detail},
                              {"millis", c.millis}});
    return json{{"checks", checks}, {"all_pass", rep.all_pass}, {"millis", rep.total_millis}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k3atlas: Siegel modular forms, the quartic K3 family, and the exact Kummer-side verification chain"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    KappaFlags kap;
    ParamFlags par;
    double eps = 1e-12;
    double tol = 1e-9;
    int samples = 25;
    std::uint64_t seed = 7;
    int jobs = 1;
    bool pretty = false;
    std::string suite_kind = "all";

    auto add_kappa = [&](CLI::App* cmd) {
        cmd->add_option("--tau", kap.tau, "tau as re,im");
        cmd->add_option("--z", kap.z, "z as re,im");
        cmd->add_option("--u", kap.u, "u as re,im");
    };
    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--params", par.reals, "alpha,beta,gamma,delta (real values)");
        cmd->add_option("--params-json", par.as_json, "four complex values [[re,im],...]");
        cmd->add_option("--wp", par.wp, "weighted point {\"weights\":[...],\"coords\":[[re,im],...]}");
    };
    app.add_option("--eps", eps, "theta/series truncation target");
    app.add_option("--tol", tol, "comparison tolerance");
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_flag("--json", [](std::int64_t) {}, "emit JSON (default)");

    auto* cmd_forms = app.add_subcommand("forms", "evaluate E4, E6, C5, C10, C12 at a period point");
    add_kappa(cmd_forms);
    auto* cmd_invert = app.add_subcommand("invert-period", "inverse period map to WP(2,3,5,6)");
    add_kappa(cmd_invert);
    auto* cmd_ic = app.add_subcommand("igusa-clebsch", "Igusa-Clebsch invariants from parameters or a period point");
    add_kappa(cmd_ic);
    add_params(cmd_ic);
    auto* cmd_fib = app.add_subcommand("fibration", "fibration/fiber-type report for parameters");
    add_params(cmd_fib);
    auto* cmd_split = app.add_subcommand("split", "j-invariant pair in the gamma = 0 case");
    add_params(cmd_split);
    add_kappa(cmd_split);
    auto* cmd_kummer = app.add_subcommand("kummer", "fundamental theta quadruple and Hudson coefficients at a period point");
    add_kappa(cmd_kummer);
    auto* cmd_verify = app.add_subcommand("verify", "run the verification suites");
    cmd_verify->add_option("--suite", suite_kind, "exact | numeric | all")
        ->check(CLI::IsMember({"exact", "numeric", "all"}));
    cmd_verify->add_option("--samples", samples, "numeric sweep sample count")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", seed, "numeric sweep seed");
    cmd_verify->add_option("--jobs", jobs, "max concurrent suite items")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_forms->parsed()) {
            const auto f = forms::evaluate_forms(kap.point(), eps);
            const auto cc = forms::cusp_cross_check(kap.point(), eps);
            emit(json{{"E4", cplx(f.E4)},
                      {"E6", cplx(f.E6)},
                      {"C5", cplx(f.C5)},
                      {"C10", cplx(f.C10)},
                      {"C12", cplx(f.C12)},
                      {"route_diagnostics",
                       {{"rel_c10", cc.rel_c10}, {"rel_c12", cc.rel_c12}, {"rel_c5_sq", cc.rel_c5sq},
                        {"pass", cc.pass}}}},
                 pretty);
            return cc.pass ? 0 : 1;
        }
        if (cmd_invert->parsed()) {
            const auto ip = k3::inverse_period(kap.point(), eps);
            json j = wp_json(ip.point);
            j["h1"] = ip.h1;
            j["normalized"] = wp_json(wp_normalize(ip.point));
            emit(j, pretty);
            return 0;
        }
        if (cmd_ic->parsed()) {
            k3::IgusaClebsch ic{};
            if (par.given()) {
                ic = k3::ic_from_params(par.params());
            } else if (kap.given()) {
                ic = k3::ic_from_forms(kap.point(), eps);
            } else {
                throw InputError("igusa-clebsch needs --params/--params-json/--wp or --tau/--z/--u");
            }
            emit(json{{"A", cplx(ic.A)}, {"B", cplx(ic.B)}, {"C", cplx(ic.C)}, {"D", cplx(ic.D)},
                      {"weights", {2, 4, 6, 10}}},
                 pretty);
            return 0;
        }
        if (cmd_fib->parsed()) {
            if (!par.given()) throw InputError("fibration needs parameters");
            const auto r = k3::fiber_report(par.params(), tol);
            emit(json{{"standard", {{"at_0", r.standard_at_0}, {"at_infinity", r.standard_at_infinity}}},
                      {"alternate",
                       {{"at_infinity", r.alternate_at_infinity},
                        {"extra_fiber", r.has_extra_fiber},
                        {"extra_fiber_type", r.extra_fiber_type},
                        {"i2_iii_discriminant", cplx(r.i2_iii_discriminant)}}},
                      {"discriminant_flags",
                       {{"d1", r.on_d1},
                        {"d4_value", cplx(r.d4_value)},
                        {"d4", r.on_d4},
                        {"overlap", r.on_overlap}}},
                      {"factorization",
                       {{"standard_quintic_cofactor",
                         {cplx(r.standard_quintic_cofactor[0]), cplx(r.standard_quintic_cofactor[1]),
                          cplx(r.standard_quintic_cofactor[2]), cplx(r.standard_quintic_cofactor[3]),
                          cplx(r.standard_quintic_cofactor[4]), cplx(r.standard_quintic_cofactor[5])}},
                        {"alternate_sextic_cofactor",
                         {cplx(r.alternate_sextic_cofactor[0]), cplx(r.alternate_sextic_cofactor[1]),
                          cplx(r.alternate_sextic_cofactor[2]), cplx(r.alternate_sextic_cofactor[3]),
                          cplx(r.alternate_sextic_cofactor[4]), cplx(r.alternate_sextic_cofactor[5]),
                          cplx(r.alternate_sextic_cofactor[6])}}}}},
                 pretty);
            return 0;
        }
        if (cmd_split->parsed()) {
            k3::K3Params p{};
            if (par.given()) {
                p = par.params();
            } else if (kap.given()) {
                const auto ip = k3::inverse_period(kap.point(), eps);
                if (!ip.h1) throw InputError("period point is not on the product locus (gamma != 0)");
                p = ip.params();
                p.gamma = Complex(0.0, 0.0);
            } else {
                throw InputError("split needs parameters or a period point");
            }
            const auto [j1, j2] = k3::split_j_pair(p);
            emit(json{{"j", {cplx(j1), cplx(j2)}}, {"normalization", "classical (j(i) = 1728)"}}, pretty);
            return 0;
        }
        if (cmd_kummer->parsed()) {
            const auto ft = theta::fundamental_thetas(kap.point(), eps);
            const auto co = kummer::hudson_coefficients({ft.a, ft.b, ft.c, ft.d});
            json table = json::array();
            for (int i = 0; i < 10; ++i) {
                const auto& m = theta::even_characteristics()[i];
                table.push_back(json{{"char", {m.u2[0], m.u2[1], m.v2[0], m.v2[1]}},
                                     {"value", cplx(ft.even_table[i])}});
            }
            emit(json{{"fundamental", {cplx(ft.a), cplx(ft.b), cplx(ft.c), cplx(ft.d)}},
                      {"even_table", table},
                      {"hudson", {{"A", cplx(co[0])}, {"B", cplx(co[1])}, {"C", cplx(co[2])},
                                  {"D", cplx(co[3])}}}},
                 pretty);
            return 0;
        }
        if (cmd_verify->parsed()) {
            suite::SuiteReport rep;
            if (suite_kind == "exact")
                rep = suite::run_exact_suite(jobs);
            else if (suite_kind == "numeric")
                rep = suite::run_numeric_suite(samples, seed, eps, jobs);
            else
                rep = suite::run_all(samples, seed, eps, jobs);
            emit(suite_json(rep), pretty);
            return rep.all_pass ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
