// vnum: command-line front end to the v-number library.
//
// Exit codes: 0 success, 1 input error, 2 a window did not settle (partial
// results are still printed).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vnum/vnum.hpp"

namespace {

using vnum::Json;

constexpr int kExitInput = 1;
constexpr int kExitUnsettled = 2;

struct Options {
    std::string ideal;
    std::size_t n = 0;
    std::string format = "text";
    vnum::Window window;
    bool closure = false;
    std::string prime;
    unsigned k = 1;
    std::string b;
    std::string variant = "power";
    bool oracle = false;
    std::string experiment;
    unsigned samples = 20;
    std::uint64_t seed = 1;
    std::size_t max_generators = 4;
    vnum::Degree max_degree = 3;
};

struct Outcome {
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<std::string> warnings;
    std::string text;
    bool uses_window = false;
    int exit_code = 0;
};

vnum::MonomialIdeal read_ideal(const std::string& text, std::size_t n) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw vnum::ParseError(e.what(), e.byte > 0 ? e.byte - 1 : 0);
        }
        auto I = vnum::ideal_from_json(j);
        if (I.ambient() != n) throw vnum::DimensionMismatch(n, I.ambient());
        return I;
    }
    return vnum::parse_ideal(text, n);
}

vnum::Filtration filtration_of(const Options& o, const vnum::MonomialIdeal& I) {
    return o.closure ? vnum::Filtration::closure(I) : vnum::Filtration::powers(I);
}

Json ideal_inputs(const Options& o, const vnum::MonomialIdeal& I) {
    Json in{{"n", o.n}, {"ideal", vnum::to_json(I)}, {"idealText", vnum::to_string(I)}};
    return in;
}

vnum::MonomialPrime required_prime(const Options& o) {
    if (o.prime.empty()) throw vnum::ParseError("--p is required", 0);
    return vnum::parse_prime(o.prime, o.n);
}

std::string tail_text(const vnum::TailFit& f) {
    if (!f.tail) return "no tail: " + f.failure + "\n";
    std::ostringstream s;
    for (const auto& b : f.tail->branches) {
        if (f.tail->period > 1) s << "k = " << b.residue << " mod " << f.tail->period << ": ";
        s << "{" << b.slope << "," << b.intercept << "}\n";
    }
    s << "stabilized at k = " << f.tail->stabilization_index << "\n";
    if (!f.detected) s << "warning: " << f.failure << "\n";
    return s.str();
}

std::string primes_text(const vnum::PrimeSet& primes) {
    std::string out;
    for (const auto& p : primes) out += vnum::to_string(p) + "\n";
    return out;
}

void mark_unsettled(Outcome& out, const std::string& why) {
    out.warnings.push_back(why);
    out.exit_code = kExitUnsettled;
}

Outcome cmd_stable_primes(const Options& o, bool only_max) {
    const auto I = read_ideal(o.ideal, o.n);
    Outcome out;
    out.inputs = ideal_inputs(o, I);
    out.inputs["filtration"] = o.closure ? "closure" : "powers";
    out.uses_window = true;
    const auto s = vnum::stable_primes(filtration_of(o, I), o.window);
    if (!s.stabilized) {
        mark_unsettled(out, "not stabilized within kmax");
        out.outputs = vnum::to_json(s);
        out.text = "not stabilized within kmax\n";
        return out;
    }
    if (only_max) {
        const auto m = vnum::stable_max(s);
        out.outputs = Json{{"primes", vnum::to_json(m)}, {"stabilizedAt", s.stabilized_at}, {"period", s.period}};
        out.text = primes_text(m);
    } else {
        out.outputs = vnum::to_json(s);
        out.text = primes_text(s.primes);
    }
    return out;
}

Outcome cmd_is_stable_prime(const Options& o) {
    const auto I = read_ideal(o.ideal, o.n);
    const auto p = required_prime(o);
    Outcome out;
    out.inputs = ideal_inputs(o, I);
    out.inputs["p"] = vnum::to_json(p);
    out.inputs["filtration"] = o.closure ? "closure" : "powers";
    out.uses_window = true;
    const auto e = vnum::is_stable_prime(filtration_of(o, I), p, o.window);
    out.outputs = vnum::to_json(e);
    if (!e.stabilized) {
        mark_unsettled(out, "not stabilized within kmax");
        out.text = "not stabilized within kmax\n";
    } else {
        out.text = std::string(e.stable ? "true" : "false") + " (k = " + std::to_string(e.first_k) + ".." +
                   std::to_string(e.last_k) + ")\n";
    }
    return out;
}

Outcome cmd_vnumber(const Options& o) {
    const auto I = read_ideal(o.ideal, o.n);
    Outcome out;
    out.inputs = ideal_inputs(o, I);
    const auto r = vnum::v_number(I);
    out.outputs = vnum::to_json(r);
    out.outputs["ass"] = vnum::to_json(vnum::associated_primes(I));
    out.text = std::to_string(r.value) + " (witness " + vnum::to_string(r.witness) + ", prime " +
               vnum::to_string(r.prime) + ")\n";
    return out;
}

Outcome cmd_vnumber_p(const Options& o) {
    const auto I = read_ideal(o.ideal, o.n);
    const auto p = required_prime(o);
    Outcome out;
    out.inputs = ideal_inputs(o, I);
    out.inputs["p"] = vnum::to_json(p);
    const auto r = vnum::v_p(I, p, vnum::associated_primes(I));
    out.outputs = vnum::to_json(r);
    out.text = std::to_string(r.value) + " (witness " + vnum::to_string(r.witness) + ")\n";
    return out;
}

Outcome cmd_soc(const Options& o) {
    const auto I = read_ideal(o.ideal, o.n);
    const auto p = required_prime(o);
    Outcome out;
    out.inputs = ideal_inputs(o, I);
    out.inputs["p"] = vnum::to_json(p);
    out.inputs["k"] = o.k;
    out.inputs["filtration"] = o.closure ? "closure" : "powers";
    out.uses_window = true;
    const auto F = filtration_of(o, I);
    const auto s = vnum::stable_primes(F, o.window);
    if (!s.stabilized) {
        mark_unsettled(out, "not stabilized within kmax");
        out.text = "not stabilized within kmax\n";
        return out;
    }
    const auto soc = vnum::soc_component(F, p, o.k, s.primes);
    out.outputs = vnum::to_json(soc);
    out.text = soc.alpha ? "alpha " + std::to_string(soc.alpha->degree) + " (witness " +
                               vnum::to_string(soc.alpha->witness) + ")\n"
                         : "zero module\n";
    return out;
}

Outcome cmd_vfunction(const Options& o, bool at_prime) {
    const auto I = read_ideal(o.ideal, o.n);
    Outcome out;
    out.inputs = ideal_inputs(o, I);
    out.inputs["filtration"] = o.closure ? "closure" : "powers";
    out.uses_window = true;
    const auto F = filtration_of(o, I);
    vnum::TailFit fit;
    if (at_prime) {
        const auto p = required_prime(o);
        out.inputs["p"] = vnum::to_json(p);
        fit = vnum::v_function_p(F, p, o.window);
    } else {
        fit = vnum::v_function(F, o.window);
    }
    out.outputs = vnum::to_json(fit);
    out.text = tail_text(fit);
    if (!fit.detected) mark_unsettled(out, fit.failure);
    return out;
}

Outcome cmd_stability_indices(const Options& o) {
    const auto I = read_ideal(o.ideal, o.n);
    Outcome out;
    out.inputs = ideal_inputs(o, I);
    out.uses_window = true;
    const auto s = vnum::stability_indices(vnum::Filtration::powers(I), o.window);
    out.outputs = vnum::to_json(s);
    auto opt = [](const std::optional<unsigned>& v) { return v ? std::to_string(*v) : std::string("?"); };
    out.text = "vstab " + opt(s.vstab) + "\nastab " + opt(s.astab) + "\n";
    for (const auto& [p, t] : s.vstab_p) out.text += "vstab " + vnum::to_string(p) + " " + std::to_string(t) + "\n";
    for (const auto& [p, t] : s.astab_p) out.text += "astab " + vnum::to_string(p) + " " + std::to_string(t) + "\n";
    for (const auto& w : s.warnings) out.warnings.push_back(w);
    if (!s.complete) out.exit_code = kExitUnsettled;
    return out;
}

Outcome cmd_rees_map(const Options& o) {
    const auto I = read_ideal(o.ideal, o.n);
    Outcome out;
    out.inputs = ideal_inputs(o, I);
    const auto r = vnum::rees_map_description(I);
    out.outputs = vnum::to_json(r);
    for (std::size_t j = 0; j < r.images.size(); ++j)
        out.text += "y" + std::to_string(j + 1) + " -> " + vnum::to_string(r.images[j]) + "*t  bideg (" +
                    std::to_string(r.y_bidegrees[j].first) + ",1)\n";
    return out;
}

Outcome cmd_closure_power(const Options& o) {
    const auto I = read_ideal(o.ideal, o.n);
    Outcome out;
    out.inputs = ideal_inputs(o, I);
    out.inputs["k"] = o.k;
    const auto C = vnum::closure_power(I, o.k);
    out.outputs = Json{{"ideal", vnum::to_json(C)}, {"idealText", vnum::to_string(C)}};
    out.text = vnum::to_string(C) + "\n";
    return out;
}

vnum::IPInstance read_instance(const Options& o, bool needs_k) {
    vnum::IPInstance inst;
    const auto first = o.ideal.find_first_not_of(" \t\n");
    const bool json = first != std::string::npos && o.ideal[first] == '{';
    Json j;
    if (json) {
        try {
            j = Json::parse(o.ideal);
        } catch (const Json::parse_error& e) {
            throw vnum::ParseError(e.what(), e.byte > 0 ? e.byte - 1 : 0);
        }
    }
    if (json && j.contains("A")) {
        inst = vnum::ip_instance_from_json(j);
        if (inst.n != o.n) throw vnum::DimensionMismatch(o.n, inst.n);
    } else {
        const auto I = read_ideal(o.ideal, o.n);
        inst.n = o.n;
        inst.A = I.generators();
        if (o.b.empty()) throw vnum::ParseError("--b is required", 0);
        inst.B = vnum::parse_prime(o.b, o.n).support();
        inst.variant = o.variant == "closure" ? vnum::IPVariant::closure : vnum::IPVariant::power;
        inst.k = o.k;
    }
    if (needs_k && inst.k == 0) throw vnum::ParseError("k must be positive", 0);
    inst.validate();
    return inst;
}

Outcome cmd_ip_solve(const Options& o) {
    const auto inst = read_instance(o, true);
    Outcome out;
    out.inputs = vnum::to_json(inst);
    const auto sol = vnum::solve_ip(inst);
    out.outputs = Json{{"feasible", sol.has_value()}, {"solution", sol ? vnum::to_json(*sol) : Json(nullptr)}};
    out.text = sol ? "modulus " + std::to_string(sol->modulus) + " at c = " + vnum::to_string(sol->c) + "\n"
                   : "infeasible\n";
    if (o.oracle) {
        const auto bf = vnum::brute_force_ip(inst);
        out.outputs["bruteForce"] = Json{{"solution", bf.solution ? vnum::to_json(*bf.solution) : Json(nullptr)},
                                         {"boxLimited", bf.box_limited}};
        const bool agree = bf.solution.has_value() == sol.has_value() &&
                           (!sol || bf.solution->modulus == sol->modulus);
        out.outputs["routesAgree"] = agree;
        out.text += std::string("brute force ") + (agree ? "agrees" : "DISAGREES") + "\n";
        if (!agree) out.warnings.push_back("algebraic and brute-force routes disagree");
    }
    return out;
}

Outcome cmd_ip_law(const Options& o) {
    const auto inst = read_instance(o, false);
    Outcome out;
    out.inputs = vnum::to_json(inst);
    out.inputs.erase("k");
    out.uses_window = true;
    const auto law = vnum::asymptotic_law(inst.n, inst.A, inst.B, inst.variant, o.window);
    out.outputs = vnum::to_json(law);
    if (law.failure == "eventually infeasible") {
        out.text = "eventually infeasible\n";
    } else {
        out.text = tail_text(law.fit);
        if (!law.fit.detected) mark_unsettled(out, law.failure);
    }
    return out;
}

Outcome cmd_experiment(const Options& o) {
    const auto kind = vnum::parse_experiment(o.experiment);
    if (!kind) throw vnum::ParseError("unknown experiment '" + o.experiment + "'", 0);
    Outcome out;
    out.uses_window = true;
    out.inputs = Json{{"name", o.experiment}, {"n", o.n}};
    std::vector<vnum::MonomialIdeal> ideals;
    if (!o.ideal.empty()) {
        ideals.push_back(read_ideal(o.ideal, o.n));
        out.inputs["ideal"] = vnum::to_json(ideals.front());
    } else {
        out.inputs["samples"] = o.samples;
        out.inputs["seed"] = o.seed;
        out.inputs["maxGenerators"] = o.max_generators;
        out.inputs["maxDegree"] = o.max_degree;
        std::mt19937_64 rng(o.seed);
        const vnum::RandomIdealShape shape{o.n, o.max_generators, o.max_degree};
        for (unsigned i = 0; i < o.samples; ++i) ideals.push_back(vnum::random_ideal(rng, shape));
    }
    std::map<std::string, unsigned> counts;
    Json samples = Json::array();
    for (const auto& I : ideals) {
        const auto s = vnum::run_experiment(*kind, I, o.window);
        ++counts[s.verdict];
        // Every sample is kept for a single ideal; otherwise only the ones
        // that do not confirm, with enough data to reproduce them.
        if (ideals.size() == 1 || s.verdict != "confirm") samples.push_back(vnum::to_json(s));
    }
    Json c = Json::object();
    for (const auto& [k, v] : counts) c[k] = v;
    out.outputs = Json{{"counts", c}, {"samples", std::move(samples)}};
    for (const auto& [k, v] : counts) out.text += k + ": " + std::to_string(v) + "\n";
    return out;
}

void add_common(CLI::App* sub, Options& o, bool ideal_required = true) {
    auto* opt = sub->add_option("ideal", o.ideal, "Ideal as text (x1*x2, x2^3) or JSON {\"n\":..,\"gens\":..}");
    if (ideal_required) opt->required();
    sub->add_option("--n", o.n, "Number of variables x1..xn")->required()->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

void add_window(CLI::App* sub, Options& o) {
    sub->add_option("--kmax", o.window.kmax, "Largest level examined");
    sub->add_option("--window", o.window.width, "Number of trailing levels that must agree");
    sub->add_option("--period-max", o.window.period_max, "Largest period tried for closure filtrations");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"v-numbers, stable primes and asymptotic v-functions of monomial ideals"};
    app.require_subcommand(1);
    Options o;
    std::map<std::string, std::function<Outcome()>> run;

    auto filtration_cmd = [&](const std::string& name, const std::string& help, bool prime, bool k,
                              std::function<Outcome()> f) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, o);
        add_window(sub, o);
        sub->add_flag("--closure", o.closure, "Use the integral-closure filtration instead of ordinary powers");
        if (prime) sub->add_option("--p", o.prime, "Prime as 1-based variable indices, e.g. 1,2,4");
        if (k) sub->add_option("--k", o.k, "Level index")->required();
        run[name] = std::move(f);
    };
    filtration_cmd("stable-primes", "Ass^∞ of the filtration", false, false, [&] { return cmd_stable_primes(o, false); });
    filtration_cmd("stable-max", "Inclusion-maximal stable primes", false, false, [&] { return cmd_stable_primes(o, true); });
    filtration_cmd("is-stable-prime", "Whether p is associated to infinitely many levels", true, false,
                   [&] { return cmd_is_stable_prime(o); });
    filtration_cmd("soc", "Socle component at level k", true, true, [&] { return cmd_soc(o); });
    filtration_cmd("vfunction", "Tail of k -> v(I_[k])", false, false, [&] { return cmd_vfunction(o, false); });
    filtration_cmd("vfunction-p", "Tail of k -> v_p(I_[k])", true, false, [&] { return cmd_vfunction(o, true); });

    auto* si = app.add_subcommand("stability-indices", "vstab, v_p-stab, astab, astab_p of the powers");
    add_common(si, o);
    add_window(si, o);
    run["stability-indices"] = [&] { return cmd_stability_indices(o); };

    auto* vn = app.add_subcommand("vnumber", "v(I) with witness");
    add_common(vn, o);
    run["vnumber"] = [&] { return cmd_vnumber(o); };

    auto* vp = app.add_subcommand("vnumber-p", "v_p(I) with witness");
    add_common(vp, o);
    vp->add_option("--p", o.prime, "Prime as 1-based variable indices")->required();
    run["vnumber-p"] = [&] { return cmd_vnumber_p(o); };

    auto* rm = app.add_subcommand("rees-map", "Description of the Rees map");
    add_common(rm, o);
    run["rees-map"] = [&] { return cmd_rees_map(o); };

    auto* cp = app.add_subcommand("closure-power", "Generators of the integral closure of I^k");
    add_common(cp, o);
    cp->add_option("--k", o.k, "Power")->required()->check(CLI::PositiveNumber);
    run["closure-power"] = [&] { return cmd_closure_power(o); };

    auto ip_cmd = [&](const std::string& name, const std::string& help, bool k, std::function<Outcome()> f) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, o);
        sub->add_option("--b", o.b, "Variables of B as 1-based indices");
        sub->add_option("--variant", o.variant, "power or closure")->check(CLI::IsMember({"power", "closure"}));
        if (k) {
            sub->add_option("--k", o.k, "Level index")->check(CLI::PositiveNumber);
            sub->add_flag("--oracle", o.oracle, "Also run the brute-force solver");
        } else {
            add_window(sub, o);
        }
        run[name] = std::move(f);
    };
    ip_cmd("ip-solve", "Optimal solution of the integer program at level k", true, [&] { return cmd_ip_solve(o); });
    ip_cmd("ip-law", "Optimal modulus as a function of k", false, [&] { return cmd_ip_law(o); });

    auto* ex = app.add_subcommand("experiment", "Evidence for open questions on sampled ideals");
    ex->add_option("name", o.experiment, "monotonicity | max-limit-conjecture | vstab-vs-astab")->required();
    add_common(ex, o, false);
    add_window(ex, o);
    ex->add_option("--samples", o.samples, "Number of random ideals");
    ex->add_option("--seed", o.seed, "Random seed");
    ex->add_option("--max-gens", o.max_generators, "Largest number of generators")->check(CLI::PositiveNumber);
    ex->add_option("--max-degree", o.max_degree, "Largest generator degree")->check(CLI::PositiveNumber);
    run["experiment"] = [&] { return cmd_experiment(o); };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    std::string error;
    try {
        o.window.validate();
        out = run.at(name)();
    } catch (const vnum::Error& e) {
        error = e.what();
    } catch (const Json::exception& e) {
        error = e.what();
    }
    if (!error.empty()) {
        out.exit_code = kExitInput;
        out.outputs = nullptr;
        out.text.clear();
        if (out.inputs.empty()) out.inputs = Json{{"n", o.n}, {"ideal", o.ideal}};
        std::cerr << "error: " << error << "\n";
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (o.format == "json") {
        Json report{{"command", name}, {"inputs", out.inputs}};
        if (out.uses_window) report["window"] = vnum::to_json(o.window);
        report["outputs"] = out.outputs;
        if (!error.empty()) report["error"] = error;
        report["warnings"] = out.warnings;
        report["exitCode"] = out.exit_code;
        report["wallTimeMs"] = ms;
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << out.text;
        for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
    }
    return out.exit_code;
}
