#pragma once

#include <string>

#include "experiments.hpp"
#include "filtration.hpp"
#include "integer_program.hpp"
#include "io.hpp"
#include "json_io.hpp"
#include "vnumber.hpp"

namespace vnum {

/// Integers stay numbers; proper fractions become "p/q" strings.
inline Json to_json(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1) {
        const auto num = boost::multiprecision::numerator(r);
        if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
            return static_cast<long long>(num);
    }
    return r.str();
}

inline Json to_json(const Window& w) {
    return Json{{"kmax", w.kmax}, {"window", w.width}, {"periodMax", w.period_max}};
}

inline Json to_json(const VResult& r) {
    return Json{{"value", r.value}, {"witness", to_json(r.witness)}, {"witnessText", to_string(r.witness)},
                {"prime", to_json(r.prime)}};
}

inline Json to_json(const AssStabilization& s) {
    Json out{{"stabilized", s.stabilized}};
    if (s.stabilized) {
        out["period"] = s.period;
        out["stabilizedAt"] = s.stabilized_at;
        out["primes"] = to_json(s.primes);
        Json residues = Json::array();
        for (std::size_t j = 0; j < s.per_residue.size(); ++j)
            residues.push_back(Json{{"residue", j}, {"primes", to_json(s.per_residue[j])}});
        out["perResidue"] = std::move(residues);
    }
    Json levels = Json::array();
    for (std::size_t k = 0; k < s.levels.size(); ++k)
        levels.push_back(Json{{"k", k + 1}, {"primes", to_json(s.levels[k])}});
    out["levels"] = std::move(levels);
    out["window"] = to_json(s.window);
    return out;
}

inline Json to_json(const StablePrimeEvidence& e) {
    Json membership = Json::array();
    for (bool b : e.membership) membership.push_back(b);
    Json out{{"stabilized", e.stabilized}, {"stable", e.stable}};
    if (e.stabilized) {
        out["period"] = e.period;
        out["stabilizedAt"] = e.stabilized_at;
    }
    out["firstK"] = e.first_k;
    out["lastK"] = e.last_k;
    out["membership"] = std::move(membership);
    return out;
}

inline Json to_json(const QuasiLinearTail& t) {
    Json branches = Json::array();
    for (const auto& b : t.branches)
        branches.push_back(Json{{"residue", b.residue}, {"slope", to_json(b.slope)}, {"intercept", to_json(b.intercept)}});
    return Json{{"period", t.period}, {"branches", std::move(branches)}, {"stabilizedAt", t.stabilization_index},
                {"window", to_json(t.window)}};
}

inline Json to_json(const TailFit& f) {
    Json samples = Json::array();
    for (std::size_t k = 0; k < f.samples.size(); ++k)
        samples.push_back(Json{{"k", k + 1}, {"value", f.samples[k] ? Json(*f.samples[k]) : Json(nullptr)}});
    Json out{{"detected", f.detected}, {"slopeLawHolds", f.slope_law_holds}};
    if (!f.failure.empty()) out["failure"] = f.failure;
    out["tail"] = f.tail ? to_json(*f.tail) : Json(nullptr);
    out["samples"] = std::move(samples);
    out["stablePrimes"] = f.ass.stabilized ? to_json(f.ass.primes) : Json(nullptr);
    out["assStabilizedAt"] = f.ass.stabilized ? Json(f.ass.stabilized_at) : Json(nullptr);
    return out;
}

inline Json to_json(const SocComponent& s) {
    Json out{{"k", s.k}, {"numerator", to_json(s.numerator)}, {"denominator", to_json(s.denominator)}};
    if (s.alpha)
        out["alpha"] = Json{{"value", s.alpha->degree}, {"witness", to_json(s.alpha->witness)},
                            {"witnessText", to_string(s.alpha->witness)}};
    else
        out["alpha"] = nullptr;
    return out;
}

inline Json to_json(const StabilityIndices& s) {
    auto per_prime = [](const std::map<MonomialPrime, unsigned>& m) {
        Json out = Json::array();
        for (const auto& [p, t] : m) out.push_back(Json{{"prime", to_json(p)}, {"index", t}});
        return out;
    };
    Json warnings = Json::array();
    for (const auto& w : s.warnings) warnings.push_back(w);
    return Json{{"complete", s.complete},
                {"vstab", s.vstab ? Json(*s.vstab) : Json(nullptr)},
                {"vstabP", per_prime(s.vstab_p)},
                {"astab", s.astab ? Json(*s.astab) : Json(nullptr)},
                {"astabP", per_prime(s.astab_p)},
                {"caveat", "empirical (window-bounded)"},
                {"warnings", std::move(warnings)}};
}

inline Json to_json(const ReesMapDescription& r) {
    Json source = Json::array();
    for (std::size_t i = 0; i < r.n; ++i) source.push_back("x" + std::to_string(i + 1));
    Json y = Json::array();
    for (std::size_t j = 0; j < r.images.size(); ++j) {
        const auto name = "y" + std::to_string(j + 1);
        source.push_back(name);
        y.push_back(Json{{"variable", name},
                         {"image", to_string(r.images[j]) + "*t"},
                         {"exponent", to_json(r.images[j])},
                         {"bidegree", Json::array({r.y_bidegrees[j].first, r.y_bidegrees[j].second})}});
    }
    Json target = Json::array();
    for (std::size_t i = 0; i < r.n; ++i) target.push_back("x" + std::to_string(i + 1));
    target.push_back("t");
    return Json{{"source", std::move(source)},
                {"target", std::move(target)},
                {"xBidegree", Json::array({1, 0})},
                {"images", std::move(y)}};
}

inline Json to_json(const IPInstance& inst) {
    Json A = Json::array();
    for (const auto& a : inst.A) A.push_back(to_json(a));
    Json B = Json::array();
    for (std::size_t i : inst.B) B.push_back(i + 1);
    return Json{{"n", inst.n}, {"A", std::move(A)}, {"B", std::move(B)}, {"k", inst.k}, {"variant", to_string(inst.variant)}};
}

/// Instance JSON: {"n", "A": [[...]], "B": [1-based indices], "k", "variant"}.
/// `k` may be absent when the caller supplies it.
inline IPInstance ip_instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("A") || !j.contains("B"))
        throw ParseError("instance JSON needs \"n\", \"A\" and \"B\"", 0);
    IPInstance inst;
    inst.n = j.at("n").get<std::size_t>();
    for (const auto& row : j.at("A")) {
        if (!row.is_array() || row.size() != inst.n) throw DimensionMismatch(inst.n, row.is_array() ? row.size() : 0);
        inst.A.emplace_back(row.get<std::vector<Exponent>>());
    }
    for (const auto& x : j.at("B")) {
        const auto v = x.get<std::size_t>();
        if (v == 0 || v > inst.n) throw ParseError("unknown variable index " + std::to_string(v), 0);
        inst.B.push_back(v - 1);
    }
    std::sort(inst.B.begin(), inst.B.end());
    inst.B.erase(std::unique(inst.B.begin(), inst.B.end()), inst.B.end());
    if (j.contains("k")) inst.k = j.at("k").get<unsigned>();
    if (j.contains("variant")) {
        const auto v = j.at("variant").get<std::string>();
        if (v == "power") inst.variant = IPVariant::power;
        else if (v == "closure") inst.variant = IPVariant::closure;
        else throw ParseError("variant must be \"power\" or \"closure\"", 0);
    }
    return inst;
}

inline Json to_json(const IPSolution& s) {
    return Json{{"c", to_json(s.c)}, {"monomial", to_string(s.c)}, {"modulus", s.modulus}, {"optimal", s.optimal}};
}

inline Json to_json(const IPLaw& law) {
    Json soc = Json::array();
    for (std::size_t k = 0; k < law.soc_nonzero.size(); ++k)
        soc.push_back(Json{{"k", k + 1}, {"nonzero", static_cast<bool>(law.soc_nonzero[k])}});
    Json out{{"eventuallyFeasible", law.eventually_feasible}};
    if (!law.failure.empty()) out["failure"] = law.failure;
    out["law"] = to_json(law.fit);
    out["socNonzero"] = std::move(soc);
    return out;
}

inline Json to_json(const ExperimentSample& s) {
    Json out{{"ideal", to_json(s.ideal)}, {"idealText", to_string(s.ideal)}, {"verdict", s.verdict}};
    if (!s.v_values.empty()) out["v"] = s.v_values;
    if (!s.limit_slopes.empty()) {
        Json slopes = Json::array();
        for (const auto& [p, a] : s.limit_slopes) slopes.push_back(Json{{"prime", to_json(p)}, {"slope", to_json(a)}});
        out["limitSlopes"] = std::move(slopes);
    }
    if (s.vstab) out["vstab"] = *s.vstab;
    if (s.astab) out["astab"] = *s.astab;
    if (!s.note.empty()) out["note"] = s.note;
    return out;
}

} // namespace vnum
