#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "filtration.hpp"
#include "monomial_ideal.hpp"

namespace vnum {

/// Shape of random monomial ideals: 1..max_generators generators, each of
/// total degree 1..max_degree spread uniformly over n variables.
struct RandomIdealShape {
    std::size_t n = 3;
    std::size_t max_generators = 4;
    Degree max_degree = 4;
};

inline ExponentVector random_monomial(std::mt19937_64& rng, std::size_t n, Degree degree) {
    ExponentVector v(n);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    for (Degree i = 0; i < degree; ++i) ++v[var(rng)];
    return v;
}

/// A random proper non-zero monomial ideal. The number m of minimal
/// generators is drawn first and monomials are added until it is reached;
/// rings too small to hold m incomparable monomials settle for fewer.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, const RandomIdealShape& shape) {
    if (shape.n == 0 || shape.max_generators == 0 || shape.max_degree == 0)
        throw UndefinedOperation("random ideal shape must be positive");
    std::uniform_int_distribution<std::size_t> count(1, shape.max_generators);
    std::uniform_int_distribution<Degree> deg(1, shape.max_degree);
    const std::size_t m = count(rng);
    std::vector<ExponentVector> gens;
    for (std::size_t attempt = 0; gens.size() < m && attempt < 50 * m; ++attempt) {
        const auto g = random_monomial(rng, shape.n, deg(rng));
        const bool comparable = std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& h) {
            return h.divides(g) || g.divides(h);
        });
        if (!comparable) gens.push_back(g);
    }
    return minimalize(shape.n, std::move(gens));
}

enum class ExperimentKind { monotonicity, max_limit_conjecture, vstab_vs_astab };

inline std::optional<ExperimentKind> parse_experiment(const std::string& name) {
    if (name == "monotonicity") return ExperimentKind::monotonicity;
    if (name == "max-limit-conjecture") return ExperimentKind::max_limit_conjecture;
    if (name == "vstab-vs-astab") return ExperimentKind::vstab_vs_astab;
    return std::nullopt;
}

/// Outcome on one ideal. `verdict` is "confirm", "violate" or "inconclusive"
/// except where noted; the other fields carry what was computed.
struct ExperimentSample {
    MonomialIdeal ideal;
    std::string verdict;
    std::vector<Degree> v_values;
    std::vector<std::pair<MonomialPrime, Rational>> limit_slopes;
    std::optional<unsigned> vstab;
    std::optional<unsigned> astab;
    std::string note;
};

/// Is v(I^k) < v(I^{k+1}) at every step of the window?
inline ExperimentSample run_monotonicity(const MonomialIdeal& I, const Window& w) {
    ExperimentSample s{I, "confirm", {}, {}, {}, {}, {}};
    const auto F = Filtration::powers(I);
    for (unsigned k = 1; k <= w.kmax; ++k) s.v_values.push_back(F.v(k).value);
    for (std::size_t i = 1; i < s.v_values.size(); ++i)
        if (s.v_values[i] <= s.v_values[i - 1]) {
            s.verdict = "violate";
            s.note = "v(I^" + std::to_string(i + 1) + ") <= v(I^" + std::to_string(i) + ")";
            break;
        }
    return s;
}

/// For p ∈ Max^∞(I): is lim v_p(I^k)/k = α(I)? The limit is read as the
/// slope of the fitted v_p tail.
inline ExperimentSample run_max_limit(const MonomialIdeal& I, const Window& w) {
    ExperimentSample s{I, "confirm", {}, {}, {}, {}, {}};
    const auto F = Filtration::powers(I);
    const auto stable = stable_primes(F, w);
    if (!stable.stabilized) {
        s.verdict = "inconclusive";
        s.note = "not stabilized within kmax";
        return s;
    }
    const Rational a(static_cast<long long>(alpha(I)));
    for (const auto& p : stable_max(stable)) {
        const auto fit = v_function_p(F, p, w);
        if (!fit.tail) {
            s.verdict = "inconclusive";
            s.note = fit.failure;
            return s;
        }
        const Rational slope = fit.tail->branches.front().slope;
        s.limit_slopes.emplace_back(p, slope);
        if (slope != a && s.verdict == "confirm") {
            s.verdict = "violate";
            s.note = "slope differs from alpha at " + to_string(p);
        }
    }
    return s;
}

/// Records how the two window-bounded indices compare; the verdict is one
/// of "vstab<astab", "vstab=astab", "vstab>astab" or "inconclusive".
inline ExperimentSample run_vstab_vs_astab(const MonomialIdeal& I, const Window& w) {
    ExperimentSample s{I, "inconclusive", {}, {}, {}, {}, {}};
    const auto idx = stability_indices(Filtration::powers(I), w);
    s.vstab = idx.vstab;
    s.astab = idx.astab;
    if (!idx.vstab || !idx.astab) {
        s.note = idx.warnings.empty() ? "indices unavailable" : idx.warnings.front();
        return s;
    }
    s.verdict = *idx.vstab < *idx.astab ? "vstab<astab" : (*idx.vstab == *idx.astab ? "vstab=astab" : "vstab>astab");
    return s;
}

inline ExperimentSample run_experiment(ExperimentKind kind, const MonomialIdeal& I, const Window& w) {
    switch (kind) {
    case ExperimentKind::monotonicity: return run_monotonicity(I, w);
    case ExperimentKind::max_limit_conjecture: return run_max_limit(I, w);
    case ExperimentKind::vstab_vs_astab: return run_vstab_vs_astab(I, w);
    }
    throw UndefinedOperation("unknown experiment");
}

} // namespace vnum
