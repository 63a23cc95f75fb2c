#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "detail/enumerate.hpp"
#include "error.hpp"
#include "monomial_ideal.hpp"
#include "primary_decomposition.hpp"

namespace vnum {

/// v_p(I) together with a monomial f of that degree such that (I : f) = p.
struct VResult {
    Degree value = 0;
    ExponentVector witness;
    MonomialPrime prime;
};

/// Primes of `primes` strictly containing p.
inline PrimeSet primes_over(const MonomialPrime& p, const PrimeSet& primes) {
    PrimeSet out;
    for (const auto& q : primes)
        if (p.is_strict_subset_of(q)) out.push_back(q);
    return out;
}

/// Product of primes (R when the list is empty).
inline MonomialIdeal prime_product(std::size_t n, const PrimeSet& primes) {
    MonomialIdeal q = MonomialIdeal::unit(n);
    for (const auto& p : primes) q = ideal_product(q, p.as_ideal());
    return q;
}

/// Minimal supports of the generators of a product of primes, i.e. the
/// minimal sets meeting every prime. {∅} for the empty product.
inline std::vector<std::vector<std::size_t>> transversal_supports(std::size_t n, const PrimeSet& primes) {
    std::vector<ExponentVector> current{ExponentVector(n)};
    for (const auto& p : primes) {
        std::vector<ExponentVector> next;
        for (const auto& s : current)
            for (std::size_t i : p.support()) {
                ExponentVector t = s;
                t[i] = 1;
                next.push_back(std::move(t));
            }
        current = minimalize(n, std::move(next)).generators();
    }
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : current) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < n; ++i)
            if (s[i]) vars.push_back(i);
        out.push_back(std::move(vars));
    }
    return out;
}

namespace detail {

// Generators g with g[0] <= t, first coordinate dropped.
inline MonomialIdeal slice_first(const MonomialIdeal& I, Exponent t) {
    std::vector<ExponentVector> gens;
    for (const auto& g : I.generators()) {
        if (g[0] > t) continue;
        gens.emplace_back(std::vector<Exponent>(g.begin() + 1, g.end()));
    }
    return minimalize(I.ambient() - 1, std::move(gens));
}

struct MinDegreeSearch {
    std::optional<Degree> degree;
    std::vector<Exponent> point;
    std::vector<Exponent> prefix;

    // Least (degree, lex) monomial u lying in every ideal of `within` and
    // outside at least one ideal of `avoid`. Slices on the first remaining
    // variable with ascending values, so leaves are reached in lex order and
    // a leaf only replaces the incumbent when its degree is strictly smaller.
    // u_0 only needs to range over 0 and the first-variable exponents of the
    // `within` generators: between two such values raising u_0 helps no
    // membership and only costs degree.
    void run(std::vector<MonomialIdeal> avoid, const std::vector<MonomialIdeal>& within, Degree partial) {
        for (const auto& B : within)
            if (B.is_zero()) return;
        Degree bound = partial;
        for (const auto& B : within) bound = std::max(bound, partial + alpha(B));
        if (degree && bound >= *degree) return;

        // An ideal that contains some B can never be avoided.
        std::erase_if(avoid, [&](const MonomialIdeal& A) {
            return A.is_unit() || std::any_of(within.begin(), within.end(), [&](const MonomialIdeal& B) { return B.is_subset_of(A); });
        });
        if (avoid.empty()) return;

        const std::size_t d = avoid.front().ambient();
        if (d == 0) {
            // Every B is the unit ideal here and some A is the zero ideal.
            degree = partial;
            point = prefix;
            return;
        }

        std::vector<Exponent> values{0};
        for (const auto& B : within)
            for (const auto& g : B.generators()) values.push_back(g[0]);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());

        for (Exponent t : values) {
            if (degree && partial + t >= *degree) break;
            std::vector<MonomialIdeal> next_within, next_avoid;
            next_within.reserve(within.size());
            next_avoid.reserve(avoid.size());
            for (const auto& B : within) next_within.push_back(slice_first(B, t));
            for (const auto& A : avoid) next_avoid.push_back(slice_first(A, t));
            prefix.push_back(t);
            run(std::move(next_avoid), next_within, partial + t);
            prefix.pop_back();
        }
    }
};

} // namespace detail

/// v_p(I) = α((I:p) / ((I:p) ∩ (I : q^∞))), q the product of the primes of
/// `ass` strictly containing p (q = R if there are none).
///
/// The least-degree element of (I:p) outside (I : q^∞) is searched for
/// directly. (I:p) is represented by the colons (I : x_i), i ∈ p, and
/// (I : q^∞) = ∩_T (I : x_T^∞) over the minimal transversals T of the primes
/// above p, so u is outside the saturation iff it avoids some (I : x_T^∞).
/// `ass` must contain p and every associated prime of I strictly above p;
/// additional primes above p do not change the result.
inline VResult v_p(const MonomialIdeal& I, const MonomialPrime& p, const PrimeSet& ass);

namespace detail {

// v_p(I) if it is strictly below `bound`, nullopt otherwise.
inline std::optional<VResult> v_p_below(const MonomialIdeal& I, const MonomialPrime& p, const PrimeSet& ass,
                                        std::optional<Degree> bound) {
    require_same_dimension(I.ambient(), p.ambient());
    if (!contains_prime(ass, p)) throw NotAssociatedPrime();

    std::vector<MonomialIdeal> colons;
    for (std::size_t i : p.support()) colons.push_back(colon(I, ExponentVector::unit(I.ambient(), i)));
    std::vector<MonomialIdeal> parts;
    for (const auto& vars : transversal_supports(I.ambient(), primes_over(p, ass)))
        parts.push_back(invert_variables(I, vars));

    MinDegreeSearch search;
    search.degree = bound;
    search.run(std::move(parts), colons, 0);
    if (!search.degree || search.degree == bound) return std::nullopt;
    return VResult{*search.degree, ExponentVector(std::move(search.point)), p};
}

} // namespace detail

inline VResult v_p(const MonomialIdeal& I, const MonomialPrime& p, const PrimeSet& ass) {
    auto r = detail::v_p_below(I, p, ass, std::nullopt);
    if (!r) throw NoWitness();
    return std::move(*r);
}

/// The same number computed by forming (I:p), the iterated-colon saturation
/// (I : q^∞) and their intersection explicitly. Slow; kept as a second route.
inline VResult v_p_via_quotient(const MonomialIdeal& I, const MonomialPrime& p, const PrimeSet& ass) {
    require_same_dimension(I.ambient(), p.ambient());
    if (!contains_prime(ass, p)) throw NotAssociatedPrime();
    const MonomialIdeal numerator = colon(I, p.as_ideal());
    const MonomialIdeal q = prime_product(I.ambient(), primes_over(p, ass));
    const MonomialIdeal denominator = intersect(numerator, saturate(I, q).ideal);
    const auto a = quotient_alpha(numerator, denominator);
    if (!a) throw NoWitness();
    return VResult{a->degree, a->witness, p};
}

/// v(I) = min over Ass(I) of v_p(I). Among primes reaching the minimum the
/// first in prime order (support lists compared lexicographically) wins.
inline VResult v_number(const MonomialIdeal& I) {
    const PrimeSet ass = associated_primes(I);
    std::optional<VResult> best;
    for (const auto& p : ass) {
        auto r = detail::v_p_below(I, p, ass, best ? std::optional<Degree>(best->value) : std::nullopt);
        if (!best && !r) throw NoWitness();
        if (r) best = std::move(r);
    }
    return *best;
}

/// Least degree of a monomial u with (I : u) = p among |u| <= cap, by
/// exhaustive scan.
inline std::optional<Degree> v_p_oracle(const MonomialIdeal& I, const MonomialPrime& p, Degree cap) {
    require_same_dimension(I.ambient(), p.ambient());
    const MonomialIdeal target = p.as_ideal();
    for (Degree d = 0; d <= cap; ++d) {
        bool found = false;
        detail::for_each_monomial_of_degree(I.ambient(), d, [&](const ExponentVector& u) {
            found = colon(I, u) == target;
            return !found;
        });
        if (found) return d;
    }
    return std::nullopt;
}

} // namespace vnum
