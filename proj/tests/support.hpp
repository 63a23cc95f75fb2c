#pragma once

// Brute-force oracles and random inputs shared by the unit tests and the
// acceptance binary. Oracles decide membership straight from definitions,
// without calling the library operation under test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vnum/vnum.hpp"

namespace vnum::testing {

using Rng = std::mt19937_64;

inline ExponentVector ev(std::initializer_list<Exponent> e) { return ExponentVector(std::vector<Exponent>(e)); }

inline MonomialIdeal ideal(std::size_t n, std::initializer_list<std::initializer_list<Exponent>> gens) {
    std::vector<ExponentVector> g;
    for (const auto& e : gens) g.push_back(ev(e));
    return minimalize(n, std::move(g));
}

inline MonomialIdeal triangle() { return parse_ideal("x1*x2, x1*x3, x2*x3", 3); }
inline MonomialIdeal session_ideal() { return parse_ideal("x1*x2, x1*x3, x2*x3, x2*x4, x3*x4, x4*x5, x5*x6", 6); }

/// Random ideal with n variables, 1..max_gens minimal generators of degree 1..max_deg.
inline MonomialIdeal random_ideal(Rng& rng, std::size_t n, std::size_t max_gens, unsigned max_deg) {
    return random_ideal(rng, RandomIdealShape{n, max_gens, max_deg});
}

/// Some generator divides u, checked over a raw list.
inline bool divisible_by_any(const std::vector<ExponentVector>& gens, const ExponentVector& u) {
    return std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) {
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > u[i]) return false;
        return true;
    });
}

/// All sums of exactly k elements of `gens` (with repetition).
inline std::vector<ExponentVector> k_fold_sums(std::size_t n, const std::vector<ExponentVector>& gens, unsigned k) {
    std::set<ExponentVector> current{ExponentVector(n)};
    for (unsigned s = 0; s < k; ++s) {
        std::set<ExponentVector> next;
        for (const auto& c : current)
            for (const auto& g : gens) next.insert(c + g);
        current = std::move(next);
    }
    return {current.begin(), current.end()};
}

inline bool oracle_in_power(const MonomialIdeal& I, unsigned k, const ExponentVector& u) {
    return divisible_by_any(k_fold_sums(I.ambient(), I.generators(), k), u);
}

/// u ∈ (I : J): u·g ∈ I for every generator g of J.
inline bool oracle_in_colon(const MonomialIdeal& I, const MonomialIdeal& J, const ExponentVector& u) {
    return std::all_of(J.generators().begin(), J.generators().end(),
                       [&](const ExponentVector& g) { return divisible_by_any(I.generators(), u + g); });
}

/// u ∈ (I : J^∞): u·J^N ⊆ I with N = |G(J)|·(largest exponent of I). Any
/// product of N generators of J repeats some g at least that often, and a
/// power of g that large already reaches every generator of I on supp(g).
inline bool oracle_in_saturation(const MonomialIdeal& I, const MonomialIdeal& J, const ExponentVector& u) {
    Exponent top = 1;
    for (const auto& g : I.generators())
        for (Exponent e : g) top = std::max(top, e);
    const auto N = static_cast<unsigned>(J.generators().size()) * top;
    for (const auto& m : k_fold_sums(I.ambient(), J.generators(), N))
        if (!divisible_by_any(I.generators(), u + m)) return false;
    return true;
}

/// Every monomial of degree <= d in n variables.
inline std::vector<ExponentVector> box(std::size_t n, Degree d) { return detail::monomials_up_to_degree(n, d); }

/// `actual` and the predicate agree on every monomial of the box.
template <class Pred>
bool agrees_on_box(const MonomialIdeal& actual, std::size_t n, Degree d, Pred&& expected) {
    for (const auto& u : box(n, d))
        if (actual.contains(u) != expected(u)) return false;
    return true;
}

/// Relabels variables: new index of old variable i is perm[i].
inline MonomialIdeal permute(const MonomialIdeal& I, const std::vector<std::size_t>& perm) {
    std::vector<ExponentVector> gens;
    for (const auto& g : I.generators()) {
        ExponentVector h(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) h[perm[i]] = g[i];
        gens.push_back(std::move(h));
    }
    return minimalize(I.ambient(), std::move(gens));
}

inline MonomialPrime permute(const MonomialPrime& p, const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> s;
    for (std::size_t i : p.support()) s.push_back(perm[i]);
    return MonomialPrime(p.ambient(), std::move(s));
}

inline Rational rat(long long v) { return Rational(v); }

} // namespace vnum::testing
