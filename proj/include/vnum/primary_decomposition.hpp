#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "detail/memo.hpp"
#include "error.hpp"
#include "monomial_ideal.hpp"

namespace vnum {

/// An irreducible monomial ideal (x_i^{e_i} : i ∈ S).
class IrreducibleComponent {
public:
    explicit IrreducibleComponent(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
        for (const auto& g : ideal_.generators())
            if (g.support_size() != 1) throw UndefinedOperation("irreducible component needs pure-power generators");
    }

    const MonomialIdeal& ideal() const noexcept { return ideal_; }

    MonomialPrime radical() const {
        std::vector<std::size_t> vars;
        for (const auto& g : ideal_.generators())
            for (std::size_t i = 0; i < g.size(); ++i)
                if (g[i]) vars.push_back(i);
        return MonomialPrime(ideal_.ambient(), std::move(vars));
    }

    friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
        return a.ideal_ == b.ideal_;
    }
    friend bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b) {
        return a.ideal_.generators() < b.ideal_.generators();
    }

private:
    MonomialIdeal ideal_;
};

namespace detail {

inline void split_components(const MonomialIdeal& I, std::vector<MonomialIdeal>& out) {
    const auto& gens = I.generators();
    // Pivot: first generator in canonical order with at least two variables.
    auto pivot = std::find_if(gens.begin(), gens.end(), [](const ExponentVector& g) { return g.support_size() >= 2; });
    if (pivot == gens.end()) {
        out.push_back(I);
        return;
    }
    std::size_t var = 0;
    while ((*pivot)[var] == 0) ++var;

    ExponentVector pure(I.ambient());
    pure[var] = (*pivot)[var];
    ExponentVector rest = *pivot;
    rest[var] = 0;

    std::vector<ExponentVector> others;
    for (auto it = gens.begin(); it != gens.end(); ++it)
        if (it != pivot) others.push_back(*it);

    auto left = others;
    left.push_back(std::move(pure));
    others.push_back(std::move(rest));
    split_components(minimalize(I.ambient(), std::move(left)), out);
    split_components(minimalize(I.ambient(), std::move(others)), out);
}

inline auto& decomposition_memo() {
    static ConcurrentMemo<MonomialIdeal, std::vector<IrreducibleComponent>, MonomialIdealHash> memo;
    return memo;
}

inline auto& ass_memo() {
    static ConcurrentMemo<MonomialIdeal, PrimeSet, MonomialIdealHash> memo;
    return memo;
}

inline void require_decomposable(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) throw UndefinedOperation("decomposition undefined");
}

// Generators g with g[last] <= t, last coordinate dropped.
inline MonomialIdeal slice_last(const MonomialIdeal& I, Exponent t) {
    const std::size_t d = I.ambient();
    std::vector<ExponentVector> gens;
    for (const auto& g : I.generators()) {
        if (g[d - 1] > t) continue;
        gens.emplace_back(std::vector<Exponent>(g.begin(), g.end() - 1));
    }
    return minimalize(d - 1, std::move(gens));
}

// Is there a monomial u with u ∉ A, u ∈ B for every B in `within`, and
// u·x_i ∈ A for every variable x_i? Recurses on the last variable: fixing
// u_d = t turns the conditions into the same question one dimension down.
inline bool socle_search(const MonomialIdeal& A, const std::vector<MonomialIdeal>& within) {
    if (A.is_unit()) return false;
    for (const auto& B : within)
        if (B.is_zero()) return false;
    const std::size_t d = A.ambient();
    if (d == 0) return true;
    for (const auto& B : within)
        if (B.is_subset_of(A)) return false;

    std::vector<Exponent> steps;
    for (const auto& g : A.generators())
        if (g[d - 1] > 0) steps.push_back(g[d - 1]);
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

    for (Exponent step : steps) {
        const Exponent t = step - 1;
        std::vector<MonomialIdeal> next_within;
        next_within.reserve(within.size() + 1);
        next_within.push_back(slice_last(A, step));
        for (const auto& B : within) next_within.push_back(slice_last(B, t));
        if (socle_search(slice_last(A, t), next_within)) return true;
    }
    return false;
}

} // namespace detail

/// The irredundant irreducible decomposition of a proper non-zero ideal,
/// by recursive splitting of mixed generators.
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
    detail::require_decomposable(I);
    return detail::decomposition_memo().get_or_compute(I, [&] {
        std::vector<MonomialIdeal> leaves;
        detail::split_components(I, leaves);
        std::sort(leaves.begin(), leaves.end(),
                  [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.generators() < b.generators(); });
        leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());

        std::vector<IrreducibleComponent> out;
        for (std::size_t i = 0; i < leaves.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < leaves.size() && !redundant; ++j)
                redundant = j != i && leaves[j].is_subset_of(leaves[i]);
            if (!redundant) out.emplace_back(leaves[i]);
        }
        return out;
    });
}

/// Ideal in the variables of p (in increasing order) obtained by setting the
/// other variables to 1. `variables[j]` is the original index of local x_{j+1}.
struct LocalizedIdeal {
    MonomialIdeal ideal;
    std::vector<std::size_t> variables;
};

inline LocalizedIdeal monomial_localize(const MonomialIdeal& I, const MonomialPrime& p) {
    require_same_dimension(I.ambient(), p.ambient());
    const auto& vars = p.support();
    std::vector<ExponentVector> gens;
    gens.reserve(I.size());
    for (const auto& g : I.generators()) {
        ExponentVector local(vars.size());
        for (std::size_t j = 0; j < vars.size(); ++j) local[j] = g[vars[j]];
        gens.push_back(std::move(local));
    }
    return {minimalize(vars.size(), std::move(gens)), vars};
}

/// True iff the maximal ideal (x_1..x_n) is associated to I, i.e. (I : m) ≠ I.
inline bool maximal_ideal_is_associated(const MonomialIdeal& I) {
    if (I.ambient() == 0) return false;
    return detail::socle_search(I, {});
}

/// Ass(I). A prime p is associated iff the maximal ideal of the localized
/// ring is associated to the localization of I at p.
inline PrimeSet associated_primes(const MonomialIdeal& I) {
    detail::require_decomposable(I);
    return detail::ass_memo().get_or_compute(I, [&] {
        const std::size_t n = I.ambient();
        std::vector<std::size_t> used;
        for (std::size_t i = 0; i < n; ++i)
            if (std::any_of(I.generators().begin(), I.generators().end(), [&](const ExponentVector& g) { return g[i] != 0; }))
                used.push_back(i);
        if (used.size() >= 31) throw UndefinedOperation("too many variables for associated-prime enumeration");

        PrimeSet out;
        const std::uint32_t subsets = 1u << used.size();
        for (std::uint32_t mask = 1; mask < subsets; ++mask) {
            std::vector<std::size_t> support;
            for (std::size_t b = 0; b < used.size(); ++b)
                if (mask & (1u << b)) support.push_back(used[b]);
            MonomialPrime p(n, std::move(support));
            const auto local = monomial_localize(I, p);
            if (local.ideal.is_unit()) continue;
            if (maximal_ideal_is_associated(local.ideal)) out.push_back(std::move(p));
        }
        return normalize(std::move(out));
    });
}

/// Ass(I) read off the irreducible decomposition; used to cross-check
/// associated_primes.
inline PrimeSet associated_primes_by_decomposition(const MonomialIdeal& I) {
    PrimeSet out;
    for (const auto& q : irreducible_decomposition(I)) out.push_back(q.radical());
    return normalize(std::move(out));
}

/// Inclusion-maximal members of a prime set.
inline PrimeSet maximal_primes(const PrimeSet& primes) {
    PrimeSet out;
    for (const auto& p : primes) {
        const bool dominated = std::any_of(primes.begin(), primes.end(),
                                           [&](const MonomialPrime& q) { return p.is_strict_subset_of(q); });
        if (!dominated) out.push_back(p);
    }
    return normalize(std::move(out));
}

} // namespace vnum
