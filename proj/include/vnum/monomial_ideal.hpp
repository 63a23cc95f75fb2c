#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "detail/divisor_index.hpp"
#include "error.hpp"
#include "exponent_vector.hpp"

namespace vnum {

class MonomialIdeal;
MonomialIdeal minimalize(std::size_t n, std::vector<ExponentVector> gens);

/// A monomial ideal of K[x_1..x_n], stored as its minimal generators in
/// lexicographic order. The zero ideal has no generators; the unit ideal is
/// generated by the zero vector.
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}

    static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(std::size_t n) { return minimalize(n, {ExponentVector(n)}); }

    std::size_t ambient() const noexcept { return n_; }
    const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_zero(); }
    bool is_proper() const noexcept { return !is_unit(); }

    /// True iff x^u lies in the ideal.
    bool contains(const ExponentVector& u) const {
        require_same_dimension(n_, u.size());
        if (index_) return index_->has_divisor_of(u);
        return std::any_of(gens_.begin(), gens_.end(),
                           [&](const ExponentVector& g) { return g.divides(u); });
    }

    /// I ⊆ J.
    bool is_subset_of(const MonomialIdeal& other) const {
        require_same_dimension(n_, other.n_);
        return std::all_of(gens_.begin(), gens_.end(),
                           [&](const ExponentVector& g) { return other.contains(g); });
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }

private:
    friend MonomialIdeal minimalize(std::size_t n, std::vector<ExponentVector> gens);

    std::size_t n_;
    std::vector<ExponentVector> gens_;
    // Built once while minimalizing and never modified afterwards.
    std::shared_ptr<const detail::DivisorIndex> index_;
};

/// Reduces an arbitrary generating set to the canonical minimal one.
inline MonomialIdeal minimalize(std::size_t n, std::vector<ExponentVector> gens) {
    for (const auto& g : gens) require_same_dimension(n, g.size());
    std::sort(gens.begin(), gens.end(), DegreeLexLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    auto index = std::make_shared<detail::DivisorIndex>(n);
    std::vector<ExponentVector> kept;
    kept.reserve(gens.size());
    // Degree order guarantees that any divisor of v was seen before v; two
    // distinct vectors of equal degree never divide each other.
    for (auto& g : gens) {
        if (index->has_divisor_of(g)) continue;
        index->insert(g);
        kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());

    MonomialIdeal out(n);
    out.gens_ = std::move(kept);
    out.index_ = std::move(index);
    return out;
}

struct MonomialIdealHash {
    std::size_t operator()(const MonomialIdeal& I) const noexcept {
        std::size_t h = I.ambient();
        ExponentVectorHash eh;
        for (const auto& g : I.generators()) h = h * 1099511628211ULL ^ eh(g);
        return h;
    }
};

/// The prime generated by a non-empty set of variables.
class MonomialPrime {
public:
    MonomialPrime() = default;

    /// `support` holds 0-based variable indices; duplicates are collapsed.
    MonomialPrime(std::size_t n, std::vector<std::size_t> support) : n_(n), support_(std::move(support)) {
        std::sort(support_.begin(), support_.end());
        support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
        if (support_.empty()) throw UndefinedOperation("monomial prime needs a non-empty support");
        if (support_.back() >= n_) throw DimensionMismatch(n_, support_.back() + 1);
    }

    static MonomialPrime maximal(std::size_t n) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        return MonomialPrime(n, std::move(all));
    }

    std::size_t ambient() const noexcept { return n_; }
    const std::vector<std::size_t>& support() const noexcept { return support_; }
    std::size_t height() const noexcept { return support_.size(); }

    bool has_variable(std::size_t i) const {
        return std::binary_search(support_.begin(), support_.end(), i);
    }

    bool is_subset_of(const MonomialPrime& other) const {
        return std::includes(other.support_.begin(), other.support_.end(), support_.begin(), support_.end());
    }
    bool is_strict_subset_of(const MonomialPrime& other) const {
        return support_.size() < other.support_.size() && is_subset_of(other);
    }

    MonomialIdeal as_ideal() const {
        std::vector<ExponentVector> gens;
        for (std::size_t i : support_) gens.push_back(ExponentVector::unit(n_, i));
        return minimalize(n_, std::move(gens));
    }

    friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
    friend auto operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.support_ <=> b.support_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> support_;
};

/// Sorted, duplicate-free set of primes.
using PrimeSet = std::vector<MonomialPrime>;

inline PrimeSet normalize(PrimeSet primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

inline bool contains_prime(const PrimeSet& set, const MonomialPrime& p) {
    return std::find(set.begin(), set.end(), p) != set.end();
}

// ---------------------------------------------------------------------------
// Ideal arithmetic

inline bool contains(const MonomialIdeal& I, const ExponentVector& u) { return I.contains(u); }

inline MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_dimension(I.ambient(), J.ambient());
    std::vector<ExponentVector> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return minimalize(I.ambient(), std::move(gens));
}

inline MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_dimension(I.ambient(), J.ambient());
    std::vector<ExponentVector> gens;
    gens.reserve(I.size() * J.size());
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) gens.push_back(a + b);
    return minimalize(I.ambient(), std::move(gens));
}

/// I ∩ J, generated by lcm(a, b). Generators of one side already inside the
/// other are taken as they are, and only the remaining pairs are formed.
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_dimension(I.ambient(), J.ambient());
    std::vector<ExponentVector> gens;
    std::vector<const ExponentVector*> rest_i, rest_j;
    for (const auto& a : I.generators()) {
        if (J.contains(a)) gens.push_back(a);
        else rest_i.push_back(&a);
    }
    for (const auto& b : J.generators()) {
        if (I.contains(b)) gens.push_back(b);
        else rest_j.push_back(&b);
    }
    for (const auto* a : rest_i)
        for (const auto* b : rest_j) gens.push_back(lcm(*a, *b));
    return minimalize(I.ambient(), std::move(gens));
}

/// I^k; I^0 is the unit ideal.
inline MonomialIdeal power(const MonomialIdeal& I, unsigned k) {
    MonomialIdeal result = MonomialIdeal::unit(I.ambient());
    for (unsigned i = 0; i < k; ++i) result = ideal_product(result, I);
    return result;
}

/// (I : x^u).
inline MonomialIdeal colon(const MonomialIdeal& I, const ExponentVector& u) {
    require_same_dimension(I.ambient(), u.size());
    std::vector<ExponentVector> gens;
    gens.reserve(I.size());
    for (const auto& g : I.generators()) gens.push_back(divide_out(g, u));
    return minimalize(I.ambient(), std::move(gens));
}

struct ColonResult {
    MonomialIdeal ideal;
    /// Set when the divisor was the zero ideal; the result is then R.
    bool divisor_was_zero = false;
};

inline ColonResult colon_with_flag(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_dimension(I.ambient(), J.ambient());
    if (J.is_zero()) return {MonomialIdeal::unit(I.ambient()), true};
    std::optional<MonomialIdeal> acc;
    for (const auto& g : J.generators()) {
        MonomialIdeal part = colon(I, g);
        acc = acc ? intersect(*acc, part) : std::move(part);
    }
    return {std::move(*acc), false};
}

/// (I : J) = ∩_{g ∈ G(J)} (I : g); (I : 0) is R.
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    return colon_with_flag(I, J).ideal;
}

struct SaturationResult {
    MonomialIdeal ideal;
    /// Number of colon steps that strictly enlarged the ideal.
    unsigned iterations = 0;
};

/// (I : J^∞), by iterating I <- (I : J) to a fixpoint.
inline SaturationResult saturate(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_dimension(I.ambient(), J.ambient());
    if (J.is_zero()) throw UndefinedOperation("saturation by the zero ideal");
    SaturationResult r{I, 0};
    for (;;) {
        MonomialIdeal next = colon(r.ideal, J);
        if (next == r.ideal) return r;
        r.ideal = std::move(next);
        ++r.iterations;
    }
}

/// (I : (x_T)^∞): drop the coordinates in T from every generator.
inline MonomialIdeal invert_variables(const MonomialIdeal& I, std::span<const std::size_t> vars) {
    std::vector<ExponentVector> gens = I.generators();
    for (auto& g : gens)
        for (std::size_t i : vars) g[i] = 0;
    return minimalize(I.ambient(), std::move(gens));
}

/// Minimal supports of the generators of a monomial ideal.
inline std::vector<std::vector<std::size_t>> minimal_supports(const MonomialIdeal& J) {
    std::vector<ExponentVector> indicator;
    for (const auto& g : J.generators()) {
        ExponentVector s(J.ambient());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = g[i] ? 1 : 0;
        indicator.push_back(std::move(s));
    }
    std::vector<std::vector<std::size_t>> out;
    const MonomialIdeal supports = minimalize(J.ambient(), std::move(indicator));
    for (const auto& s : supports.generators()) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i]) vars.push_back(i);
        out.push_back(std::move(vars));
    }
    return out;
}

/// Components whose intersection is (I : J^∞) for a monomial J. Uses
/// (I : J^∞) = ∩_{g ∈ G(J)} (I : g^∞), where (I : g^∞) only depends on
/// supp(g); a containing support gives a larger ideal and is skipped.
inline std::vector<MonomialIdeal> saturation_parts(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_dimension(I.ambient(), J.ambient());
    if (J.is_zero()) throw UndefinedOperation("saturation by the zero ideal");
    std::vector<MonomialIdeal> parts;
    for (const auto& vars : minimal_supports(J)) parts.push_back(invert_variables(I, vars));
    return parts;
}

/// Same ideal as saturate(I, J).ideal, through saturation_parts.
inline MonomialIdeal saturate_by_supports(const MonomialIdeal& I, const MonomialIdeal& J) {
    auto parts = saturation_parts(I, J);
    MonomialIdeal acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, parts[i]);
    return acc;
}

/// Initial degree of a non-zero ideal.
inline Degree alpha(const MonomialIdeal& I) {
    if (I.is_zero()) throw UndefinedOperation("alpha of zero ideal");
    Degree best = I.generators().front().degree();
    for (const auto& g : I.generators()) best = std::min(best, g.degree());
    return best;
}

struct AlphaWitness {
    Degree degree;
    ExponentVector witness;
};

/// Initial degree of num/den for den ⊆ num, with the least (degree, lex)
/// generator of num outside den as witness; nullopt for the zero module.
inline std::optional<AlphaWitness> quotient_alpha(const MonomialIdeal& num, const MonomialIdeal& den) {
    require_same_dimension(num.ambient(), den.ambient());
    if (!den.is_subset_of(num)) throw ContainmentViolation("denominator is not contained in numerator");
    std::optional<AlphaWitness> best;
    for (const auto& g : num.generators()) {
        if (den.contains(g)) continue;
        const Degree d = g.degree();
        if (!best || d < best->degree || (d == best->degree && g < best->witness)) best = AlphaWitness{d, g};
    }
    return best;
}

} // namespace vnum
