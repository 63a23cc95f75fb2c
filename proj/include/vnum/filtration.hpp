#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "exact_lp.hpp"
#include "io.hpp"
#include "monomial_ideal.hpp"
#include "newton.hpp"
#include "primary_decomposition.hpp"
#include "vnumber.hpp"

namespace vnum {

enum class FiltrationKind { powers, closure };

inline const char* to_string(FiltrationKind kind) { return kind == FiltrationKind::powers ? "powers" : "closure"; }

/// Finite window in which "k ≫ 0" is probed: levels 1..kmax are computed and
/// a sequence counts as settled when its last `width` terms (per residue
/// class) agree. Periods 1..period_max are tried for closure filtrations.
struct Window {
    unsigned kmax = 12;
    unsigned width = 3;
    unsigned period_max = 4;

    void validate() const {
        if (width < 2 || kmax < width) throw UndefinedOperation("window needs kmax >= width >= 2");
        if (period_max < 1) throw UndefinedOperation("window needs period_max >= 1");
    }
};

/// The filtration {I^k} or {closure(I^k)} with a memoized level cache.
/// Copies share the cache.
class Filtration {
public:
    Filtration(FiltrationKind kind, MonomialIdeal base) : state_(std::make_shared<State>(kind, std::move(base))) {
        const auto& I = state_->base;
        if (I.is_zero() || I.is_unit()) throw UndefinedOperation("filtration base must be proper and non-zero");
        if (kind == FiltrationKind::closure) state_->np.emplace(NewtonPolyhedron::of(I));
    }

    static Filtration powers(MonomialIdeal base) { return Filtration(FiltrationKind::powers, std::move(base)); }
    static Filtration closure(MonomialIdeal base) { return Filtration(FiltrationKind::closure, std::move(base)); }

    FiltrationKind kind() const noexcept { return state_->kind; }
    const MonomialIdeal& base() const noexcept { return state_->base; }
    std::size_t ambient() const noexcept { return state_->base.ambient(); }

    /// I_[k]; I_[0] is the unit ideal.
    MonomialIdeal level(unsigned k) const {
        std::lock_guard lock(state_->mutex);
        return level_locked(k);
    }

    PrimeSet ass(unsigned k) const {
        if (k == 0) throw UndefinedOperation("Ass of the unit ideal");
        return associated_primes(level(k));
    }

    VResult v(unsigned k) const {
        if (k == 0) throw UndefinedOperation("v-number of the unit ideal");
        {
            std::lock_guard lock(state_->mutex);
            if (auto it = state_->v_cache.find(k); it != state_->v_cache.end()) return it->second;
        }
        VResult r = v_number(level(k));
        std::lock_guard lock(state_->mutex);
        return state_->v_cache.insert_or_assign(k, std::move(r)).first->second;
    }

private:
    struct State {
        State(FiltrationKind k, MonomialIdeal b) : kind(k), base(std::move(b)) {}
        FiltrationKind kind;
        MonomialIdeal base;
        std::optional<NewtonPolyhedron> np;
        std::mutex mutex;
        std::map<unsigned, MonomialIdeal> levels;
        std::map<unsigned, VResult> v_cache;
    };

    const MonomialIdeal& level_locked(unsigned k) const {
        auto& s = *state_;
        if (auto it = s.levels.find(k); it != s.levels.end()) return it->second;
        MonomialIdeal value = MonomialIdeal::unit(s.base.ambient());
        if (k > 0) {
            if (s.kind == FiltrationKind::powers)
                value = ideal_product(level_locked(k - 1), s.base);
            else
                value = closure_power(*s.np, k);
        }
        return s.levels.emplace(k, std::move(value)).first->second;
    }

    std::shared_ptr<State> state_;
};

/// Eventual periodic behaviour of a sequence s_1..s_kmax: the smallest period
/// c such that every residue class ends in `width` equal terms, and the first
/// index t with s_k = s_{k+c} for every t <= k <= kmax - c.
struct PeriodicTail {
    unsigned period = 1;
    unsigned start = 1;
};

namespace detail {

template <class T>
std::optional<PeriodicTail> detect_periodic_tail(const std::vector<T>& seq, unsigned width, unsigned period_max) {
    const auto kmax = static_cast<unsigned>(seq.size());
    for (unsigned c = 1; c <= period_max; ++c) {
        bool ok = true;
        for (unsigned j = 0; j < c && ok; ++j) {
            std::vector<unsigned> ks;
            for (unsigned k = kmax; k >= 1 && ks.size() < width; --k)
                if (k % c == j) ks.push_back(k);
            if (ks.size() < width) {
                ok = false;
                break;
            }
            for (unsigned k : ks) ok = ok && seq[k - 1] == seq[ks.front() - 1];
        }
        if (!ok) continue;
        unsigned start = kmax > c ? kmax - c + 1 : 1;
        while (start > 1 && seq[start - 2] == seq[start - 2 + c]) --start;
        return PeriodicTail{c, start};
    }
    return std::nullopt;
}

} // namespace detail

/// Ass(I_[k]) for k = 1..kmax and the eventual (periodic) pattern.
struct AssStabilization {
    bool stabilized = false;
    unsigned period = 1;
    unsigned stabilized_at = 0;
    std::vector<PrimeSet> levels;      // levels[k-1] = Ass(I_[k])
    std::vector<PrimeSet> per_residue; // eventual Ass(I_[k]) for k ≡ j (mod period)
    PrimeSet primes;                   // Ass^∞: union of per_residue
    Window window;
};

inline AssStabilization stable_primes(const Filtration& F, const Window& w = {}) {
    w.validate();
    AssStabilization out;
    out.window = w;
    for (unsigned k = 1; k <= w.kmax; ++k) out.levels.push_back(F.ass(k));
    const unsigned pmax = F.kind() == FiltrationKind::powers ? 1 : w.period_max;
    const auto tail = detail::detect_periodic_tail(out.levels, w.width, pmax);
    if (!tail) return out;
    out.stabilized = true;
    out.period = tail->period;
    out.stabilized_at = tail->start;
    PrimeSet all;
    for (unsigned j = 0; j < tail->period; ++j) {
        unsigned k = w.kmax;
        while (k % tail->period != j) --k;
        out.per_residue.push_back(out.levels[k - 1]);
        all.insert(all.end(), out.levels[k - 1].begin(), out.levels[k - 1].end());
    }
    out.primes = normalize(std::move(all));
    return out;
}

/// Inclusion-maximal primes of Ass^∞ (empty when the window did not settle).
inline PrimeSet stable_max(const AssStabilization& s) { return maximal_primes(s.primes); }

/// Whether p ∈ Ass(I_[k]) for infinitely many k, judged in the window after
/// monomial localization at p: p ∈ Ass(I_[k]) iff the maximal ideal of the
/// smaller ring is associated to the localized level.
struct StablePrimeEvidence {
    bool stabilized = false;
    bool stable = false;
    unsigned period = 1;
    unsigned stabilized_at = 0;
    unsigned first_k = 1;
    unsigned last_k = 0;
    std::vector<bool> membership; // membership[k-1] = p ∈ Ass(I_[k])
};

inline StablePrimeEvidence is_stable_prime(const Filtration& F, const MonomialPrime& p, const Window& w = {}) {
    w.validate();
    require_same_dimension(F.ambient(), p.ambient());
    StablePrimeEvidence out;
    out.last_k = w.kmax;
    const auto local = monomial_localize(F.base(), p);
    if (local.ideal.is_unit()) {
        out.membership.assign(w.kmax, false);
    } else {
        const Filtration L(F.kind(), local.ideal);
        for (unsigned k = 1; k <= w.kmax; ++k) out.membership.push_back(maximal_ideal_is_associated(L.level(k)));
    }
    const unsigned pmax = F.kind() == FiltrationKind::powers ? 1 : w.period_max;
    const auto tail = detail::detect_periodic_tail(out.membership, w.width, pmax);
    if (!tail) return out;
    out.stabilized = true;
    out.period = tail->period;
    out.stabilized_at = tail->start;
    for (unsigned k = w.kmax; k + tail->period > w.kmax; --k) out.stable = out.stable || out.membership[k - 1];
    return out;
}

/// Graded piece ((I_[k+1] : p) ∩ I_[k]) / ((I_[k+1] : p) ∩ (I_[k+1] : q^∞) ∩ I_[k]),
/// q the product of the primes of `stable` strictly above p.
struct SocComponent {
    unsigned k = 0;
    MonomialIdeal numerator;
    MonomialIdeal denominator;
    std::optional<AlphaWitness> alpha;
};

inline SocComponent soc_component(const Filtration& F, const MonomialPrime& p, unsigned k, const PrimeSet& stable) {
    require_same_dimension(F.ambient(), p.ambient());
    if (!contains_prime(stable, p)) throw NotAssociatedPrime();
    const MonomialIdeal next = F.level(k + 1);
    const MonomialIdeal here = F.level(k);
    const MonomialIdeal col = colon(next, p.as_ideal());
    const MonomialIdeal q = prime_product(F.ambient(), primes_over(p, stable));
    SocComponent out{k, intersect(col, here), MonomialIdeal::zero(F.ambient()), std::nullopt};
    out.denominator = intersect(out.numerator, saturate_by_supports(next, q));
    out.alpha = quotient_alpha(out.numerator, out.denominator);
    return out;
}

/// Initial degree of the same socle piece, found by direct search without
/// forming numerator and denominator; least (degree, lex) witness.
inline std::optional<AlphaWitness> soc_alpha(const Filtration& F, const MonomialPrime& p, unsigned k, const PrimeSet& stable) {
    require_same_dimension(F.ambient(), p.ambient());
    if (!contains_prime(stable, p)) throw NotAssociatedPrime();
    const MonomialIdeal next = F.level(k + 1);
    std::vector<MonomialIdeal> within{F.level(k)};
    for (std::size_t i : p.support()) within.push_back(colon(next, ExponentVector::unit(F.ambient(), i)));
    std::vector<MonomialIdeal> avoid;
    for (const auto& vars : transversal_supports(F.ambient(), primes_over(p, stable)))
        avoid.push_back(invert_variables(next, vars));
    detail::MinDegreeSearch search;
    search.run(std::move(avoid), within, 0);
    if (!search.degree) return std::nullopt;
    return AlphaWitness{*search.degree, ExponentVector(std::move(search.point))};
}

struct TailBranch {
    unsigned residue = 0;
    Rational slope;
    Rational intercept;
};

/// f(k) = slope_j·k + intercept_j for k ≡ j (mod period), k >= stabilization_index.
struct QuasiLinearTail {
    unsigned period = 1;
    std::vector<TailBranch> branches;
    unsigned stabilization_index = 1;
    Window window;

    Rational predict(unsigned k) const {
        const auto& b = branches[k % period];
        return b.slope * k + b.intercept;
    }
};

/// Samples of a v-type function over the window together with the fitted
/// tail. `tail` is set when every residue class ends in `width` collinear
/// samples; `detected` additionally requires the slope law to hold.
struct TailFit {
    std::vector<std::optional<Degree>> samples; // samples[k-1]
    std::optional<QuasiLinearTail> tail;
    bool slope_law_holds = false;
    bool detected = false;
    std::string failure;
    AssStabilization ass;
};

namespace detail {

inline std::optional<QuasiLinearTail> fit_tail(const std::vector<std::optional<Degree>>& samples, const Window& w,
                                               unsigned period_max) {
    const auto kmax = static_cast<unsigned>(samples.size());
    for (unsigned c = 1; c <= period_max; ++c) {
        QuasiLinearTail tail{c, {}, 1, w};
        bool ok = true;
        for (unsigned j = 0; j < c && ok; ++j) {
            std::vector<unsigned> ks;
            for (unsigned k = kmax; k >= 1 && ks.size() < w.width; --k)
                if (k % c == j) ks.push_back(k);
            if (ks.size() < w.width ||
                std::any_of(ks.begin(), ks.end(), [&](unsigned k) { return !samples[k - 1]; })) {
                ok = false;
                break;
            }
            auto value = [&](unsigned k) { return Rational(static_cast<long long>(*samples[k - 1])); };
            const unsigned k1 = ks[1], k0 = ks[0];
            const Rational slope = (value(k0) - value(k1)) / Rational(static_cast<long long>(k0 - k1));
            const Rational intercept = value(k0) - slope * k0;
            for (unsigned k : ks) ok = ok && slope * k + intercept == value(k);
            tail.branches.push_back(TailBranch{j, slope, intercept});
        }
        if (!ok) continue;
        unsigned start = kmax + 1;
        while (start > 1 && samples[start - 2] &&
               tail.predict(start - 1) == Rational(static_cast<long long>(*samples[start - 2])))
            --start;
        tail.stabilization_index = start;
        return tail;
    }
    return std::nullopt;
}

inline std::vector<Degree> generator_degrees(const MonomialIdeal& I) {
    std::vector<Degree> out;
    for (const auto& g : I.generators()) out.push_back(g.degree());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Slope of a v_p tail: for powers an element of the generator-degree set of
// I; for closure filtrations slope·m must be a generator degree of I_[m] for
// some multiple m of the period inside the window.
inline bool slope_in_degree_set(const Filtration& F, const QuasiLinearTail& t) {
    for (const auto& b : t.branches) {
        bool found = false;
        const unsigned step = F.kind() == FiltrationKind::powers ? 1 : t.period;
        const unsigned last = F.kind() == FiltrationKind::powers ? 1 : t.window.kmax;
        for (unsigned m = step; m <= last && !found; m += step) {
            const Rational scaled = b.slope * m;
            if (boost::multiprecision::denominator(scaled) != 1 || scaled < 0) continue;
            const auto degs = generator_degrees(F.level(m));
            const auto target = static_cast<Degree>(boost::multiprecision::numerator(scaled));
            found = std::binary_search(degs.begin(), degs.end(), target);
        }
        if (!found) return false;
    }
    return true;
}

} // namespace detail

/// v_p(I_[k]) along the window, X_p drawn from Ass(I_[k]) ∪ Ass^∞. Levels
/// where p is not associated carry no sample.
inline TailFit v_function_p(const Filtration& F, const MonomialPrime& p, const Window& w = {}) {
    require_same_dimension(F.ambient(), p.ambient());
    TailFit out;
    out.ass = stable_primes(F, w);
    if (!out.ass.stabilized) {
        out.failure = "not stabilized within kmax";
        return out;
    }
    if (!contains_prime(out.ass.primes, p)) throw NotAssociatedPrime();
    for (unsigned k = 1; k <= w.kmax; ++k) {
        const auto& level_ass = out.ass.levels[k - 1];
        if (!contains_prime(level_ass, p)) {
            out.samples.emplace_back();
            continue;
        }
        PrimeSet ass = level_ass;
        ass.insert(ass.end(), out.ass.primes.begin(), out.ass.primes.end());
        out.samples.emplace_back(v_p(F.level(k), p, normalize(std::move(ass))).value);
    }
    const unsigned pmax = F.kind() == FiltrationKind::powers ? 1 : w.period_max;
    out.tail = detail::fit_tail(out.samples, w, pmax);
    if (!out.tail) {
        out.failure = "tail not detected within kmax";
        return out;
    }
    out.slope_law_holds = detail::slope_in_degree_set(F, *out.tail);
    out.detected = out.slope_law_holds;
    if (!out.detected) out.failure = "slope outside the generator-degree set";
    return out;
}

/// v(I_[k]) along the window. For powers the slope must equal α(I); a
/// mismatch marks the run as failed.
inline TailFit v_function(const Filtration& F, const Window& w = {}) {
    TailFit out;
    out.ass = stable_primes(F, w);
    if (!out.ass.stabilized) {
        out.failure = "not stabilized within kmax";
        return out;
    }
    for (unsigned k = 1; k <= w.kmax; ++k) out.samples.emplace_back(F.v(k).value);
    const unsigned pmax = F.kind() == FiltrationKind::powers ? 1 : w.period_max;
    out.tail = detail::fit_tail(out.samples, w, pmax);
    if (!out.tail) {
        out.failure = "tail not detected within kmax";
        return out;
    }
    if (F.kind() == FiltrationKind::powers)
        out.slope_law_holds = out.tail->branches.front().slope == Rational(static_cast<long long>(alpha(F.base())));
    else
        out.slope_law_holds = detail::slope_in_degree_set(F, *out.tail);
    out.detected = out.slope_law_holds;
    if (!out.detected) out.failure = "slope law violated";
    return out;
}

/// Window-bounded stability indices of a power filtration.
struct StabilityIndices {
    bool complete = false;
    std::optional<unsigned> vstab;
    std::map<MonomialPrime, unsigned> vstab_p;
    std::optional<unsigned> astab;
    std::map<MonomialPrime, unsigned> astab_p;
    std::vector<std::string> warnings;
};

inline StabilityIndices stability_indices(const Filtration& F, const Window& w = {}) {
    if (F.kind() != FiltrationKind::powers) throw UndefinedOperation("stability indices are defined for powers");
    StabilityIndices out;
    const auto vf = v_function(F, w);
    const auto& s = vf.ass;
    if (!s.stabilized) {
        out.warnings.push_back("not stabilized within kmax");
        return out;
    }
    out.astab = s.stabilized_at;
    for (const auto& p : s.primes) {
        unsigned t = w.kmax;
        while (t > 1 && contains_prime(s.levels[t - 2], p)) --t;
        out.astab_p.emplace(p, t);
    }
    if (vf.detected)
        out.vstab = vf.tail->stabilization_index;
    else
        out.warnings.push_back("v: " + vf.failure);
    bool all_p = true;
    for (const auto& p : s.primes) {
        const auto fp = v_function_p(F, p, w);
        if (fp.detected)
            out.vstab_p.emplace(p, fp.tail->stabilization_index);
        else {
            all_p = false;
            out.warnings.push_back("v_p at " + to_string(p) + ": " + fp.failure);
        }
    }
    out.complete = vf.detected && all_p;
    return out;
}

/// φ_I : K[x_1..x_n, y_1..y_m] → S[t], x_i ↦ x_i, y_j ↦ f_j·t, bigraded by
/// bideg(x_i) = (1,0) and bideg(y_j) = (deg f_j, 1).
struct ReesMapDescription {
    std::size_t n = 0;
    std::vector<ExponentVector> images; // f_j, in canonical generator order
    std::vector<std::pair<Degree, unsigned>> y_bidegrees;
};

inline ReesMapDescription rees_map_description(const MonomialIdeal& I) {
    if (I.is_unit()) throw UndefinedOperation("Rees map of unit ideal undefined");
    if (I.is_zero()) throw UndefinedOperation("Rees map of zero ideal undefined");
    ReesMapDescription out{I.ambient(), I.generators(), {}};
    for (const auto& g : I.generators()) out.y_bidegrees.emplace_back(g.degree(), 1u);
    return out;
}

} // namespace vnum
