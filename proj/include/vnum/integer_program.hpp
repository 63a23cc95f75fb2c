#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "detail/enumerate.hpp"
#include "error.hpp"
#include "filtration.hpp"
#include "monomial_ideal.hpp"
#include "newton.hpp"
#include "vnumber.hpp"

namespace vnum {

enum class IPVariant { power, closure };

inline const char* to_string(IPVariant v) { return v == IPVariant::power ? "power" : "closure"; }

/// Minimize |c| over c ∈ Z^n_{>=0} subject to: c + d ∈ P_k(A) iff d ∈ P_1(B)
/// for all d >= 0. P_k(A) is replaced by its convex-hull lattice points in the
/// closure variant. B is given by 0-based variable indices.
struct IPInstance {
    std::size_t n = 0;
    std::vector<ExponentVector> A;
    std::vector<std::size_t> B;
    unsigned k = 1;
    IPVariant variant = IPVariant::power;

    void validate() const {
        if (A.empty()) throw UndefinedOperation("A must be non-empty");
        for (const auto& a : A) {
            require_same_dimension(n, a.size());
            if (a.is_zero()) throw UndefinedOperation("0 ∈ A: I(A) is the unit ideal");
        }
        if (B.empty()) throw UndefinedOperation("B must be non-empty");
        for (std::size_t i : B)
            if (i >= n) throw UndefinedOperation("B index out of range");
        if (k == 0) throw UndefinedOperation("k must be positive");
    }

    MonomialIdeal ideal_a() const { return minimalize(n, A); }
    MonomialPrime prime_b() const { return MonomialPrime(n, B); }
};

struct IPSolution {
    ExponentVector c;
    Degree modulus = 0;
    bool optimal = false;
};

/// The level ideal I(A)^k, or its integral closure.
inline MonomialIdeal ip_level(const IPInstance& inst) {
    inst.validate();
    const MonomialIdeal I = inst.ideal_a();
    return inst.variant == IPVariant::power ? power(I, inst.k) : closure_power(I, inst.k);
}

/// Solutions are exactly the monomials x^c with (level : x^c) = I(B); the
/// optimum is therefore v_{I(B)}(level), and there is none unless I(B) is
/// associated to the level.
inline std::optional<IPSolution> solve_ip(const IPInstance& inst) {
    const MonomialIdeal level = ip_level(inst);
    const MonomialPrime p = inst.prime_b();
    const PrimeSet ass = associated_primes(level);
    if (!contains_prime(ass, p)) return std::nullopt;
    auto r = v_p(level, p, ass);
    return IPSolution{std::move(r.witness), r.value, true};
}

struct BruteForceResult {
    std::optional<IPSolution> solution;
    bool box_limited = false;
};

/// Default search box: c_i <= max(6, k·M_i), M_i the largest i-th coordinate
/// in A. Every minimal generator of the level lies below k·M_i, and so does
/// the witness of an optimal solution.
inline std::vector<Exponent> default_ip_box(const IPInstance& inst) {
    std::vector<Exponent> box(inst.n, 6);
    for (const auto& a : inst.A)
        for (std::size_t i = 0; i < inst.n; ++i) box[i] = std::max(box[i], mul_exponent(a[i], inst.k));
    return box;
}

/// Independent route: candidates c in the box by increasing modulus (lex
/// within a modulus) are checked against the defining biconditional.
///
/// Membership in P_k(A) is decided from sums of k elements of A (power) or
/// from the exact LP (closure), without forming the level ideal. The
/// biconditional only needs d with |d| <= D, D = maxdeg(A)·k + |c| (+ n for
/// the closure variant): if (level : x^c) ≠ I(B) then either some e_i,
/// i ∈ B, fails, or a minimal generator of (level : x^c) lies outside I(B);
/// such a generator divides a minimal generator of the level, whose degree
/// is at most maxdeg(A)·k, plus less than n for a lattice point rounded up
/// from a real point of k·NP(A).
inline BruteForceResult brute_force_ip(const IPInstance& inst, std::vector<Exponent> box = {}) {
    inst.validate();
    if (box.empty()) box = default_ip_box(inst);
    require_same_dimension(inst.n, box.size());
    const std::size_t n = inst.n;

    std::vector<ExponentVector> sums;
    std::optional<NewtonPolyhedron> np;
    if (inst.variant == IPVariant::power) {
        std::vector<ExponentVector> current{ExponentVector(n)};
        for (unsigned step = 0; step < inst.k; ++step) {
            std::vector<ExponentVector> next;
            for (const auto& s : current)
                for (const auto& a : inst.A) next.push_back(s + a);
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            current = std::move(next);
        }
        sums = std::move(current);
    } else {
        np.emplace(n, inst.A);
    }
    auto in_level = [&](const ExponentVector& u) {
        if (np) return np_membership(*np, u, inst.k);
        return std::any_of(sums.begin(), sums.end(), [&](const ExponentVector& s) { return s.divides(u); });
    };
    auto in_b = [&](const ExponentVector& d) {
        return std::any_of(inst.B.begin(), inst.B.end(), [&](std::size_t i) { return d[i] > 0; });
    };

    Degree maxdeg = 0;
    for (const auto& a : inst.A) maxdeg = std::max(maxdeg, a.degree());

    auto satisfies = [&](const ExponentVector& c) {
        if (in_level(c)) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (in_level(c + ExponentVector::unit(n, i)) != in_b(ExponentVector::unit(n, i))) return false;
        const Degree bound = maxdeg * inst.k + c.degree() + (np ? n : 0);
        for (Degree d = 2; d <= bound; ++d) {
            const bool ok = detail::for_each_monomial_of_degree(n, d, [&](const ExponentVector& dv) {
                return in_level(c + dv) == in_b(dv);
            });
            if (!ok) return false;
        }
        return true;
    };

    Degree total = 0;
    for (Exponent b : box) total += b;
    for (Degree m = 0; m <= total; ++m) {
        std::vector<ExponentVector> layer;
        detail::for_each_monomial_of_degree(n, m, [&](const ExponentVector& c) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i) inside = c[i] <= box[i];
            if (inside) layer.push_back(c);
            return true;
        });
        std::sort(layer.begin(), layer.end());
        for (const auto& c : layer)
            if (satisfies(c)) return {IPSolution{c, m, true}, false};
    }
    return {std::nullopt, true};
}

/// Optimal modulus of P_{A,B,k} as a function of k. `eventually_feasible`
/// reflects whether I(B) lies in the stable set; the moduli are v_{I(B)} of
/// the levels. `soc_nonzero[k-1]` records whether the graded socle piece at
/// k is non-zero, the testable shadow of the dimension condition.
struct IPLaw {
    bool eventually_feasible = false;
    TailFit fit;
    std::vector<bool> soc_nonzero;
    std::string failure;
};

inline IPLaw asymptotic_law(std::size_t n, const std::vector<ExponentVector>& A, const std::vector<std::size_t>& B,
                            IPVariant variant, const Window& w = {}) {
    IPInstance probe{n, A, B, 1, variant};
    probe.validate();
    const Filtration F(variant == IPVariant::power ? FiltrationKind::powers : FiltrationKind::closure, probe.ideal_a());
    const MonomialPrime p = probe.prime_b();

    IPLaw out;
    out.fit.ass = stable_primes(F, w);
    if (!out.fit.ass.stabilized) {
        out.failure = "not stabilized within kmax";
        return out;
    }
    if (!contains_prime(out.fit.ass.primes, p)) {
        out.failure = "eventually infeasible";
        return out;
    }
    out.eventually_feasible = true;
    out.fit = v_function_p(F, p, w);
    if (out.fit.tail && variant == IPVariant::power) {
        // The slope must be the modulus of some element of A.
        const auto& slope = out.fit.tail->branches.front().slope;
        out.fit.slope_law_holds = std::any_of(A.begin(), A.end(), [&](const ExponentVector& a) {
            return slope == Rational(static_cast<long long>(a.degree()));
        });
        out.fit.detected = out.fit.slope_law_holds;
        out.fit.failure = out.fit.detected ? "" : "slope outside the generator-degree set";
    }
    for (unsigned k = 1; k < w.kmax; ++k) {
        if (!contains_prime(out.fit.ass.levels[k], p)) {
            out.soc_nonzero.push_back(false);
            continue;
        }
        out.soc_nonzero.push_back(soc_alpha(F, p, k, out.fit.ass.primes).has_value());
    }
    if (!out.fit.detected) out.failure = out.fit.failure;
    return out;
}

} // namespace vnum
