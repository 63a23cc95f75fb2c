#include <gtest/gtest.h>

#include "support.hpp"

using namespace vnum;
using namespace vnum::testing;

namespace {

PrimeSet primes(std::size_t n, std::initializer_list<std::vector<std::size_t>> supports) {
    PrimeSet out;
    for (const auto& s : supports) out.emplace_back(n, s);
    return normalize(std::move(out));
}

const TailBranch& only_branch(const TailFit& f) {
    EXPECT_TRUE(f.tail);
    EXPECT_EQ(f.tail->period, 1u);
    return f.tail->branches.front();
}

} // namespace

TEST(Filtration, AxiomsForPowersAndClosures) {
    Rng rng(51);
    for (int trial = 0; trial < 12; ++trial) {
        const auto I = random_ideal(rng, 3, 3, 3);
        if (I.is_unit()) continue;
        for (const auto& F : {Filtration::powers(I), Filtration::closure(I)}) {
            EXPECT_TRUE(F.level(0).is_unit());
            for (unsigned k = 0; k < 4; ++k) EXPECT_TRUE(F.level(k + 1).is_subset_of(F.level(k)));
            for (unsigned k = 1; k <= 2; ++k)
                for (unsigned l = 1; l <= 2; ++l)
                    EXPECT_TRUE(ideal_product(F.level(k), F.level(l)).is_subset_of(F.level(k + l)));
        }
    }
    EXPECT_THROW(Filtration::powers(MonomialIdeal::unit(2)), UndefinedOperation);
}

TEST(Filtration, ClosureLevelsStrictlyContainPowersWhenNotNormal) {
    const auto C = Filtration::closure(ideal(2, {{2, 0}, {0, 2}}));
    EXPECT_EQ(C.level(1), ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
    const auto M = Filtration::closure(MonomialPrime::maximal(2).as_ideal());
    for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(M.level(k), power(MonomialPrime::maximal(2).as_ideal(), k));
}

TEST(AssOfLevel, Examples) {
    const auto T = Filtration::powers(triangle());
    EXPECT_EQ(T.ass(1), primes(3, {{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(T.ass(2), primes(3, {{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}));
    const auto X = Filtration::powers(ideal(1, {{1}}));
    for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(X.ass(k), primes(1, {{0}}));
}

TEST(StablePrimes, SessionIdeal) {
    const auto s = stable_primes(Filtration::powers(session_ideal()));
    ASSERT_TRUE(s.stabilized);
    const auto expected = primes(6, {{4, 2, 1},
                                     {4, 3, 1, 0},
                                     {4, 3, 2, 0},
                                     {5, 3, 1, 0},
                                     {5, 3, 2, 0},
                                     {5, 3, 2, 1},
                                     {0, 1, 2, 3, 5},
                                     {0, 1, 2, 3, 4},
                                     {0, 1, 2, 3, 4, 5}});
    EXPECT_EQ(s.primes, expected);
    EXPECT_EQ(stable_max(s), primes(6, {{0, 1, 2, 3, 4, 5}}));
}

TEST(StablePrimes, SmallExamples) {
    const auto x = stable_primes(Filtration::powers(ideal(1, {{1}})));
    ASSERT_TRUE(x.stabilized);
    EXPECT_EQ(x.primes, primes(1, {{0}}));
    EXPECT_EQ(x.stabilized_at, 1u);
    EXPECT_EQ(stable_max(x), primes(1, {{0}}));

    const auto t = stable_primes(Filtration::powers(triangle()));
    ASSERT_TRUE(t.stabilized);
    EXPECT_EQ(t.primes.size(), 4u);
    EXPECT_EQ(t.stabilized_at, 2u);
    EXPECT_EQ(stable_max(t), primes(3, {{0, 1, 2}}));
}

TEST(StablePrimes, ReportsNonStabilization) {
    const auto s = stable_primes(Filtration::powers(triangle()), Window{2, 2, 1});
    EXPECT_FALSE(s.stabilized);
    EXPECT_EQ(s.levels.size(), 2u);
    EXPECT_TRUE(s.primes.empty());
    EXPECT_THROW(stable_primes(Filtration::powers(triangle()), Window{2, 3, 1}), UndefinedOperation);
}

TEST(PeriodicTail, DetectsSmallestPeriod) {
    const std::vector<int> a{5, 1, 2, 1, 2, 1, 2, 1, 2};
    const auto t = detail::detect_periodic_tail(a, 3, 4);
    ASSERT_TRUE(t);
    EXPECT_EQ(t->period, 2u);
    EXPECT_EQ(t->start, 2u);
    const std::vector<int> c{3, 3, 3, 3};
    EXPECT_EQ(detail::detect_periodic_tail(c, 3, 4)->period, 1u);
    EXPECT_FALSE(detail::detect_periodic_tail(std::vector<int>{1, 2, 3, 4, 5, 6}, 3, 2));
}

TEST(FitTail, QuasiLinearSamples) {
    // f(k) = k + 1 for odd k, 3k/2 for even k.
    std::vector<std::optional<Degree>> s;
    for (unsigned k = 1; k <= 12; ++k) s.emplace_back(k % 2 ? k + 1 : 3 * k / 2);
    s[0] = 7;
    const auto t = detail::fit_tail(s, Window{12, 3, 4}, 4);
    ASSERT_TRUE(t);
    EXPECT_EQ(t->period, 2u);
    EXPECT_EQ(t->branches[0].slope, Rational(3) / 2);
    EXPECT_EQ(t->branches[1].slope, Rational(1));
    EXPECT_EQ(t->branches[1].intercept, Rational(1));
    EXPECT_EQ(t->stabilization_index, 2u);
    EXPECT_EQ(t->predict(20), Rational(30));
}

TEST(IsStablePrime, Examples) {
    const auto F = Filtration::powers(session_ideal());
    const auto yes = is_stable_prime(F, MonomialPrime(6, {4, 3, 1, 0}));
    EXPECT_TRUE(yes.stabilized);
    EXPECT_TRUE(yes.stable);
    EXPECT_EQ(yes.last_k, 12u);
    EXPECT_FALSE(is_stable_prime(F, MonomialPrime(6, {0, 1})).stable);
    EXPECT_TRUE(is_stable_prime(Filtration::powers(triangle()), MonomialPrime::maximal(3)).stable);
}

TEST(IsStablePrime, AgreesWithStableSet) {
    Rng rng(57);
    const Window w{6, 3, 2};
    for (int trial = 0; trial < 10; ++trial) {
        const auto I = random_ideal(rng, 3, 4, 3);
        if (I.is_unit()) continue;
        const auto F = Filtration::powers(I);
        const auto s = stable_primes(F, w);
        if (!s.stabilized) continue;
        for (std::uint32_t mask = 1; mask < 8; ++mask) {
            std::vector<std::size_t> sup;
            for (std::size_t i = 0; i < 3; ++i)
                if (mask & (1u << i)) sup.push_back(i);
            const MonomialPrime p(3, sup);
            const auto e = is_stable_prime(F, p, w);
            if (e.stabilized) EXPECT_EQ(e.stable, contains_prime(s.primes, p)) << to_string(I) << " " << to_string(p);
        }
    }
}

TEST(SocComponent, Examples) {
    const auto T = Filtration::powers(triangle());
    const auto stable = stable_primes(T).primes;
    const auto s = soc_component(T, MonomialPrime::maximal(3), 1, stable);
    ASSERT_TRUE(s.alpha);
    EXPECT_EQ(s.alpha->degree, 3u);
    EXPECT_EQ(s.alpha->witness, ev({1, 1, 1}));
    EXPECT_TRUE(s.denominator.is_subset_of(s.numerator));

    const auto X = Filtration::powers(ideal(1, {{1}}));
    const auto x = soc_component(X, MonomialPrime(1, {0}), 2, primes(1, {{0}}));
    ASSERT_TRUE(x.alpha);
    EXPECT_EQ(x.alpha->degree, 2u);

    EXPECT_THROW(soc_component(T, MonomialPrime(3, {0}), 1, stable), NotAssociatedPrime);
}

TEST(SocComponent, MatchesVpOnTheTail) {
    for (const auto& I : {triangle(), parse_ideal("x1^2, x1*x2^2, x3^3", 3), parse_ideal("x1*x2, x2*x3, x3*x4", 4)}) {
        const auto F = Filtration::powers(I);
        const Window w{7, 3, 1};
        const auto s = stable_primes(F, w);
        ASSERT_TRUE(s.stabilized);
        for (const auto& p : s.primes) {
            const auto fit = v_function_p(F, p, w);
            ASSERT_TRUE(fit.detected) << fit.failure;
            for (unsigned k = std::max(2u, fit.tail->stabilization_index); k <= w.kmax; ++k) {
                const auto soc = soc_component(F, p, k - 1, s.primes);
                ASSERT_TRUE(soc.alpha);
                EXPECT_EQ(Rational(static_cast<long long>(soc.alpha->degree)), fit.tail->predict(k))
                    << to_string(I) << " " << to_string(p) << " k=" << k;
            }
        }
    }
}

TEST(SocComponent, SearchAgreesWithExplicitQuotient) {
    Rng rng(73);
    for (int trial = 0; trial < 15; ++trial) {
        const auto I = random_ideal(rng, 3, 4, 3);
        if (I.is_unit()) continue;
        for (const auto& F : {Filtration::powers(I), Filtration::closure(I)}) {
            const auto s = stable_primes(F, Window{6, 3, 2});
            if (!s.stabilized) continue;
            for (const auto& p : s.primes)
                for (unsigned k = 1; k <= 3; ++k) {
                    const auto a = soc_component(F, p, k, s.primes).alpha;
                    const auto b = soc_alpha(F, p, k, s.primes);
                    ASSERT_EQ(a.has_value(), b.has_value()) << to_string(I);
                    if (a) EXPECT_EQ(a->degree, b->degree) << to_string(I) << " " << to_string(p) << " k=" << k;
                }
        }
    }
}

TEST(VFunctionP, Examples) {
    const auto s = v_function_p(Filtration::powers(session_ideal()), MonomialPrime(6, {0, 1, 3, 4}));
    ASSERT_TRUE(s.detected) << s.failure;
    EXPECT_EQ(only_branch(s).slope, rat(2));
    EXPECT_EQ(only_branch(s).intercept, rat(0));

    const auto x = v_function_p(Filtration::powers(ideal(1, {{1}})), MonomialPrime(1, {0}));
    ASSERT_TRUE(x.detected);
    EXPECT_EQ(only_branch(x).slope, rat(1));
    EXPECT_EQ(only_branch(x).intercept, rat(-1));

    const auto t = v_function_p(Filtration::powers(triangle()), MonomialPrime::maximal(3));
    ASSERT_TRUE(t.detected);
    EXPECT_EQ(only_branch(t).slope, rat(2));
    EXPECT_EQ(only_branch(t).intercept, rat(-1));
    EXPECT_EQ(t.tail->stabilization_index, 2u);
    EXPECT_FALSE(t.samples[0]);

    EXPECT_THROW(v_function_p(Filtration::powers(triangle()), MonomialPrime(3, {0})), NotAssociatedPrime);
}

TEST(VFunction, Examples) {
    const auto s = v_function(Filtration::powers(session_ideal()));
    ASSERT_TRUE(s.detected) << s.failure;
    EXPECT_EQ(only_branch(s).slope, rat(2));
    EXPECT_EQ(only_branch(s).intercept, rat(-1));

    const auto t = v_function(Filtration::powers(triangle()));
    ASSERT_TRUE(t.detected);
    EXPECT_EQ(only_branch(t).slope, rat(2));
    EXPECT_EQ(only_branch(t).intercept, rat(-1));
    EXPECT_EQ(t.tail->stabilization_index, 1u);

    const auto x = v_function(Filtration::powers(ideal(1, {{1}})));
    ASSERT_TRUE(x.detected);
    EXPECT_EQ(only_branch(x).slope, rat(1));
    EXPECT_EQ(only_branch(x).intercept, rat(-1));
}

TEST(VFunction, ClosureFiltrationIsQuasiLinear) {
    const auto F = Filtration::closure(parse_ideal("x1^3, x2^2", 2));
    const auto f = v_function(F, Window{10, 3, 4});
    ASSERT_TRUE(f.tail) << f.failure;
    for (unsigned k = 1; k <= 10; ++k)
        if (k >= f.tail->stabilization_index) EXPECT_EQ(f.tail->predict(k), Rational(static_cast<long long>(*f.samples[k - 1])));
}

TEST(VFunction, TailPredictsBeyondTheWindow) {
    for (const auto& I : {triangle(), parse_ideal("x1^2*x2, x2^3, x1*x3", 3)}) {
        const auto F = Filtration::powers(I);
        const Window w{6, 3, 1};
        const auto f = v_function(F, w);
        ASSERT_TRUE(f.detected) << f.failure;
        for (unsigned k : {f.tail->stabilization_index + 3 * f.tail->period, w.kmax + 2})
            EXPECT_EQ(f.tail->predict(k), Rational(static_cast<long long>(v_number(power(I, k)).value))) << "k=" << k;
    }
}

TEST(StabilityIndices, Triangle) {
    const auto s = stability_indices(Filtration::powers(triangle()));
    EXPECT_TRUE(s.complete);
    EXPECT_EQ(s.vstab, 1u);
    EXPECT_EQ(s.astab, 2u);
    EXPECT_EQ(s.vstab_p.at(MonomialPrime::maximal(3)), 2u);
    EXPECT_EQ(s.astab_p.at(MonomialPrime::maximal(3)), 2u);
    EXPECT_EQ(s.astab_p.at(MonomialPrime(3, {0, 1})), 1u);
}

TEST(StabilityIndices, PrincipalPrime) {
    const auto s = stability_indices(Filtration::powers(ideal(1, {{1}})));
    EXPECT_EQ(s.vstab, 1u);
    EXPECT_EQ(s.astab, 1u);
    EXPECT_EQ(s.vstab_p.at(MonomialPrime(1, {0})), 1u);
    EXPECT_THROW(stability_indices(Filtration::closure(ideal(1, {{1}}))), UndefinedOperation);
}

TEST(ReesMap, Examples) {
    const auto r = rees_map_description(ideal(1, {{2}}));
    ASSERT_EQ(r.images.size(), 1u);
    EXPECT_EQ(r.y_bidegrees.front(), (std::pair<Degree, unsigned>{2, 1}));
    EXPECT_EQ(to_json(r)["images"][0]["image"], "x1^2*t");

    const auto t = rees_map_description(triangle());
    ASSERT_EQ(t.images.size(), 3u);
    for (const auto& b : t.y_bidegrees) EXPECT_EQ(b, (std::pair<Degree, unsigned>{2, 1}));

    try {
        rees_map_description(MonomialIdeal::unit(2));
        FAIL();
    } catch (const UndefinedOperation& e) {
        EXPECT_STREQ(e.what(), "Rees map of unit ideal undefined");
    }
}
