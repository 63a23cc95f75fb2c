#include <gtest/gtest.h>

#include "support.hpp"

using namespace vnum;
using namespace vnum::testing;

namespace {

MonomialIdeal intersection_of(const std::vector<IrreducibleComponent>& comps, std::size_t n) {
    MonomialIdeal acc = MonomialIdeal::unit(n);
    for (const auto& c : comps) acc = intersect(acc, c.ideal());
    return acc;
}

PrimeSet primes(std::size_t n, std::initializer_list<std::vector<std::size_t>> supports) {
    PrimeSet out;
    for (const auto& s : supports) out.emplace_back(n, s);
    return normalize(std::move(out));
}

} // namespace

TEST(IrreducibleDecomposition, Examples) {
    const auto I = ideal(2, {{2, 0}, {1, 1}});
    const auto d = irreducible_decomposition(I);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(intersection_of(d, 2), I);
    std::vector<MonomialIdeal> got;
    for (const auto& c : d) got.push_back(c.ideal());
    EXPECT_NE(std::find(got.begin(), got.end(), ideal(2, {{1, 0}})), got.end());
    EXPECT_NE(std::find(got.begin(), got.end(), ideal(2, {{2, 0}, {0, 1}})), got.end());

    const auto t = irreducible_decomposition(triangle());
    EXPECT_EQ(t.size(), 3u);
    EXPECT_EQ(intersection_of(t, 3), triangle());
    for (const auto& c : t) EXPECT_EQ(c.radical().height(), 2u);

    const auto single = irreducible_decomposition(ideal(1, {{2}}));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single.front().ideal(), ideal(1, {{2}}));
}

TEST(IrreducibleDecomposition, RejectsUnitAndZero) {
    EXPECT_THROW(irreducible_decomposition(MonomialIdeal::unit(2)), UndefinedOperation);
    EXPECT_THROW(irreducible_decomposition(MonomialIdeal::zero(2)), UndefinedOperation);
    EXPECT_THROW(associated_primes(MonomialIdeal::unit(2)), UndefinedOperation);
    EXPECT_THROW(IrreducibleComponent(ideal(2, {{1, 1}})), UndefinedOperation);
}

TEST(IrreducibleDecomposition, ExactAndIrredundantOnRandomIdeals) {
    Rng rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto I = random_ideal(rng, n, 5, 4);
        if (I.is_unit()) continue;
        const auto d = irreducible_decomposition(I);
        EXPECT_EQ(intersection_of(d, n), I) << to_string(I);
        for (std::size_t skip = 0; skip < d.size() && d.size() > 1; ++skip) {
            auto rest = d;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(skip));
            EXPECT_NE(intersection_of(rest, n), I) << "redundant component in " << to_string(I);
        }
    }
}

TEST(AssociatedPrimes, Examples) {
    EXPECT_EQ(associated_primes(triangle()), primes(3, {{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(associated_primes(ideal(1, {{1}})), primes(1, {{0}}));
    EXPECT_EQ(associated_primes(ideal(2, {{2, 0}, {1, 1}})), primes(2, {{0}, {0, 1}}));
    const auto sq = associated_primes(power(triangle(), 2));
    EXPECT_EQ(sq, primes(3, {{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}));
}

TEST(AssociatedPrimes, LocalizationRouteMatchesDecomposition) {
    Rng rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto I = random_ideal(rng, n, 5, 4);
        if (I.is_unit()) continue;
        EXPECT_EQ(associated_primes(I), associated_primes_by_decomposition(I)) << to_string(I);
    }
}

TEST(AssociatedPrimes, EveryPrimeHasAWitness) {
    Rng rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const auto I = random_ideal(rng, 3, 4, 3);
        Degree cap = 0;
        for (const auto& g : I.generators()) cap += g.degree();
        for (const auto& p : associated_primes(I)) EXPECT_TRUE(v_p_oracle(I, p, cap)) << to_string(I) << " " << to_string(p);
    }
}

TEST(AssociatedPrimes, InvariantUnderVariablePermutation) {
    Rng rng(31);
    std::vector<std::size_t> perm{2, 0, 3, 1};
    for (int trial = 0; trial < 40; ++trial) {
        const auto I = random_ideal(rng, 4, 5, 4);
        PrimeSet mapped;
        for (const auto& p : associated_primes(I)) mapped.push_back(permute(p, perm));
        EXPECT_EQ(associated_primes(permute(I, perm)), normalize(mapped));
    }
}

TEST(MonomialLocalize, Examples) {
    const auto l = monomial_localize(triangle(), MonomialPrime(3, {0, 1}));
    EXPECT_EQ(l.ideal, ideal(2, {{1, 0}, {0, 1}}));
    EXPECT_EQ(l.variables, (std::vector<std::size_t>{0, 1}));

    const auto full = monomial_localize(triangle(), MonomialPrime::maximal(3));
    EXPECT_EQ(full.ideal, triangle());

    const auto I = parse_ideal("x1*x2, x4*x5", 5);
    EXPECT_TRUE(monomial_localize(I, MonomialPrime(5, {0, 1})).ideal.is_unit());
}

TEST(MonomialLocalize, DetectsAssociatedPrimes) {
    const auto sq = power(triangle(), 2);
    EXPECT_TRUE(maximal_ideal_is_associated(sq));
    EXPECT_FALSE(maximal_ideal_is_associated(triangle()));
    EXPECT_TRUE(maximal_ideal_is_associated(monomial_localize(triangle(), MonomialPrime(3, {0, 1})).ideal));
}

TEST(MaximalPrimes, KeepsOnlyMaximalOnes) {
    const auto s = primes(3, {{0, 1}, {0, 1, 2}, {1}});
    EXPECT_EQ(maximal_primes(s), primes(3, {{0, 1, 2}}));
}
