#include "qsign/errors.hpp"
#include "qsign/exactmath.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

using namespace qsign;
using namespace qsign::exactmath;

TEST(Divisors, Examples)
{
    EXPECT_EQ(divisors(6), (std::vector<std::uint64_t>{1, 2, 3, 6}));
    EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
    EXPECT_THROW(divisors(0), DomainError);
}

TEST(Divisors, MatchTrialDivision)
{
    for (std::uint64_t n = 1; n <= 500; ++n)
        ASSERT_EQ(divisors(n), oracle::divisors(n)) << n;
}

TEST(Mobius, Examples)
{
    EXPECT_EQ(mobius(1), 1);
    EXPECT_EQ(mobius(6), 1);
    EXPECT_EQ(mobius(12), 0);
    EXPECT_THROW(mobius(0), DomainError);
}

TEST(Mobius, DivisorSumVanishes)
{
    for (std::uint64_t n = 1; n <= 200; ++n) {
        int s = 0;
        for (auto d : divisors(n))
            s += mobius(d);
        EXPECT_EQ(s, n == 1 ? 1 : 0) << n;
        EXPECT_EQ(mobius(n), oracle::mobius(n)) << n;
    }
}

TEST(EulerPhi, ExamplesAndGcdCount)
{
    EXPECT_EQ(euler_phi(1), 1u);
    EXPECT_EQ(euler_phi(3), 2u);
    EXPECT_EQ(euler_phi(6), 2u);
    EXPECT_THROW(euler_phi(0), DomainError);
    for (std::uint64_t n = 1; n <= 300; ++n)
        ASSERT_EQ(euler_phi(n), oracle::phi(n)) << n;
}

TEST(RamanujanSum, Examples)
{
    EXPECT_EQ(ramanujan_sum(3, 0), 2);
    EXPECT_EQ(ramanujan_sum(6, 3), -2);
    EXPECT_EQ(ramanujan_sum(6, 1), 1);
}

TEST(RamanujanSum, RootsOfUnity)
{
    for (std::uint64_t d = 1; d <= 60; ++d)
        for (std::int64_t b = -70; b <= 70; ++b)
            ASSERT_EQ(ramanujan_sum(d, b), oracle::ramanujan_complex(d, b)) << d << ' ' << b;
}

TEST(RamanujanSum, Properties)
{
    for (std::uint64_t d = 1; d <= 100; ++d) {
        EXPECT_EQ(ramanujan_sum(d, 0), static_cast<std::int64_t>(euler_phi(d)));
        std::int64_t total = 0;
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(d); ++b)
            total += ramanujan_sum(d, b);
        if (d >= 2)
            EXPECT_EQ(total, 0) << d;
        for (std::int64_t b : {-1000003LL, -97LL, -1LL, 1LL, 35LL, 360360LL, 999999937LL}) {
            const auto g = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(b < 0 ? -b : b), d));
            EXPECT_EQ(ramanujan_sum(d, b), ramanujan_sum(d, g)) << d << ' ' << b;
        }
    }
    EXPECT_EQ(ramanujan_sum(7, INT64_MIN), ramanujan_sum(7, 1));
}

TEST(Binomial, ExamplesAndPascal)
{
    EXPECT_EQ(binomial(4, 2), 6);
    EXPECT_EQ(binomial(5, 0), 1);
    EXPECT_EQ(binomial(3, 5), 0);
    for (std::uint64_t n = 1; n <= 60; ++n)
        for (std::uint64_t k = 1; k <= n; ++k)
            ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    EXPECT_EQ(binomial(100, 50).get_str(), "100891344545564193334812497256");
}

TEST(Trinomial, ExamplesAndConvolution)
{
    EXPECT_EQ(trinomial_coeff(2, 2), 3);
    EXPECT_EQ(trinomial_coeff(17, 0), 1);
    EXPECT_EQ(trinomial_coeff(2, 5), 0);

    std::vector<std::int64_t> row{1};
    for (std::uint64_t m = 0; m <= 30; ++m) {
        if (m > 0)
            row = oracle::multiply(row, {1, 1, 1});
        for (std::uint64_t k = 0; k <= 2 * m + 2; ++k)
            ASSERT_EQ(trinomial_coeff(m, k), k < row.size() ? row[k] : 0) << m << ' ' << k;
    }
}

TEST(Trinomial, RowIdentities)
{
    for (std::uint64_t m = 0; m <= 30; ++m) {
        BigInt sum = 0, alternating = 0, three = 1;
        for (std::uint64_t i = 0; i < m; ++i)
            three *= 3;
        for (std::uint64_t k = 0; k <= 2 * m; ++k) {
            sum += trinomial_coeff(m, k);
            alternating += (k % 2 == 0 ? 1 : -1) * trinomial_coeff(m, k);
            EXPECT_EQ(trinomial_coeff(m, k), trinomial_coeff(m, 2 * m - k));
        }
        EXPECT_EQ(sum, three) << m;
        EXPECT_EQ(alternating, 1) << m;
    }
}

TEST(RisingFactorial, Examples)
{
    EXPECT_EQ(rising_factorial(3, 2), 12);
    EXPECT_EQ(rising_factorial(-5, 0), 1);
    EXPECT_EQ(rising_factorial(1, 4), 24);
    EXPECT_EQ(rising_factorial(-2, 3), 0);
    EXPECT_EQ(rising_factorial(-3, 2), 6);
}

TEST(CycleTypes, Examples)
{
    EXPECT_EQ(cycle_type_count(CycleType{{1, 1, 0}}), 3);
    EXPECT_EQ(cycle_type_count(CycleType{{3, 0, 0}}), 1);
    EXPECT_EQ(cycle_type_count(CycleType{{0, 0, 1}}), 2);
    EXPECT_THROW(cycle_type_count(CycleType{{1, 0, 1}}), DomainError);
    EXPECT_FALSE((CycleType{{2, 1}}).valid());
}

TEST(CycleTypes, CensusOfAllPermutations)
{
    for (int k = 1; k <= 8; ++k) {
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        std::map<std::vector<std::uint32_t>, std::uint64_t> census;
        do {
            ++census[oracle::cycle_counts(perm)];
        } while (std::next_permutation(perm.begin(), perm.end()));

        const auto types = cycle_types(static_cast<std::uint32_t>(k));
        ASSERT_EQ(types.size(), census.size()) << k;
        BigInt total = 0, factorial = 1;
        for (int i = 2; i <= k; ++i)
            factorial *= i;
        for (const auto& t : types) {
            ASSERT_TRUE(t.valid());
            ASSERT_EQ(cycle_type_count(t), census.at(t.counts)) << k;
            total += cycle_type_count(t);
        }
        EXPECT_EQ(total, factorial);
    }
}

TEST(CycleTypes, RisingFactorialIdentity)
{
    for (std::uint32_t k = 0; k <= 8; ++k) {
        for (long q = 1; q <= 5; ++q) {
            BigInt s = 0;
            for (const auto& t : cycle_types(k)) {
                BigInt power = 1;
                for (std::uint64_t i = 0; i < t.cycles(); ++i)
                    power *= q;
                s += cycle_type_count(t) * power;
            }
            EXPECT_EQ(s, rising_factorial(q, k)) << k << ' ' << q;
        }
    }
}

TEST(ArithmeticContext, ConcurrentLookupsAgree)
{
    ArithmeticContext ctx;
    std::vector<std::jthread> pool;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&] {
            for (std::uint64_t n = 1; n <= 300; ++n)
                if (ctx.divisors(n) != divisors(n) || ctx.mobius(n) != mobius(n))
                    ++mismatches;
        });
    pool.clear();
    EXPECT_EQ(mismatches.load(), 0);
}
