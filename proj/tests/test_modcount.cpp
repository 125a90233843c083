#include "qsign/errors.hpp"
#include "qsign/exactmath.hpp"
#include "qsign/modcount.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <complex>

using namespace qsign;
using namespace qsign::modcount;
using qpoly::IntPolynomial;

namespace {

/// [t^k] prod_{a in D} (1 + zeta^a t) for zeta = exp(2 pi i / d) of order d,
/// evaluated numerically.
std::vector<long> character_product_numeric(std::uint64_t modulus, std::uint64_t d)
{
    const double pi = std::acos(-1.0);
    std::vector<std::complex<double>> c{1.0};
    for (std::uint64_t a = 1; a < modulus; ++a) {
        if (a % 3 == 0)
            continue;
        const auto z = std::polar(1.0, 2 * pi * static_cast<double>(a % d) / static_cast<double>(d));
        std::vector<std::complex<double>> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += c[k];
            next[k + 1] += c[k] * z;
        }
        c = std::move(next);
    }
    std::vector<long> out;
    for (const auto& x : c) {
        EXPECT_NEAR(x.imag(), 0.0, 1e-6);
        out.push_back(std::lround(x.real()));
    }
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

}  // namespace

TEST(ResidueSet, SkipsMultiplesOfThree)
{
    EXPECT_EQ(residue_set(1), (std::vector<std::uint64_t>{1, 2, 4, 5}));
    EXPECT_EQ(residue_set(0), (std::vector<std::uint64_t>{1, 2}));
    EXPECT_EQ(residue_set(9).size(), 20u);
}

TEST(DpSignedCounts, Examples)
{
    const auto t = dp_signed_counts(1);
    EXPECT_EQ(t.modulus, 6u);
    EXPECT_EQ(t.signed_counts, (std::vector<BigInt>{4, -1, -2, 2, -2, -1}));
    EXPECT_EQ(t.counts[2][0], 2);
    EXPECT_EQ(t.counts[2][3], 2);
    for (std::uint64_t n = 0; n <= 5; ++n) {
        const auto u = dp_signed_counts(n);
        EXPECT_EQ(u.counts[0][0], 1);
        for (std::size_t b = 1; b < u.modulus; ++b)
            EXPECT_EQ(u.counts[0][b], 0);
    }
}

TEST(EnumerateSignedCounts, MatchesDp)
{
    EXPECT_EQ(enumerate_signed_counts(0).signed_counts, (std::vector<BigInt>{2, -1, -1}));
    for (std::uint64_t n = 0; n <= 6; ++n)
        EXPECT_EQ(enumerate_signed_counts(n), dp_signed_counts(n)) << n;
    EXPECT_THROW(enumerate_signed_counts(12), CapacityError);
}

TEST(DpSignedCounts, RowSumsAndTotals)
{
    for (std::uint64_t n = 0; n <= 30; ++n) {
        const auto t = dp_signed_counts(n);
        const std::uint64_t size = 2 * t.modulus / 3;
        ASSERT_EQ(t.counts.size(), size + 1);
        BigInt total = 0;
        for (const auto& m : t.signed_counts)
            total += m;
        EXPECT_EQ(total, 0) << n;
        for (std::uint64_t k = 0; k <= size; ++k) {
            BigInt row = 0;
            for (const auto& c : t.counts[k])
                row += c;
            EXPECT_EQ(row, exactmath::binomial(size, k)) << n << ' ' << k;
        }
        for (std::size_t b = 0; b < t.modulus; b += 3)
            EXPECT_GT(t.signed_counts[b], 0) << n << ' ' << b;
    }
}

TEST(CharacterClassPolynomial, Examples)
{
    EXPECT_EQ(character_class_polynomial(6, 1).g, (IntPolynomial{1, 4, 6, 4, 1}));
    EXPECT_EQ(character_class_polynomial(6, 3).g, (IntPolynomial{1, -2, 3, -2, 1}));
    EXPECT_EQ(character_class_polynomial(6, 6).g, (IntPolynomial{1, 0, 1, 0, 1}));
    EXPECT_THROW(character_class_polynomial(6, 4), DomainError);
    EXPECT_THROW(character_class_polynomial(8, 2), DomainError);
}

TEST(CharacterClassPolynomial, MatchesRootsOfUnityProduct)
{
    for (std::uint64_t n = 0; n <= 9; ++n) {
        const std::uint64_t modulus = 3 * (n + 1);
        for (auto d : exactmath::divisors(modulus)) {
            const auto g = character_class_polynomial(modulus, d).g;
            const auto ref = character_product_numeric(modulus, d);
            ASSERT_EQ(g.size(), ref.size()) << modulus << ' ' << d;
            for (std::size_t k = 0; k < ref.size(); ++k)
                ASSERT_EQ(g.coeff(k), ref[k]) << modulus << ' ' << d << ' ' << k;
        }
    }
}

TEST(CharacterClassPolynomial, OrderThreeIsSignedTrinomialRow)
{
    for (std::uint64_t n = 0; n <= 20; ++n) {
        const std::uint64_t modulus = 3 * (n + 1);
        const auto g = character_class_polynomial(modulus, 3).g;
        for (std::uint64_t k = 0; k <= 2 * modulus / 3; ++k)
            ASSERT_EQ(g.coeff(k), (k % 2 == 0 ? 1 : -1) * exactmath::trinomial_coeff(modulus / 3, k));
    }
}

TEST(DivisorFormula, Examples)
{
    EXPECT_EQ(divisor_formula_eval(1, std::nullopt, 0), 4);
    EXPECT_EQ(divisor_formula_eval(1, std::nullopt, 3), 2);
    EXPECT_EQ(divisor_formula_eval(1, std::nullopt, 1), -1);
    EXPECT_EQ(divisor_formula_eval(1, 2, 0), 2);
    EXPECT_EQ(divisor_formula_eval(1, std::nullopt, -3), 2);
}

TEST(DivisorFormula, EqualsDpUpTo30)
{
    for (std::uint64_t n = 0; n <= 30; ++n)
        ASSERT_EQ(divisor_formula_table(n), dp_signed_counts(n)) << n;
    const auto t = dp_signed_counts(4);
    for (std::uint64_t k = 0; k < t.counts.size(); ++k)
        for (std::size_t b = 0; b < t.modulus; ++b)
            ASSERT_EQ(divisor_formula_eval(4, k, static_cast<std::int64_t>(b)), t.counts[k][b]);
}

TEST(PrintedFormula, RecordsDiscrepancy)
{
    const auto r = printed_formula_eval(1, 0);
    EXPECT_EQ(r.main_term, BigRational(3));
    EXPECT_EQ(r.oracle, 4);
    EXPECT_EQ(r.discrepancy, r.value - BigRational(4));
    EXPECT_EQ(r.value, BigRational(13, 3));
    EXPECT_EQ(r.discrepancy, BigRational(1, 3));
    for (std::uint64_t n = 0; n <= 8; ++n) {
        const auto s = printed_formula_eval(n, 0);
        const std::uint64_t modulus = 3 * (n + 1);
        BigInt pow3 = 1;
        for (std::uint64_t i = 0; i < modulus / 3; ++i)
            pow3 *= 3;
        BigRational expected(2 * pow3, modulus);
        expected.canonicalize();
        EXPECT_EQ(s.main_term, expected) << n;
    }
    EXPECT_THROW(printed_formula_eval(1, 1), DomainError);
}

TEST(CrossValidate, Reports)
{
    const auto one = cross_validate(1);
    EXPECT_EQ(one.status, Status::pass);
    EXPECT_TRUE(one.cross_checks_agree());
    EXPECT_EQ(one.data.at("signed"), Json::parse("[4,-1,-2,2,-2,-1]"));
    EXPECT_EQ(cross_validate(0).data.at("signed")[0], 2);
    const auto four = cross_validate(4);
    EXPECT_EQ(four.status, Status::pass);
    EXPECT_EQ(four.data.at("N"), 15);
}
