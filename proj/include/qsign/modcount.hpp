#pragma once

#include "qsign/bigint.hpp"
#include "qsign/polynomial.hpp"
#include "qsign/report.hpp"

#include <cstdint>
#include <optional>
#include <vector>

// Signed subset-sum counts over D = Z_N \ 3Z_N, N = 3(n+1).
//
// M(k, b) is the number of k-subsets of D summing to b (mod N) and
// M(b) = sum_k (-1)^k M(k, b). Three evaluators are provided: a dynamic
// program, brute-force enumeration, and the divisor-grouped character-sum
// closed form.
namespace qsign::modcount {

/// |D| = 2N/3 elements, the residues 1, 2, 4, 5, ... below N.
std::vector<std::uint64_t> residue_set(std::uint64_t n);

struct SignedCountTable {
    std::uint64_t n = 0;
    std::uint64_t modulus = 0;
    /// counts[k][b], 0 <= k <= 2N/3, 0 <= b < N.
    std::vector<std::vector<BigInt>> counts;
    /// signed_counts[b] = sum_k (-1)^k counts[k][b].
    std::vector<BigInt> signed_counts;

    friend bool operator==(const SignedCountTable&, const SignedCountTable&) = default;
};

SignedCountTable dp_signed_counts(std::uint64_t n);

/// Largest |D| the enumerator accepts (2^24 subsets).
inline constexpr std::uint64_t kEnumerationLimit = 24;

/// Walks every subset of D. Throws CapacityError when |D| > kEnumerationLimit.
SignedCountTable enumerate_signed_counts(std::uint64_t n);

/// G_d(t) = prod_{a in D} (1 + chi(a) t) for any additive character chi of
/// order d, which depends on d alone.
struct CharacterClassPolynomial {
    std::uint64_t modulus = 0;
    std::uint64_t order = 0;
    qpoly::IntPolynomial g;
};

/// (1 - (-t)^d)^{N/d} / (1 - (-t)^{d'})^{N/(3d')}, d' = d / gcd(d, 3).
/// Throws DomainError unless 3 | N and d | N.
CharacterClassPolynomial character_class_polynomial(std::uint64_t modulus, std::uint64_t d);

/// (1/N) sum_{d | N} c_d(b) [t^k] G_d(t), or with k omitted
/// (1/N) sum_{d | N} c_d(b) G_d(-1) = M(b). Throws InternalError if the
/// division by N is inexact.
BigInt divisor_formula_eval(std::uint64_t n, std::optional<std::uint64_t> k, std::int64_t b);

/// Full table from the closed form (each G_d built once).
SignedCountTable divisor_formula_table(std::uint64_t n);

/// Value of the closed form exactly as printed for 3 | b:
/// (1/N)(2 * 3^{N/3} + sum_{d | N, d != 1, 3} c_d(b) sum_{d | k} C(2N/(3d) + k/d - 1, k/d)),
/// with k over multiples of d in [0, 2N/3] and the generalized binomial
/// product whenever 2N/(3d) is not an integer.
struct PrintedFormulaResult {
    std::uint64_t n = 0;
    std::int64_t b = 0;
    BigRational main_term;
    BigRational value;
    BigInt oracle;
    BigRational discrepancy;  // value - oracle
    std::vector<std::uint64_t> generalized_divisors;  // d with 3d not dividing 2N
};

/// Throws DomainError unless 3 | b.
PrintedFormulaResult printed_formula_eval(std::uint64_t n, std::int64_t b);

/// dp vs enumeration (when within capacity) vs closed form on every (k, b),
/// M(b) > 0 for 3 | b as the claim under test, printed-formula discrepancies
/// as notes. Throws OracleMismatch naming (N, k, b) on any disagreement.
ReportDocument cross_validate(std::uint64_t n);

}  // namespace qsign::modcount
