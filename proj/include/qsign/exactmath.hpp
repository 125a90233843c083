#pragma once

#include "qsign/bigint.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

// Exact integer functions used by the counting formulas: divisor sums,
// Moebius, totient, Ramanujan sums, binomial/trinomial coefficients and the
// cycle-type census of the symmetric group.
namespace qsign::exactmath {

/// Ascending divisors of n. Throws DomainError for n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

int mobius(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Ramanujan's sum c_d(b) = sum_{i | gcd(d,b)} mu(d/i) i, with gcd(d, 0) = d.
/// Depends on b only through gcd(b, d); negative b is allowed.
std::int64_t ramanujan_sum(std::uint64_t d, std::int64_t b);

/// C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Coefficient of x^k in (1 + x + x^2)^m.
BigInt trinomial_coeff(std::uint64_t m, std::uint64_t k);

/// q (q+1) ... (q+k-1); 1 for k = 0.
BigInt rising_factorial(const BigInt& q, std::uint64_t k);

/// Cycle type of a permutation in S_k: counts[i-1] cycles of length i, with
/// counts.size() == k.
struct CycleType {
    std::vector<std::uint32_t> counts;

    [[nodiscard]] std::size_t size() const noexcept { return counts.size(); }
    [[nodiscard]] bool valid() const noexcept;
    /// Total number of cycles, sum of c_i.
    [[nodiscard]] std::uint64_t cycles() const noexcept;

    friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// k! / prod i^{c_i} c_i!. Throws DomainError when the type does not partition k.
BigInt cycle_type_count(const CycleType& t);

/// Every valid cycle type of S_k, in reverse-lexicographic order of the
/// underlying partition (largest parts first).
std::vector<CycleType> cycle_types(std::uint32_t k);

/// Memoizing front end for divisors and mobius. Thread-safe; cached values
/// are the freshly computed ones.
class ArithmeticContext {
public:
    const std::vector<std::uint64_t>& divisors(std::uint64_t n);
    int mobius(std::uint64_t n);

private:
    std::mutex mutex_;
    std::map<std::uint64_t, std::vector<std::uint64_t>> divisor_cache_;
    std::map<std::uint64_t, int> mobius_cache_;
};

}  // namespace qsign::exactmath
