#pragma once

#include "qsign/bigint.hpp"
#include "qsign/polynomial.hpp"
#include "qsign/report.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

// Euler's pentagonal series, the eta-quotient prod_{p does not divide n} (1 - q^n),
// and its expression through partitions avoiding three residue classes mod 3p.
namespace qsign::partitions {

bool is_prime(std::uint64_t n);

/// sum_{n in Z} (-1)^n q^{n(3n-1)/2}, truncated at degree j_max.
qpoly::IntPolynomial pentagonal_series(std::size_t j_max);

/// prod_{n=1}^{j_max} (1 - q^n), truncated at degree j_max.
qpoly::IntPolynomial euler_product(std::size_t j_max);

struct EtaQuotientPrefix {
    std::uint64_t p = 0;
    std::size_t j_max = 0;
    /// a_{p,0..j_max}; always j_max + 1 entries.
    std::vector<BigInt> coeffs;
};

/// Throws DomainError when p is not prime.
EtaQuotientPrefix eta_quotient_coeffs(std::uint64_t p, std::size_t j_max);

/// Parts x >= 1 with x mod m outside a forbidden residue set.
class RestrictedPartitionSpec {
public:
    /// Residues are reduced into [0, modulus) (negative ones included) and deduplicated.
    RestrictedPartitionSpec(std::uint64_t modulus, const std::vector<std::int64_t>& forbidden);

    [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
    [[nodiscard]] const std::vector<std::uint64_t>& forbidden() const noexcept { return forbidden_; }
    [[nodiscard]] bool allows(std::uint64_t part) const noexcept;

private:
    std::uint64_t modulus_;
    std::vector<std::uint64_t> forbidden_;
};

/// Partitions of k into allowed parts; 0 for k < 0, 1 for k = 0.
BigInt restricted_partition_count(std::int64_t k, const RestrictedPartitionSpec& spec);

/// Counts for every k = 0..k_max.
std::vector<BigInt> restricted_partition_counts(std::size_t k_max, const RestrictedPartitionSpec& spec);

/// Unrestricted p(0..k_max) from the pentagonal recurrence.
std::vector<BigInt> partition_numbers(std::size_t k_max);

/// The two restricted partition terms expressing a_{p, pk}.
struct StanleyTerms {
    std::uint64_t p = 0;
    /// Smallest positive t with 3 | pt + 1; absent for p = 3.
    std::optional<std::uint64_t> t;
    RestrictedPartitionSpec first;
    std::optional<RestrictedPartitionSpec> second;
    /// Shift of the second term derived from the recentred pentagonal subseries:
    /// (p+1)/6 for t = 1, (p-1)/6 for t = 2.
    std::uint64_t offset = 0;
    /// t(pt+1)/6, the shift as printed; kept for comparison only.
    std::uint64_t printed_offset = 0;
};

/// Throws DomainError for non-prime p and for p = 2.
StanleyTerms stanley_terms(std::uint64_t p);

/// P_first(k) + P_second(k - offset); the single first term when p = 3.
BigInt stanley_rhs(std::uint64_t p, std::int64_t k);

/// a_{p,pk} == stanley_rhs(p, k) for 0 <= k <= k_max. Disagreements under
/// the printed offset are listed in data.printed_offset_mismatches and never
/// fail the report.
ReportDocument verify_stanley_formula(std::uint64_t p, std::size_t k_max);

/// a_{p,j} * a_{p,j+p} >= 0 for 0 <= j <= j_max - p.
ReportDocument sign_coherence_check(std::uint64_t p, std::size_t j_max);

}  // namespace qsign::partitions
