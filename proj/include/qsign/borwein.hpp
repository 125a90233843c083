#pragma once

#include "qsign/bigint.hpp"
#include "qsign/polynomial.hpp"
#include "qsign/report.hpp"
#include "qsign/wide_series.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

// The conjecture-facing layer over prod_{j=0}^{n} (1 - q^{3j+1})(1 - q^{3j+2}).
namespace qsign::borwein {

/// 3(n+1)^2, the degree of the n-th product.
std::uint64_t borwein_degree(std::uint64_t n);

/// 3(n+1), the modulus of the residue partial sums.
std::uint64_t residue_modulus(std::uint64_t n);

struct BorweinSeries {
    std::uint64_t n = 0;
    qpoly::IntPolynomial coeffs;
};

/// series = A(q^3) - q B(q^3) - q^2 C(q^3)
struct TripleDecomposition {
    qpoly::IntPolynomial a;
    qpoly::IntPolynomial b;
    qpoly::IntPolynomial c;

    [[nodiscard]] qpoly::IntPolynomial reassemble() const;
};

enum class ExpectedSign { nonnegative, nonpositive };

struct SignViolation {
    std::size_t exponent = 0;
    BigInt coefficient;
    ExpectedSign expected = ExpectedSign::nonnegative;
};

struct SignReport {
    std::uint64_t n = 0;
    bool pass = true;
    std::vector<SignViolation> violations;
};

Json to_json(const SignViolation& v);

BorweinSeries expand_borwein(std::uint64_t n);

TripleDecomposition decompose_abc(const BorweinSeries& s);

/// a_j >= 0 when 3 | j, a_j <= 0 otherwise; every violating exponent is listed.
SignReport check_sign_pattern(const BorweinSeries& s);

/// Same rule with an arbitrary period p (coefficients at multiples of p
/// nonnegative, the rest nonpositive), read straight from a packed series.
SignReport check_sign_pattern(const qpoly::WideSeries& s, std::uint64_t n, std::uint64_t period);

/// sum_{k=-floor(m/3)}^{floor(m/3)} (-1)^k q^{k(9k-1)/2} [2m; m+3k]_q,
/// the A-polynomial of the product with m factor pairs (n = m - 1).
qpoly::IntPolynomial a_via_qbinomial(std::uint64_t m);

/// Entry b is sum_{i>=0} a_{b+iN}, N = 3(n+1), for b = 0..N-1.
std::vector<BigInt> residue_partial_sums(const BorweinSeries& s);

/// Strict positivity of the residue partial sums at every b = 0 (mod 3).
/// The full vector is kept under data.partial_sums.
ReportDocument verify_partial_sum_positivity(std::uint64_t n);

}  // namespace qsign::borwein
