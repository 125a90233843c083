#pragma once

#include "qsign/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace qsign::qpoly {

/// Optional truncation degree: coefficients above it are dropped.
using Truncation = std::optional<std::size_t>;

/// Dense univariate polynomial with exact integer coefficients.
///
/// Coefficients are indexed by exponent. Trailing zeros are trimmed after
/// every operation, so the zero polynomial stores no coefficients and its
/// degree() is empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial one() { return IntPolynomial{1}; }
    /// c * q^e
    static IntPolynomial monomial(const BigInt& c, std::size_t e);

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] std::optional<std::size_t> degree() const noexcept;
    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of q^e; zero outside the stored range.
    [[nodiscard]] BigInt coeff(std::size_t e) const;
    [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] IntPolynomial reversed() const;
    [[nodiscard]] bool is_palindromic() const;
    /// P(q^stride)
    [[nodiscard]] IntPolynomial inflate(std::size_t stride) const;
    /// q^shift * P
    [[nodiscard]] IntPolynomial shifted(std::size_t shift) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const BigInt& scalar);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator-(IntPolynomial a);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// P * (1 - q^m). Throws DomainError for m = 0.
IntPolynomial mul_sparse_factor(const IntPolynomial& p, std::size_t m, Truncation trunc = {});

/// Schoolbook product, truncated if requested.
IntPolynomial mul_trunc(const IntPolynomial& p, const IntPolynomial& q, Truncation trunc = {});

/// R with R * Q == P. Throws DomainError for Q = 0 and InexactDivisionError
/// when the remainder is nonzero.
IntPolynomial exact_div(const IntPolynomial& p, const IntPolynomial& q);

IntPolynomial pow_trunc(const IntPolynomial& p, std::uint64_t e, Truncation trunc = {});

/// Gaussian binomial [n; k]_q via the q-Pascal recurrence; zero when k > n.
IntPolynomial gaussian_binomial(std::size_t n, std::size_t k);

/// [n; k]_q for every k = 0..n.
std::vector<IntPolynomial> gaussian_binomial_row(std::size_t n);

/// Horner evaluation.
BigInt eval_at(const IntPolynomial& p, const BigInt& x);

}  // namespace qsign::qpoly
