#pragma once

#include "qsign/bigint.hpp"
#include "qsign/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <vector>

namespace qsign::qpoly {

/// Dense coefficient buffer for long products of sparse binomial factors.
///
/// Every coefficient occupies the same number of 64-bit limbs and is stored
/// in two's complement, so multiplying by (1 - q^m) is one multi-limb
/// subtraction per coefficient. The buffer tracks a bound on coefficient bit
/// length (exact after a rescan, +1 per factor otherwise) and widens every
/// coefficient by one limb whenever the next factor could overflow, so the
/// result is always exact.
class WideSeries {
public:
    /// The constant series 1 with room for exponents 0..capacity-1.
    explicit WideSeries(std::size_t capacity);

    /// Multiply in place by (1 - q^m), dropping exponents >= capacity.
    void apply_factor(std::size_t m);

    [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }
    /// Highest exponent that may be nonzero (upper bound on the degree).
    [[nodiscard]] std::size_t top() const noexcept { return top_; }
    [[nodiscard]] std::size_t limb_width() const noexcept { return width_; }
    [[nodiscard]] std::size_t bytes() const noexcept { return capacity_ * width_ * sizeof(std::uint64_t); }

    /// Exact coefficient of q^e (zero beyond the capacity).
    [[nodiscard]] BigInt coefficient(std::size_t e) const;
    /// Sign of the coefficient of q^e: -1, 0 or 1.
    [[nodiscard]] int sign(std::size_t e) const noexcept;
    /// Coefficient of q^e reduced into [0, modulus).
    [[nodiscard]] std::uint64_t residue(std::size_t e, std::uint64_t modulus) const;
    /// Exact bit bound: every coefficient lies in [-2^b, 2^b).
    [[nodiscard]] std::size_t max_bits() const noexcept;

    [[nodiscard]] IntPolynomial to_polynomial() const;

private:
    [[nodiscard]] const std::uint64_t* limbs_at(std::size_t e) const noexcept
    {
        return limbs_.get() + e * width_;
    }
    void ensure_headroom();
    void widen(std::size_t new_width);

    std::size_t capacity_;
    std::size_t width_ = 1;
    std::size_t top_ = 0;
    std::size_t bound_bits_ = 1;
    struct FreeDeleter {
        void operator()(std::uint64_t* p) const noexcept { std::free(p); }
    };
    // malloc-backed so widening can grow in place (mremap) instead of copying
    std::unique_ptr<std::uint64_t[], FreeDeleter> limbs_;
};

}  // namespace qsign::qpoly
