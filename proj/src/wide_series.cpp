#include "qsign/wide_series.hpp"

#include "qsign/errors.hpp"

#include <gmp.h>

#include <algorithm>
#include <bit>
#include <cstring>
#include <new>
#include <type_traits>

namespace qsign::qpoly {

static_assert(std::is_same_v<mp_limb_t, std::uint64_t>, "limb layout assumes 64-bit GMP limbs");

namespace {

constexpr std::size_t kLimbBits = 64;

bool is_negative(const std::uint64_t* c, std::size_t width) noexcept
{
    return (c[width - 1] >> 63) != 0;
}

/// Bits b with the value in [-2^b, 2^b).
std::size_t bits_of(const std::uint64_t* c, std::size_t width) noexcept
{
    const std::uint64_t fill = is_negative(c, width) ? ~std::uint64_t{0} : 0;
    for (std::size_t l = width; l-- > 0;) {
        const std::uint64_t v = c[l] ^ fill;
        if (v != 0)
            return l * kLimbBits + static_cast<std::size_t>(std::bit_width(v));
    }
    return 0;
}

}  // namespace

WideSeries::WideSeries(std::size_t capacity) : capacity_(capacity)
{
    if (capacity == 0)
        throw DomainError("WideSeries: capacity must be >= 1");
    limbs_.reset(static_cast<std::uint64_t*>(std::calloc(capacity, sizeof(std::uint64_t))));
    if (!limbs_)
        throw std::bad_alloc();
    limbs_[0] = 1;
}

void WideSeries::apply_factor(std::size_t m)
{
    if (m == 0)
        throw DomainError("WideSeries: degenerate factor (1 - q^0)");
    if (m >= capacity_)
        return;
    ensure_headroom();

    const std::size_t new_top = std::min(top_ + m, capacity_ - 1);
    std::uint64_t* base = limbs_.get();
    // descending so c[e - m] is still the old value when read
    if (width_ == 1) {
        for (std::size_t e = new_top; e >= m; --e) {
            if (e - m <= top_)
                base[e] -= base[e - m];
            if (e == m)
                break;
        }
    } else {
        const auto w = static_cast<mp_size_t>(width_);
        for (std::size_t e = new_top; e >= m; --e) {
            if (e - m <= top_)
                mpn_sub_n(base + e * width_, base + e * width_, base + (e - m) * width_, w);
            if (e == m)
                break;
        }
    }
    top_ = new_top;
    ++bound_bits_;
}

void WideSeries::ensure_headroom()
{
    // the next subtraction needs bound_bits_ + 1 value bits plus a sign bit
    if (bound_bits_ + 2 <= width_ * kLimbBits)
        return;
    bound_bits_ = max_bits();
    if (bound_bits_ + 2 <= width_ * kLimbBits)
        return;
    widen(width_ + 1);
}

void WideSeries::widen(std::size_t new_width)
{
    const std::size_t old_width = width_;
    auto* grown = static_cast<std::uint64_t*>(
        std::realloc(limbs_.get(), capacity_ * new_width * sizeof(std::uint64_t)));
    if (grown == nullptr)
        throw std::bad_alloc();
    (void)limbs_.release();
    limbs_.reset(grown);
    std::vector<std::uint64_t> tmp(old_width);
    // high to low: the destination of e never overlaps an unmoved source below e
    for (std::size_t e = top_ + 1; e-- > 0;) {
        std::memcpy(tmp.data(), grown + e * old_width, old_width * sizeof(std::uint64_t));
        const std::uint64_t fill = is_negative(tmp.data(), old_width) ? ~std::uint64_t{0} : 0;
        std::uint64_t* dst = grown + e * new_width;
        std::memcpy(dst, tmp.data(), old_width * sizeof(std::uint64_t));
        std::fill(dst + old_width, dst + new_width, fill);
    }
    std::fill(grown + (top_ + 1) * new_width, grown + capacity_ * new_width, 0);
    width_ = new_width;
}

std::size_t WideSeries::max_bits() const noexcept
{
    std::size_t best = 0;
    for (std::size_t e = 0; e <= top_; ++e)
        best = std::max(best, bits_of(limbs_at(e), width_));
    return best;
}

BigInt WideSeries::coefficient(std::size_t e) const
{
    BigInt out;
    if (e > top_)
        return out;
    const std::uint64_t* c = limbs_at(e);
    mpz_import(out.get_mpz_t(), width_, -1, sizeof(std::uint64_t), 0, 0, c);
    if (is_negative(c, width_)) {
        BigInt wrap;
        mpz_setbit(wrap.get_mpz_t(), width_ * kLimbBits);
        out -= wrap;
    }
    return out;
}

int WideSeries::sign(std::size_t e) const noexcept
{
    if (e > top_)
        return 0;
    const std::uint64_t* c = limbs_at(e);
    if (is_negative(c, width_))
        return -1;
    for (std::size_t l = 0; l < width_; ++l) {
        if (c[l] != 0)
            return 1;
    }
    return 0;
}

std::uint64_t WideSeries::residue(std::size_t e, std::uint64_t modulus) const
{
    if (modulus == 0)
        throw DomainError("WideSeries::residue: modulus must be >= 1");
    const BigInt v = coefficient(e);
    return mpz_fdiv_ui(v.get_mpz_t(), modulus);
}

IntPolynomial WideSeries::to_polynomial() const
{
    std::vector<BigInt> v(top_ + 1);
    for (std::size_t e = 0; e <= top_; ++e)
        v[e] = coefficient(e);
    return IntPolynomial(std::move(v));
}

}  // namespace qsign::qpoly
