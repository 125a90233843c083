#include "qsign/exactmath.hpp"

#include "qsign/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace qsign::exactmath {

namespace {

void require_positive(std::uint64_t n, const char* what)
{
    if (n == 0)
        throw DomainError(std::string(what) + ": argument must be >= 1");
}

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    require_positive(n, "divisors");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t i = 1; i <= n / i; ++i) {
        if (n % i != 0)
            continue;
        small.push_back(i);
        if (i != n / i)
            large.push_back(n / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius(std::uint64_t n)
{
    require_positive(n, "mobius");
    int sign = 1;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        sign = -sign;
    }
    if (n > 1)
        sign = -sign;
    return sign;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    require_positive(n, "euler_phi");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

std::int64_t ramanujan_sum(std::uint64_t d, std::int64_t b)
{
    require_positive(d, "ramanujan_sum");
    const std::uint64_t magnitude =
        b < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    const std::uint64_t g = std::gcd(d, magnitude);
    std::int64_t sum = 0;
    for (std::uint64_t i : divisors(g))
        sum += mobius(d / i) * static_cast<std::int64_t>(i);
    return sum;
}

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt trinomial_coeff(std::uint64_t m, std::uint64_t k)
{
    if (k > 2 * m)
        return 0;
    // choose i factors contributing x^2 and k-2i contributing x
    BigInt sum = 0;
    for (std::uint64_t i = 0; 2 * i <= k; ++i) {
        if (i > m || k - 2 * i > m - i)
            continue;
        sum += binomial(m, i) * binomial(m - i, k - 2 * i);
    }
    return sum;
}

BigInt rising_factorial(const BigInt& q, std::uint64_t k)
{
    BigInt r = 1;
    BigInt f = q;
    for (std::uint64_t i = 0; i < k; ++i, ++f)
        r *= f;
    return r;
}

bool CycleType::valid() const noexcept
{
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        total += (i + 1) * static_cast<std::uint64_t>(counts[i]);
    return total == counts.size();
}

std::uint64_t CycleType::cycles() const noexcept
{
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

BigInt cycle_type_count(const CycleType& t)
{
    if (!t.valid())
        throw DomainError("cycle_type_count: type does not partition k = " +
                          std::to_string(t.size()));
    BigInt num;
    mpz_fac_ui(num.get_mpz_t(), t.size());
    BigInt den = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::uint32_t c = t.counts[i];
        if (c == 0)
            continue;
        BigInt pw, fac;
        mpz_ui_pow_ui(pw.get_mpz_t(), i + 1, c);
        mpz_fac_ui(fac.get_mpz_t(), c);
        den *= pw * fac;
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::vector<CycleType> cycle_types(std::uint32_t k)
{
    std::vector<CycleType> out;
    CycleType cur{std::vector<std::uint32_t>(k, 0)};
    // parts chosen in non-increasing order, largest allowed part first
    auto rec = [&](auto&& self, std::uint32_t remaining, std::uint32_t max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
            ++cur.counts[part - 1];
            self(self, remaining - part, part);
            --cur.counts[part - 1];
        }
    };
    rec(rec, k, k);
    return out;
}

const std::vector<std::uint64_t>& ArithmeticContext::divisors(std::uint64_t n)
{
    std::lock_guard lock(mutex_);
    auto it = divisor_cache_.find(n);
    if (it == divisor_cache_.end())
        it = divisor_cache_.emplace(n, exactmath::divisors(n)).first;
    return it->second;
}

int ArithmeticContext::mobius(std::uint64_t n)
{
    std::lock_guard lock(mutex_);
    auto it = mobius_cache_.find(n);
    if (it == mobius_cache_.end())
        it = mobius_cache_.emplace(n, exactmath::mobius(n)).first;
    return it->second;
}

}  // namespace qsign::exactmath
