#include "qsign/polynomial.hpp"

#include "qsign/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace qsign::qpoly {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t e)
{
    std::vector<BigInt> v(e + 1);
    v[e] = c;
    return IntPolynomial(std::move(v));
}

std::optional<std::size_t> IntPolynomial::degree() const noexcept
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

BigInt IntPolynomial::coeff(std::size_t e) const
{
    return e < coeffs_.size() ? coeffs_[e] : BigInt(0);
}

IntPolynomial IntPolynomial::reversed() const
{
    return IntPolynomial(std::vector<BigInt>(coeffs_.rbegin(), coeffs_.rend()));
}

bool IntPolynomial::is_palindromic() const
{
    return std::equal(coeffs_.begin(), coeffs_.begin() + coeffs_.size() / 2, coeffs_.rbegin());
}

IntPolynomial IntPolynomial::inflate(std::size_t stride) const
{
    if (stride == 0)
        throw DomainError("inflate: stride must be >= 1");
    if (is_zero())
        return {};
    std::vector<BigInt> v((coeffs_.size() - 1) * stride + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i * stride] = coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shifted(std::size_t shift) const
{
    if (is_zero())
        return {};
    std::vector<BigInt> v(shift + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(shift));
    return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    trim();
    return *this;
}

IntPolynomial operator-(IntPolynomial a)
{
    for (auto& c : a.coeffs_)
        c = -c;
    return a;
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial mul_sparse_factor(const IntPolynomial& p, std::size_t m, Truncation trunc)
{
    if (m == 0)
        throw DomainError("mul_sparse_factor: exponent must be >= 1");
    if (p.is_zero())
        return {};
    std::size_t len = p.size() + m;
    if (trunc)
        len = std::min(len, *trunc + 1);
    std::vector<BigInt> out(len);
    for (std::size_t e = 0; e < len; ++e) {
        if (e < p.size())
            out[e] = p.coeffs()[e];
        if (e >= m && e - m < p.size())
            out[e] -= p.coeffs()[e - m];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial mul_trunc(const IntPolynomial& p, const IntPolynomial& q, Truncation trunc)
{
    if (p.is_zero() || q.is_zero())
        return {};
    std::size_t len = p.size() + q.size() - 1;
    if (trunc)
        len = std::min(len, *trunc + 1);
    std::vector<BigInt> out(len);
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0)
            continue;
        const std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial exact_div(const IntPolynomial& p, const IntPolynomial& q)
{
    if (q.is_zero())
        throw DomainError("exact_div: division by the zero polynomial");
    if (p.is_zero())
        return {};
    if (p.size() < q.size())
        throw InexactDivisionError("exact_div: divisor degree exceeds dividend degree");

    std::vector<BigInt> rem = p.coeffs();
    const auto& d = q.coeffs();
    const BigInt& lead = d.back();
    std::vector<BigInt> quot(p.size() - q.size() + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        BigInt& top = rem[i + d.size() - 1];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw InexactDivisionError("exact_div: leading coefficient does not divide");
        mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j < d.size(); ++j)
            mpz_submul(rem[i + j].get_mpz_t(), quot[i].get_mpz_t(), d[j].get_mpz_t());
    }
    for (const auto& r : rem) {
        if (r != 0)
            throw InexactDivisionError("exact_div: nonzero remainder");
    }
    return IntPolynomial(std::move(quot));
}

IntPolynomial pow_trunc(const IntPolynomial& p, std::uint64_t e, Truncation trunc)
{
    IntPolynomial result = IntPolynomial::one();
    if (trunc)
        result = mul_trunc(result, IntPolynomial::one(), trunc);
    IntPolynomial base = trunc ? mul_trunc(p, IntPolynomial::one(), trunc) : p;
    while (e > 0) {
        if (e & 1)
            result = mul_trunc(result, base, trunc);
        e >>= 1;
        if (e > 0)
            base = mul_trunc(base, base, trunc);
    }
    return result;
}

IntPolynomial gaussian_binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return {};
    // row[j] holds [r; j] for the current r, j <= k
    std::vector<IntPolynomial> row(k + 1);
    row[0] = IntPolynomial::one();
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t j = std::min(r, k); j >= 1; --j)
            row[j] = row[j - 1] + row[j].shifted(j);
    }
    return row[k];
}

std::vector<IntPolynomial> gaussian_binomial_row(std::size_t n)
{
    std::vector<IntPolynomial> row(n + 1);
    row[0] = IntPolynomial::one();
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t j = r; j >= 1; --j)
            row[j] = row[j - 1] + row[j].shifted(j);
    }
    return row;
}

BigInt eval_at(const IntPolynomial& p, const BigInt& x)
{
    BigInt acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

}  // namespace qsign::qpoly
