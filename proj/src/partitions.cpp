#include "qsign/partitions.hpp"

#include "qsign/errors.hpp"
#include "qsign/product.hpp"

#include <algorithm>
#include <string>

namespace qsign::partitions {

using qpoly::IntPolynomial;

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0)
            return false;
    }
    return true;
}

IntPolynomial pentagonal_series(std::size_t j_max)
{
    std::vector<BigInt> c(j_max + 1);
    c[0] = 1;
    // generalized pentagonal numbers n(3n-1)/2 for n = 1, -1, 2, -2, ...
    for (std::size_t n = 1;; ++n) {
        const std::size_t g1 = n * (3 * n - 1) / 2;
        const std::size_t g2 = n * (3 * n + 1) / 2;
        if (g1 > j_max)
            break;
        const long sign = n % 2 == 0 ? 1 : -1;
        c[g1] += sign;
        if (g2 <= j_max)
            c[g2] += sign;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial euler_product(std::size_t j_max)
{
    qpoly::WideSeries s(j_max + 1);
    for (std::size_t n = 1; n <= j_max; ++n)
        s.apply_factor(n);
    return s.to_polynomial();
}

EtaQuotientPrefix eta_quotient_coeffs(std::uint64_t p, std::size_t j_max)
{
    if (!is_prime(p))
        throw DomainError("eta_quotient_coeffs: p = " + std::to_string(p) + " is not prime");
    qpoly::ProductSpec spec;
    spec.modulus = p;
    for (std::uint64_t r = 1; r < p; ++r)
        spec.residues.push_back(r);
    spec.upper_index = j_max / p;
    spec.truncation = j_max;
    const auto series = qpoly::expand_product_wide(spec);

    EtaQuotientPrefix out{p, j_max, std::vector<BigInt>(j_max + 1)};
    for (std::size_t j = 0; j <= j_max; ++j)
        out.coeffs[j] = series.coefficient(j);
    return out;
}

RestrictedPartitionSpec::RestrictedPartitionSpec(std::uint64_t modulus,
                                                 const std::vector<std::int64_t>& forbidden)
    : modulus_(modulus)
{
    if (modulus == 0)
        throw DomainError("RestrictedPartitionSpec: modulus must be >= 1");
    const auto m = static_cast<std::int64_t>(modulus);
    for (std::int64_t r : forbidden)
        forbidden_.push_back(static_cast<std::uint64_t>(((r % m) + m) % m));
    std::sort(forbidden_.begin(), forbidden_.end());
    forbidden_.erase(std::unique(forbidden_.begin(), forbidden_.end()), forbidden_.end());
}

bool RestrictedPartitionSpec::allows(std::uint64_t part) const noexcept
{
    return part >= 1 && !std::binary_search(forbidden_.begin(), forbidden_.end(), part % modulus_);
}

std::vector<BigInt> restricted_partition_counts(std::size_t k_max, const RestrictedPartitionSpec& spec)
{
    std::vector<BigInt> c(k_max + 1);
    c[0] = 1;
    for (std::size_t part = 1; part <= k_max; ++part) {
        if (!spec.allows(part))
            continue;
        for (std::size_t e = part; e <= k_max; ++e)
            c[e] += c[e - part];
    }
    return c;
}

BigInt restricted_partition_count(std::int64_t k, const RestrictedPartitionSpec& spec)
{
    if (k < 0)
        return 0;
    return restricted_partition_counts(static_cast<std::size_t>(k), spec).back();
}

std::vector<BigInt> partition_numbers(std::size_t k_max)
{
    std::vector<BigInt> p(k_max + 1);
    p[0] = 1;
    for (std::size_t k = 1; k <= k_max; ++k) {
        for (std::size_t n = 1;; ++n) {
            const std::size_t g1 = n * (3 * n - 1) / 2;
            if (g1 > k)
                break;
            const std::size_t g2 = n * (3 * n + 1) / 2;
            const bool add = n % 2 == 1;
            if (add)
                p[k] += p[k - g1];
            else
                p[k] -= p[k - g1];
            if (g2 <= k) {
                if (add)
                    p[k] += p[k - g2];
                else
                    p[k] -= p[k - g2];
            }
        }
    }
    return p;
}

StanleyTerms stanley_terms(std::uint64_t p)
{
    if (!is_prime(p))
        throw DomainError("stanley_terms: p = " + std::to_string(p) + " is not prime");
    if (p == 2)
        throw DomainError("stanley_terms: p = 2 is unsupported");
    const auto m = static_cast<std::int64_t>(3 * p);
    const auto ps = static_cast<std::int64_t>(p);
    StanleyTerms terms{p, std::nullopt, RestrictedPartitionSpec(3 * p, {0, (3 * ps - 1) / 2, (3 * ps + 1) / 2}),
                       std::nullopt, 0, 0};
    if (p == 3)
        return terms;

    const std::int64_t t = (p % 3 == 2) ? 1 : 2;
    terms.t = static_cast<std::uint64_t>(t);
    terms.second = RestrictedPartitionSpec(
        static_cast<std::uint64_t>(m), {0, ((3 - 2 * t) * ps - 1) / 2, ((3 + 2 * t) * ps + 1) / 2});
    terms.offset = t == 1 ? (p + 1) / 6 : (p - 1) / 6;
    terms.printed_offset = static_cast<std::uint64_t>(t * (ps * t + 1) / 6);
    return terms;
}

namespace {

/// rhs(k) for k = 0..k_max with a given shift of the second term.
std::vector<BigInt> stanley_values(const StanleyTerms& terms, std::size_t k_max, std::uint64_t offset)
{
    std::vector<BigInt> out = restricted_partition_counts(k_max, terms.first);
    if (!terms.second)
        return out;
    const auto second = restricted_partition_counts(k_max, *terms.second);
    for (std::size_t k = offset; k <= k_max; ++k)
        out[k] += second[k - offset];
    return out;
}

}  // namespace

BigInt stanley_rhs(std::uint64_t p, std::int64_t k)
{
    const StanleyTerms terms = stanley_terms(p);
    if (k < 0)
        return 0;
    return stanley_values(terms, static_cast<std::size_t>(k), terms.offset).back();
}

ReportDocument verify_stanley_formula(std::uint64_t p, std::size_t k_max)
{
    ReportDocument doc;
    doc.command = "stanley";
    doc.params["p"] = p;
    doc.params["k_max"] = k_max;

    const StanleyTerms terms = stanley_terms(p);
    const auto eta = eta_quotient_coeffs(p, p * k_max);
    const auto rhs = stanley_values(terms, k_max, terms.offset);

    std::vector<BigInt> lhs(k_max + 1);
    for (std::size_t k = 0; k <= k_max; ++k) {
        lhs[k] = eta.coeffs[p * k];
        if (lhs[k] != rhs[k])
            doc.add_violation(Json{{"p", p}, {"k", k}, {"a_pk", encode_int(lhs[k])},
                                   {"rhs", encode_int(rhs[k])}});
    }

    Json printed_mismatches = Json::array();
    if (terms.second && terms.printed_offset != terms.offset) {
        const auto printed = stanley_values(terms, k_max, terms.printed_offset);
        for (std::size_t k = 0; k <= k_max; ++k) {
            if (printed[k] != lhs[k])
                printed_mismatches.push_back(Json{{"k", k}, {"a_pk", encode_int(lhs[k])},
                                                  {"rhs_printed_offset", encode_int(printed[k])}});
        }
    }

    auto residues = [](const RestrictedPartitionSpec& s) {
        Json arr = Json::array();
        for (auto r : s.forbidden())
            arr.push_back(r);
        return arr;
    };
    doc.data["t"] = terms.t ? Json(*terms.t) : Json(nullptr);
    doc.data["first_forbidden"] = residues(terms.first);
    doc.data["second_forbidden"] = terms.second ? residues(*terms.second) : Json(nullptr);
    doc.data["offset"] = terms.offset;
    doc.data["printed_offset"] = terms.printed_offset;
    doc.data["a_pk"] = encode_ints(lhs);
    doc.data["printed_offset_mismatches"] = printed_mismatches;
    if (!printed_mismatches.empty())
        doc.notes.push_back("the printed offset t(pt+1)/6 disagrees with the eta-quotient coefficients; "
                            "the derived offset is used");
    doc.finalize();
    return doc;
}

ReportDocument sign_coherence_check(std::uint64_t p, std::size_t j_max)
{
    ReportDocument doc;
    doc.command = "coherence";
    doc.params["p"] = p;
    doc.params["j_max"] = j_max;

    const auto eta = eta_quotient_coeffs(p, j_max);
    std::size_t pairs = 0;
    for (std::size_t j = 0; j + p <= j_max; ++j, ++pairs) {
        if (sgn(eta.coeffs[j]) * sgn(eta.coeffs[j + p]) < 0)
            doc.add_violation(Json{{"p", p}, {"j", j}, {"a_j", encode_int(eta.coeffs[j])},
                                   {"a_j_plus_p", encode_int(eta.coeffs[j + p])}});
    }
    doc.data["pairs_checked"] = pairs;
    doc.finalize();
    return doc;
}

}  // namespace qsign::partitions
