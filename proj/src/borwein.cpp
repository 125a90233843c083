#include "qsign/borwein.hpp"

#include "qsign/product.hpp"

#include <string>

namespace qsign::borwein {

using qpoly::IntPolynomial;

std::uint64_t borwein_degree(std::uint64_t n) { return 3 * (n + 1) * (n + 1); }

std::uint64_t residue_modulus(std::uint64_t n) { return 3 * (n + 1); }

IntPolynomial TripleDecomposition::reassemble() const
{
    IntPolynomial out = a.inflate(3);
    out -= b.inflate(3).shifted(1);
    out -= c.inflate(3).shifted(2);
    return out;
}

Json to_json(const SignViolation& v)
{
    return Json{{"exponent", v.exponent},
                {"coefficient", encode_int(v.coefficient)},
                {"expected", v.expected == ExpectedSign::nonnegative ? ">=0" : "<=0"}};
}

BorweinSeries expand_borwein(std::uint64_t n)
{
    return BorweinSeries{n, qpoly::expand_product(qpoly::borwein_spec(n))};
}

TripleDecomposition decompose_abc(const BorweinSeries& s)
{
    std::vector<BigInt> a, b, c;
    const auto& coeffs = s.coeffs.coeffs();
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        switch (e % 3) {
        case 0:
            a.push_back(coeffs[e]);
            break;
        case 1:
            b.push_back(-coeffs[e]);
            break;
        default:
            c.push_back(-coeffs[e]);
            break;
        }
    }
    return {IntPolynomial(std::move(a)), IntPolynomial(std::move(b)), IntPolynomial(std::move(c))};
}

SignReport check_sign_pattern(const BorweinSeries& s)
{
    SignReport report{s.n, true, {}};
    const auto& coeffs = s.coeffs.coeffs();
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        const int sg = sgn(coeffs[e]);
        if (e % 3 == 0 && sg < 0)
            report.violations.push_back({e, coeffs[e], ExpectedSign::nonnegative});
        else if (e % 3 != 0 && sg > 0)
            report.violations.push_back({e, coeffs[e], ExpectedSign::nonpositive});
    }
    report.pass = report.violations.empty();
    return report;
}

SignReport check_sign_pattern(const qpoly::WideSeries& s, std::uint64_t n, std::uint64_t period)
{
    SignReport report{n, true, {}};
    for (std::size_t e = 0; e <= s.top(); ++e) {
        const int sg = s.sign(e);
        if (e % period == 0 && sg < 0)
            report.violations.push_back({e, s.coefficient(e), ExpectedSign::nonnegative});
        else if (e % period != 0 && sg > 0)
            report.violations.push_back({e, s.coefficient(e), ExpectedSign::nonpositive});
    }
    report.pass = report.violations.empty();
    return report;
}

IntPolynomial a_via_qbinomial(std::uint64_t m)
{
    const auto row = qpoly::gaussian_binomial_row(2 * m);
    const auto kmax = static_cast<std::int64_t>(m / 3);
    IntPolynomial sum;
    for (std::int64_t k = -kmax; k <= kmax; ++k) {
        const auto exponent = static_cast<std::size_t>(k * (9 * k - 1) / 2);
        const auto lower = static_cast<std::size_t>(static_cast<std::int64_t>(m) + 3 * k);
        IntPolynomial term = row[lower].shifted(exponent);
        if (k % 2 != 0)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

std::vector<BigInt> residue_partial_sums(const BorweinSeries& s)
{
    const std::uint64_t modulus = residue_modulus(s.n);
    std::vector<BigInt> sums(modulus);
    const auto& coeffs = s.coeffs.coeffs();
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        sums[e % modulus] += coeffs[e];
    return sums;
}

ReportDocument verify_partial_sum_positivity(std::uint64_t n)
{
    ReportDocument doc;
    doc.command = "partial-sums";
    doc.params["n"] = n;
    const auto sums = residue_partial_sums(expand_borwein(n));
    for (std::size_t b = 0; b < sums.size(); b += 3) {
        if (sgn(sums[b]) <= 0)
            doc.add_violation(Json{{"n", n}, {"residue", b}, {"partial_sum", encode_int(sums[b])},
                                   {"expected", ">0"}});
    }
    doc.data["N"] = residue_modulus(n);
    doc.data["partial_sums"] = encode_ints(sums);
    doc.finalize();
    return doc;
}

}  // namespace qsign::borwein
