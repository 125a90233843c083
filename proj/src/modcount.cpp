#include "qsign/modcount.hpp"

#include "qsign/errors.hpp"
#include "qsign/exactmath.hpp"

#include <bit>
#include <numeric>
#include <sstream>
#include <string>

namespace qsign::modcount {

using qpoly::IntPolynomial;

namespace {

std::uint64_t modulus_of(std::uint64_t n) { return 3 * (n + 1); }

SignedCountTable empty_table(std::uint64_t n)
{
    const std::uint64_t modulus = modulus_of(n);
    const std::uint64_t size = 2 * modulus / 3;
    SignedCountTable t;
    t.n = n;
    t.modulus = modulus;
    t.counts.assign(size + 1, std::vector<BigInt>(modulus));
    t.signed_counts.assign(modulus, 0);
    return t;
}

void fill_signed(SignedCountTable& t)
{
    for (std::size_t k = 0; k < t.counts.size(); ++k) {
        for (std::size_t b = 0; b < t.modulus; ++b) {
            if (k % 2 == 0)
                t.signed_counts[b] += t.counts[k][b];
            else
                t.signed_counts[b] -= t.counts[k][b];
        }
    }
}

/// (1 - (-t)^d)^e
IntPolynomial cyclotomic_power(std::uint64_t d, std::uint64_t e)
{
    const IntPolynomial base = IntPolynomial::one() -
                               IntPolynomial::monomial(d % 2 == 0 ? 1 : -1, static_cast<std::size_t>(d));
    return qpoly::pow_trunc(base, e);
}

BigInt divide_by_modulus(const BigInt& total, std::uint64_t modulus, const char* what)
{
    if (!mpz_divisible_ui_p(total.get_mpz_t(), modulus))
        throw InternalError(std::string(what) + ": sum not divisible by N = " + std::to_string(modulus));
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), total.get_mpz_t(), modulus);
    return q;
}

std::string join(const std::vector<BigInt>& v)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i].get_str();
    os << ']';
    return os.str();
}

void require_equal_tables(const SignedCountTable& expected, const SignedCountTable& actual,
                          const char* route)
{
    for (std::size_t k = 0; k < expected.counts.size(); ++k) {
        for (std::size_t b = 0; b < expected.modulus; ++b) {
            if (expected.counts[k][b] != actual.counts[k][b])
                throw OracleMismatch(std::string(route) + " disagrees with dp at N = " +
                                     std::to_string(expected.modulus) + ", k = " + std::to_string(k) +
                                     ", b = " + std::to_string(b) + ": " +
                                     expected.counts[k][b].get_str() + " vs " +
                                     actual.counts[k][b].get_str());
        }
    }
}

}  // namespace

std::vector<std::uint64_t> residue_set(std::uint64_t n)
{
    std::vector<std::uint64_t> d;
    for (std::uint64_t a = 1; a < modulus_of(n); ++a) {
        if (a % 3 != 0)
            d.push_back(a);
    }
    return d;
}

SignedCountTable dp_signed_counts(std::uint64_t n)
{
    SignedCountTable t = empty_table(n);
    const std::uint64_t modulus = t.modulus;
    t.counts[0][0] = 1;
    std::size_t used = 0;
    for (std::uint64_t a : residue_set(n)) {
        ++used;
        // descending k reads row k-1 before this element touched it
        for (std::size_t k = used; k >= 1; --k) {
            auto& dst = t.counts[k];
            const auto& src = t.counts[k - 1];
            for (std::uint64_t b = 0; b < modulus; ++b) {
                if (src[b] != 0)
                    dst[(b + a) % modulus] += src[b];
            }
        }
    }
    fill_signed(t);
    return t;
}

SignedCountTable enumerate_signed_counts(std::uint64_t n)
{
    const auto elems = residue_set(n);
    if (elems.size() > kEnumerationLimit)
        throw CapacityError("enumerate_signed_counts: |D| = " + std::to_string(elems.size()) +
                            " exceeds the enumeration limit of " + std::to_string(kEnumerationLimit));
    SignedCountTable t = empty_table(n);
    const std::uint64_t modulus = t.modulus;
    std::vector<std::vector<std::uint64_t>> raw(elems.size() + 1, std::vector<std::uint64_t>(modulus));
    const std::uint64_t subsets = std::uint64_t{1} << elems.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::uint64_t sum = 0;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
            sum += elems[static_cast<std::size_t>(std::countr_zero(rest))];
        ++raw[static_cast<std::size_t>(std::popcount(mask))][sum % modulus];
    }
    for (std::size_t k = 0; k < raw.size(); ++k) {
        for (std::size_t b = 0; b < modulus; ++b)
            t.counts[k][b] = static_cast<unsigned long>(raw[k][b]);
    }
    fill_signed(t);
    return t;
}

CharacterClassPolynomial character_class_polynomial(std::uint64_t modulus, std::uint64_t d)
{
    if (modulus == 0 || modulus % 3 != 0)
        throw DomainError("character_class_polynomial: N must be a positive multiple of 3");
    if (d == 0 || modulus % d != 0)
        throw DomainError("character_class_polynomial: d must divide N");
    const std::uint64_t sub_order = d / std::gcd(d, std::uint64_t{3});
    const IntPolynomial whole = cyclotomic_power(d, modulus / d);
    const IntPolynomial subgroup = cyclotomic_power(sub_order, modulus / (3 * sub_order));
    return {modulus, d, qpoly::exact_div(whole, subgroup)};
}

BigInt divisor_formula_eval(std::uint64_t n, std::optional<std::uint64_t> k, std::int64_t b)
{
    const std::uint64_t modulus = modulus_of(n);
    BigInt total = 0;
    for (std::uint64_t d : exactmath::divisors(modulus)) {
        const IntPolynomial g = character_class_polynomial(modulus, d).g;
        const BigInt weight = k ? g.coeff(static_cast<std::size_t>(*k)) : qpoly::eval_at(g, -1);
        total += BigInt(static_cast<long>(exactmath::ramanujan_sum(d, b))) * weight;
    }
    return divide_by_modulus(total, modulus, "divisor_formula_eval");
}

SignedCountTable divisor_formula_table(std::uint64_t n)
{
    SignedCountTable t = empty_table(n);
    const std::uint64_t modulus = t.modulus;
    std::vector<std::vector<BigInt>> totals(t.counts.size(), std::vector<BigInt>(modulus));
    std::vector<BigInt> signed_totals(modulus);
    for (std::uint64_t d : exactmath::divisors(modulus)) {
        const IntPolynomial g = character_class_polynomial(modulus, d).g;
        const BigInt at_minus_one = qpoly::eval_at(g, -1);
        for (std::uint64_t b = 0; b < modulus; ++b) {
            const BigInt c(static_cast<long>(exactmath::ramanujan_sum(d, static_cast<std::int64_t>(b))));
            for (std::size_t k = 0; k < t.counts.size(); ++k)
                totals[k][b] += c * g.coeff(k);
            signed_totals[b] += c * at_minus_one;
        }
    }
    for (std::size_t k = 0; k < t.counts.size(); ++k) {
        for (std::uint64_t b = 0; b < modulus; ++b)
            t.counts[k][b] = divide_by_modulus(totals[k][b], modulus, "divisor_formula_table");
    }
    for (std::uint64_t b = 0; b < modulus; ++b)
        t.signed_counts[b] = divide_by_modulus(signed_totals[b], modulus, "divisor_formula_table");
    return t;
}

namespace {

PrintedFormulaResult printed_eval(std::uint64_t n, std::int64_t b, const SignedCountTable& dp)
{
    if (b % 3 != 0)
        throw DomainError("printed_formula_eval: b must be divisible by 3");
    const std::uint64_t modulus = modulus_of(n);
    const std::uint64_t size = 2 * modulus / 3;

    PrintedFormulaResult r;
    r.n = n;
    r.b = b;
    BigInt three_pow;
    mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, modulus / 3);
    r.main_term = BigRational(2 * three_pow, BigInt(static_cast<unsigned long>(modulus)));
    r.main_term.canonicalize();

    BigRational correction = 0;
    for (std::uint64_t d : exactmath::divisors(modulus)) {
        if (d == 1 || d == 3)
            continue;
        // x = 2N/(3d), possibly fractional
        BigRational x(BigInt(static_cast<unsigned long>(2 * modulus)),
                      BigInt(static_cast<unsigned long>(3 * d)));
        x.canonicalize();
        if (x.get_den() != 1)
            r.generalized_divisors.push_back(d);
        // sum over k = j d <= 2N/3 of C(x + j - 1, j) = x (x+1) ... (x+j-1) / j!
        BigRational inner = 0;
        BigRational term = 1;
        for (std::uint64_t j = 0; j * d <= size; ++j) {
            if (j > 0) {
                term *= x + BigRational(static_cast<unsigned long>(j - 1));
                term /= BigRational(static_cast<unsigned long>(j));
            }
            inner += term;
        }
        correction += BigRational(static_cast<long>(exactmath::ramanujan_sum(d, b))) * inner;
    }
    r.value = r.main_term + correction / BigRational(static_cast<unsigned long>(modulus));
    r.value.canonicalize();

    const std::uint64_t reduced = static_cast<std::uint64_t>(((b % static_cast<std::int64_t>(modulus)) +
                                                              static_cast<std::int64_t>(modulus)) %
                                                             static_cast<std::int64_t>(modulus));
    r.oracle = dp.signed_counts[reduced];
    r.discrepancy = r.value - BigRational(r.oracle);
    r.discrepancy.canonicalize();
    return r;
}

}  // namespace

PrintedFormulaResult printed_formula_eval(std::uint64_t n, std::int64_t b)
{
    return printed_eval(n, b, dp_signed_counts(n));
}

ReportDocument cross_validate(std::uint64_t n)
{
    ReportDocument doc;
    doc.command = "modcount";
    doc.params["n"] = n;

    const SignedCountTable dp = dp_signed_counts(n);
    const std::uint64_t modulus = dp.modulus;

    if (residue_set(n).size() <= kEnumerationLimit) {
        const SignedCountTable brute = enumerate_signed_counts(n);
        require_equal_tables(dp, brute, "enumeration");
        doc.add_cross_check("signed_counts:dp_vs_enumeration", join(dp.signed_counts),
                            join(brute.signed_counts));
    }
    const SignedCountTable closed = divisor_formula_table(n);
    require_equal_tables(dp, closed, "divisor formula");
    doc.add_cross_check("signed_counts:dp_vs_divisor_formula", join(dp.signed_counts),
                        join(closed.signed_counts));

    // row sums: sum_b M(k, b) = C(2N/3, k); sum_b M(b) = 0
    bool rows_ok = true;
    for (std::size_t k = 0; k < dp.counts.size(); ++k) {
        const BigInt row = std::accumulate(dp.counts[k].begin(), dp.counts[k].end(), BigInt(0));
        rows_ok = rows_ok && row == exactmath::binomial(dp.counts.size() - 1, k);
    }
    doc.add_cross_check("row_sums_equal_binomials", "true", rows_ok ? "true" : "false");
    const BigInt total = std::accumulate(dp.signed_counts.begin(), dp.signed_counts.end(), BigInt(0));
    doc.add_cross_check("signed_total", "0", total.get_str());

    bool negative_off_class = true;
    for (std::uint64_t b = 0; b < modulus; ++b) {
        const BigInt& m = dp.signed_counts[b];
        if (b % 3 == 0 && sgn(m) <= 0)
            doc.add_violation(Json{{"N", modulus}, {"b", b}, {"M", encode_int(m)}, {"expected", ">0"}});
        if (b % 3 != 0 && sgn(m) >= 0)
            negative_off_class = false;
    }

    Json printed = Json::array();
    for (std::uint64_t b = 0; b < modulus; b += 3) {
        const auto r = printed_eval(n, static_cast<std::int64_t>(b), dp);
        Json gen = Json::array();
        for (auto d : r.generalized_divisors)
            gen.push_back(d);
        printed.push_back(Json{{"b", b},
                               {"main_term", to_decimal(r.main_term)},
                               {"value", to_decimal(r.value)},
                               {"oracle", encode_int(r.oracle)},
                               {"discrepancy", to_decimal(r.discrepancy)},
                               {"generalized_binomial_divisors", gen}});
    }

    doc.data["N"] = modulus;
    doc.data["signed"] = encode_ints(dp.signed_counts);
    doc.data["negative_off_class_observed"] = negative_off_class;
    doc.data["printed_formula"] = printed;
    doc.notes.push_back(
        "printed_formula is report-only: k runs over multiples of d in [0, 2N/3] and non-integral "
        "2N/(3d) uses the generalized binomial product");
    doc.finalize();
    return doc;
}

}  // namespace qsign::modcount
