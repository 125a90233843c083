#include "qsign/product.hpp"

#include "qsign/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qsign::qpoly {

void ProductSpec::validate() const
{
    if (modulus == 0)
        throw DomainError("ProductSpec: modulus must be >= 1");
    if (multiplicity == 0)
        throw DomainError("ProductSpec: multiplicity must be >= 1");
    if (residues.empty())
        throw DomainError("ProductSpec: residue set is empty");
    for (auto r : residues) {
        if (r >= modulus)
            throw DomainError("ProductSpec: residue " + std::to_string(r) + " not reduced mod " +
                              std::to_string(modulus));
        if (r == 0)
            throw DomainError("ProductSpec: residue 0 yields the degenerate factor (1 - q^0)");
    }
}

std::vector<std::uint64_t> ProductSpec::exponents() const
{
    validate();
    std::vector<std::uint64_t> rs = residues;
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

    std::vector<std::uint64_t> out;
    out.reserve((upper_index + 1) * rs.size() * multiplicity);
    for (std::uint64_t j = 0; j <= upper_index; ++j) {
        for (auto r : rs) {
            for (std::uint32_t k = 0; k < multiplicity; ++k)
                out.push_back(modulus * j + r);
        }
    }
    // already ascending since r < modulus
    return out;
}

std::uint64_t ProductSpec::full_degree() const
{
    const auto e = exponents();
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

ProductSpec borwein_spec(std::uint64_t n)
{
    return ProductSpec{3, {1, 2}, 1, n, {}};
}

WideSeries expand_product_wide(const ProductSpec& spec)
{
    const auto exps = spec.exponents();
    std::uint64_t capacity = std::accumulate(exps.begin(), exps.end(), std::uint64_t{0}) + 1;
    if (spec.truncation)
        capacity = std::min<std::uint64_t>(capacity, *spec.truncation + 1);
    WideSeries series(capacity);
    for (auto m : exps)
        series.apply_factor(m);
    return series;
}

IntPolynomial expand_product(const ProductSpec& spec)
{
    return expand_product_wide(spec).to_polynomial();
}

}  // namespace qsign::qpoly
