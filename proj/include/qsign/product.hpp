#pragma once

#include "qsign/polynomial.hpp"
#include "qsign/wide_series.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qsign::qpoly {

/// prod_{j=0..upper_index} prod_{r in residues} (1 - q^{modulus*j + r})^multiplicity,
/// optionally truncated at a maximum degree.
struct ProductSpec {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> residues;
    std::uint32_t multiplicity = 1;
    std::uint64_t upper_index = 0;
    Truncation truncation;

    /// Throws DomainError on an empty or out-of-range residue set, zero
    /// modulus/multiplicity, or the degenerate factor (1 - q^0).
    void validate() const;
    /// Factor exponents in application order (ascending, repeated per multiplicity).
    [[nodiscard]] std::vector<std::uint64_t> exponents() const;
    /// Degree of the untruncated product.
    [[nodiscard]] std::uint64_t full_degree() const;
};

/// The first Borwein family: modulus 3, residues {1, 2}.
ProductSpec borwein_spec(std::uint64_t n);

IntPolynomial expand_product(const ProductSpec& spec);

/// Same expansion, kept in packed form for degrees in the millions.
WideSeries expand_product_wide(const ProductSpec& spec);

}  // namespace qsign::qpoly
