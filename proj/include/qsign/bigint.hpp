#pragma once

#include <gmpxx.h>

#include <string>

namespace qsign {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline std::string to_decimal(const BigRational& v)
{
    BigRational c = v;
    c.canonicalize();
    return c.get_str(10);
}

}  // namespace qsign
