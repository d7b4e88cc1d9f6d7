#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace canard {

// Arbitrary-precision rational, always stored fully reduced with a positive
// denominator (GMP's mpq canonical form guarantees both).
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Serialize as "num" or "num/den", the exact form used in all JSON output.
inline std::string rat_to_string(const Rat& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Rat rat_from_string(const std::string& s) { return Rat(s); }

}  // namespace canard
