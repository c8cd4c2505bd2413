#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace indres {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

BigInt parse_bigint(const std::string& s);

// Exponent of the prime p in n (n != 0).
int valuation(const BigInt& n, unsigned long p);
int valuation(std::uint64_t n, std::uint64_t p);

std::uint64_t to_u64(const BigInt& v);

}  // namespace indres
