#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace solcon {

using BigInt = mpz_class;

inline BigInt to_big(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline bool fits_u64(const BigInt& v) {
  return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& v) {
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, 1, sizeof(r), 0, 0, v.get_mpz_t());
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace solcon
