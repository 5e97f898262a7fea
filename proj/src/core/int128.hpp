#pragma once

#include "rational.hpp"

namespace dks {

inline BigInt to_bigint(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(u >> 64));
  BigInt lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

} // namespace dks
