#include "qsd/basis.hpp"

namespace qsd {

StringIndex StringIndex::fromBits(const std::string& bits) {
  if (bits.size() > 62) throw DomainError("string index longer than 62 bits");
  for (char c : bits)
    if (c != '0' && c != '1')
      throw DomainError("string index with non-binary character: '" + bits + "'");
  return StringIndex(bits);
}

Rank StringIndex::rank() const {
  // 2^len − 1 + binaryValue
  Rank value = 0;
  for (char c : bits_) value = (value << 1) | static_cast<Rank>(c - '0');
  return ((Rank{1} << bits_.size()) - 1) + value;
}

StringIndex StringIndex::fromRank(Rank r) {
  std::size_t len = 0;
  // Largest len with 2^len − 1 ≤ r.
  while (((Rank{1} << (len + 1)) - 1) <= r) {
    ++len;
    if (len > 62) throw DomainError("rank out of 62-bit string range");
  }
  Rank value = r - ((Rank{1} << len) - 1);
  std::string bits(len, '0');
  for (std::size_t k = 0; k < len; ++k)
    if (value & (Rank{1} << (len - 1 - k))) bits[k] = '1';
  return StringIndex(bits);
}

}  // namespace qsd
