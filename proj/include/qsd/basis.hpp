#ifndef QSD_BASIS_HPP
#define QSD_BASIS_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "qsd/rational.hpp"

namespace qsd {

using Rank = std::uint64_t;

// A finite binary string indexing the computational basis {|w⟩ : w ∈ {0,1}*}.
// The total order is length-lexicographic: λ < 0 < 1 < 00 < 01 < ...,
// with rank(w) = 2^len(w) − 1 + binaryValue(w).
class StringIndex {
 public:
  StringIndex() = default;  // λ

  static StringIndex lambda() { return StringIndex(); }
  // Throws DomainError on characters other than '0'/'1' or length > 62.
  static StringIndex fromBits(const std::string& bits);
  static StringIndex fromRank(Rank r);

  const std::string& bits() const { return bits_; }
  std::size_t length() const { return bits_.size(); }
  Rank rank() const;

  friend bool operator==(const StringIndex& a, const StringIndex& b) {
    return a.bits_ == b.bits_;
  }
  // Length-lex order.
  friend std::strong_ordering operator<=>(const StringIndex& a, const StringIndex& b) {
    if (a.bits_.size() != b.bits_.size())
      return a.bits_.size() <=> b.bits_.size();
    return a.bits_ <=> b.bits_;
  }

 private:
  explicit StringIndex(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

inline Rank rankOf(const StringIndex& w) { return w.rank(); }
inline StringIndex stringOf(Rank r) { return StringIndex::fromRank(r); }

inline StringIndex maxByRank(const StringIndex& a, const StringIndex& b) {
  return a < b ? b : a;
}
inline StringIndex minByRank(const StringIndex& a, const StringIndex& b) {
  return a < b ? a : b;
}

}  // namespace qsd

#endif
