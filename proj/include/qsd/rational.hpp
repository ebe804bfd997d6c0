#ifndef QSD_RATIONAL_HPP
#define QSD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsd {

// Exact rationals. mpq_class arithmetic keeps results canonical
// (gcd(num, den) = 1, den > 0); raw two-argument construction does not,
// hence makeRational.
using Rational = mpq_class;

// Domain failures (division by zero, non-real sign queries, malformed
// fixtures, ...). The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An approximation search ran out of budget before meeting its bound.
class NotConvergedError : public DomainError {
 public:
  explicit NotConvergedError(const std::string& what) : DomainError(what) {}
};

inline Rational makeRational(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// 2^e for any (possibly negative) exponent.
inline Rational pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : Rational(1, p);
}

inline int signOf(const Rational& q) { return sgn(q); }

// Text form is always "p/q" with the canonical representation, so printing
// and parsing round-trip bit-exactly.
std::string rationalText(const Rational& q);
Rational parseRational(const std::string& text);

}  // namespace qsd

#endif
