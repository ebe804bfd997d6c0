#ifndef QSD_SCALAR_HPP
#define QSD_SCALAR_HPP

#include <string>

#include "qsd/rational.hpp"

namespace qsd {

// Exact element of the tower Q ⊂ Q(i) ⊂ Q(i)(√3):
//
//   (re + im·i) + (reS3 + imS3·i)·√3
//
// √3 is irrational over Q(i), so the four-component representation is unique
// and equality is component-wise. Values with reS3 = imS3 = 0 are the
// complex rationals C_q.
struct Scalar {
  Rational re, im, reS3, imS3;

  Scalar() : re(0), im(0), reS3(0), imS3(0) {}
  Scalar(Rational r, Rational i = Rational(0), Rational r3 = Rational(0),
         Rational i3 = Rational(0))
      : re(std::move(r)), im(std::move(i)), reS3(std::move(r3)), imS3(std::move(i3)) {}

  static Scalar ofRational(const Rational& q) { return Scalar(q); }
  static Scalar ofInt(long n) { return Scalar(makeRational(n)); }
  static Scalar imaginaryUnit() { return Scalar(Rational(0), Rational(1)); }
  static Scalar sqrt3() { return Scalar(Rational(0), Rational(0), Rational(1)); }

  bool isZero() const { return re == 0 && im == 0 && reS3 == 0 && imS3 == 0; }
  bool isReal() const { return im == 0 && imS3 == 0; }
  bool isComplexRational() const { return reS3 == 0 && imS3 == 0; }
  // Real AND rational; the rational value itself.
  bool isRational() const { return isReal() && reS3 == 0; }
  const Rational& rationalValue() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im && a.reS3 == b.reS3 && a.imS3 == b.imS3;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);
Scalar operator*(const Scalar& a, const Scalar& b);
// Throws DomainError on division by zero.
Scalar operator/(const Scalar& a, const Scalar& b);

Scalar conj(const Scalar& a);
// a · conj(a); always real with nonnegative sign.
Scalar absSquared(const Scalar& a);

// Exact sign of a real element re + reS3·√3, by rational comparison of
// re² against 3·reS3². Throws DomainError if a is not real.
int signOfReal(const Scalar& a);

// Sign of (a − b) for real a, b.
int compareReal(const Scalar& a, const Scalar& b);

// Double approximation (entropy module is the only intended consumer).
double toDoubleReal(const Scalar& a);

// Serialization text form: "p/q", "p/q i", "p/q s3", "p/q i*s3" components
// joined by " + ", zero components omitted, all-zero printed "0/1".
// parseScalar(scalarText(s)) == s bit-exactly.
std::string scalarText(const Scalar& s);
Scalar parseScalar(const std::string& text);

}  // namespace qsd

#endif
