#include "qsd/scalar.hpp"

#include <sstream>
#include <vector>

namespace qsd {

std::string rationalText(const Rational& q) {
  std::ostringstream os;
  os << q.get_num() << "/" << q.get_den();
  return os.str();
}

Rational parseRational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw DomainError("bad rational literal: '" + text + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

const Rational& Scalar::rationalValue() const {
  if (!isRational()) throw DomainError("scalar is not rational: " + scalarText(*this));
  return re;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return Scalar(a.re + b.re, a.im + b.im, a.reS3 + b.reS3, a.imS3 + b.imS3);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return Scalar(a.re - b.re, a.im - b.im, a.reS3 - b.reS3, a.imS3 - b.imS3);
}

Scalar operator-(const Scalar& a) {
  return Scalar(-a.re, -a.im, -a.reS3, -a.imS3);
}

namespace {

// Complex-rational helpers over (re, im) pairs; a Scalar is z0 + z1·√3 with
// z0, z1 in Q(i).
struct Cq {
  Rational re, im;
};

Cq cAdd(const Cq& a, const Cq& b) { return {a.re + b.re, a.im + b.im}; }
Cq cSub(const Cq& a, const Cq& b) { return {a.re - b.re, a.im - b.im}; }
Cq cMul(const Cq& a, const Cq& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cq cScale(const Cq& a, const Rational& s) { return {a.re * s, a.im * s}; }
Cq cInv(const Cq& a) {
  Rational n = a.re * a.re + a.im * a.im;
  return {a.re / n, -a.im / n};
}

Cq part0(const Scalar& s) { return {s.re, s.im}; }
Cq part1(const Scalar& s) { return {s.reS3, s.imS3}; }
Scalar fromParts(const Cq& z0, const Cq& z1) {
  return Scalar(z0.re, z0.im, z1.re, z1.im);
}

}  // namespace

Scalar operator*(const Scalar& a, const Scalar& b) {
  // (a0 + a1√3)(b0 + b1√3) = (a0·b0 + 3·a1·b1) + (a0·b1 + a1·b0)·√3
  Cq a0 = part0(a), a1 = part1(a), b0 = part0(b), b1 = part1(b);
  Cq z0 = cAdd(cMul(a0, b0), cScale(cMul(a1, b1), Rational(3)));
  Cq z1 = cAdd(cMul(a0, b1), cMul(a1, b0));
  return fromParts(z0, z1);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.isZero()) throw DomainError("scalar division by zero");
  // 1/(b0 + b1√3) = (b0 − b1√3)/(b0² − 3·b1²); the denominator is a nonzero
  // element of Q(i) because √3 has no square root in Q(i).
  Cq b0 = part0(b), b1 = part1(b);
  Cq denom = cSub(cMul(b0, b0), cScale(cMul(b1, b1), Rational(3)));
  Cq dinv = cInv(denom);
  Scalar binv = fromParts(cMul(b0, dinv), cScale(cMul(b1, dinv), Rational(-1)));
  return a * binv;
}

Scalar conj(const Scalar& a) { return Scalar(a.re, -a.im, a.reS3, -a.imS3); }

Scalar absSquared(const Scalar& a) { return a * conj(a); }

int signOfReal(const Scalar& a) {
  if (!a.isReal())
    throw DomainError("signOfReal on non-real scalar: " + scalarText(a));
  const Rational& p = a.re;
  const Rational& q = a.reS3;
  int sp = signOf(p);
  int sq = signOf(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: p + q√3 has the sign of the component with the larger
  // square, comparing p² against 3q² exactly.
  int cmp = signOf(Rational(p * p - 3 * q * q));
  return cmp == 0 ? 0 : (cmp > 0 ? sp : sq);
}

int compareReal(const Scalar& a, const Scalar& b) { return signOfReal(a - b); }

double toDoubleReal(const Scalar& a) {
  if (!a.isReal())
    throw DomainError("toDoubleReal on non-real scalar: " + scalarText(a));
  return a.re.get_d() + a.reS3.get_d() * 1.7320508075688772;
}

std::string scalarText(const Scalar& s) {
  std::vector<std::string> parts;
  if (s.re != 0) parts.push_back(rationalText(s.re));
  if (s.im != 0) parts.push_back(rationalText(s.im) + " i");
  if (s.reS3 != 0) parts.push_back(rationalText(s.reS3) + " s3");
  if (s.imS3 != 0) parts.push_back(rationalText(s.imS3) + " i*s3");
  if (parts.empty()) return "0/1";
  std::string out = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) out += " + " + parts[k];
  return out;
}

Scalar parseScalar(const std::string& text) {
  // Components separated by " + "; each is "p/q" optionally followed by a
  // marker "i", "s3" or "i*s3".
  Scalar out;
  bool sawRe = false, sawIm = false, sawReS3 = false, sawImS3 = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos
                                                                 : next - pos);
    pos = next == std::string::npos ? text.size() + 1 : next + 3;
    if (tok.empty()) throw DomainError("empty scalar component in '" + text + "'");
    std::string marker;
    std::size_t sp = tok.find(' ');
    std::string lit = tok;
    if (sp != std::string::npos) {
      lit = tok.substr(0, sp);
      marker = tok.substr(sp + 1);
    }
    Rational q = parseRational(lit);
    if (marker.empty()) {
      if (sawRe) throw DomainError("duplicate real component in '" + text + "'");
      out.re = q;
      sawRe = true;
    } else if (marker == "i") {
      if (sawIm) throw DomainError("duplicate i component in '" + text + "'");
      out.im = q;
      sawIm = true;
    } else if (marker == "s3") {
      if (sawReS3) throw DomainError("duplicate s3 component in '" + text + "'");
      out.reS3 = q;
      sawReS3 = true;
    } else if (marker == "i*s3") {
      if (sawImS3) throw DomainError("duplicate i*s3 component in '" + text + "'");
      out.imS3 = q;
      sawImS3 = true;
    } else {
      throw DomainError("bad scalar component marker '" + marker + "'");
    }
    if (next == std::string::npos) break;
  }
  return out;
}

}  // namespace qsd
