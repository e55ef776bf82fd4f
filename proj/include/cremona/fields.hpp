#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "cremona/errors.hpp"

namespace cremona {

using BigRational = boost::multiprecision::cpp_rational;

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

enum class FieldKind { Rationals, Prime };

/// Coordinate field selector: the rationals or a prime field GF(p).
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  long long p = 0;  // modulus; 0 for the rationals

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

  static FieldSpec prime(long long p) {
    if (!is_prime(p)) throw ParameterError("field modulus " + std::to_string(p) + " is not prime");
    if (p >= (1LL << 31)) throw ParameterError("field modulus too large");
    return FieldSpec{FieldKind::Prime, p};
  }

  /// Parses "q" (rationals) or "p:PRIME".
  static FieldSpec parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.size() > 2 && (text.substr(0, 2) == "p:" || text.substr(0, 2) == "P:")) {
      long long p = 0;
      for (char ch : text.substr(2)) {
        if (ch < '0' || ch > '9') throw ParameterError("bad field syntax, expected q or p:PRIME");
        p = p * 10 + (ch - '0');
        if (p >= (1LL << 31)) throw ParameterError("field modulus too large");
      }
      return prime(p);
    }
    throw ParameterError("bad field syntax, expected q or p:PRIME");
  }

  long long characteristic() const { return kind == FieldKind::Rationals ? 0 : p; }

  std::string name() const {
    return kind == FieldKind::Rationals ? std::string("Q") : "GF(" + std::to_string(p) + ")";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Exact rational arithmetic with arbitrary-precision integers.  Values are
/// kept reduced with positive denominator by the representation itself.
class RationalField {
 public:
  using Element = BigRational;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  long long characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }

  Element inv(const Element& a) const {
    if (a == 0) throw ParameterError("division by zero");
    return Element(1) / a;
  }

  Element div(const Element& a, const Element& b) const {
    if (b == 0) throw ParameterError("division by zero");
    return a / b;
  }

  bool is_zero(const Element& a) const { return a == 0; }
  bool eq(const Element& a, const Element& b) const { return a == b; }

  std::string str(const Element& a) const { return a.str(); }
};

/// GF(p) with residues stored in [0, p).
class PrimeField {
 public:
  using Element = long long;

  explicit PrimeField(long long p) : p_(p) {
    if (!is_prime(p) || p >= (1LL << 31)) throw ParameterError("invalid prime field modulus");
  }

  FieldSpec spec() const { return FieldSpec::prime(p_); }
  long long characteristic() const { return p_; }
  long long modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }
  Element from_int(long long v) const {
    Element r = v % p_;
    return r < 0 ? r + p_ : r;
  }

  Element add(Element a, Element b) const {
    Element r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Element sub(Element a, Element b) const {
    Element r = a - b;
    return r < 0 ? r + p_ : r;
  }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }

  Element inv(Element a) const {
    if (a == 0) throw ParameterError("division by zero");
    // extended Euclid
    long long t = 0, newt = 1, r = p_, newr = a;
    while (newr != 0) {
      const long long q = r / newr;
      t = std::exchange(newt, t - q * newt);
      r = std::exchange(newr, r - q * newr);
    }
    return from_int(t);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool eq(Element a, Element b) const { return a == b; }

  std::string str(Element a) const { return std::to_string(a) + " mod " + std::to_string(p_); }

 private:
  long long p_;
};

/// Invokes fn with the concrete field object selected by the spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& fs, Fn&& fn) {
  if (fs.kind == FieldKind::Rationals) return fn(RationalField{});
  return fn(PrimeField{fs.p});
}

}  // namespace cremona
