#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "linsite/errors.hpp"

namespace linsite {

using Rational = boost::multiprecision::cpp_rational;

/// The active scalar field: a prime field F_p or the rationals.
class Field {
 public:
  enum class Kind { prime, rational };

  static Field prime(std::int64_t p);
  static Field rationals() { return Field(Kind::rational, 0); }

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::prime; }
  /// Modulus for prime fields, 0 for the rationals.
  std::int64_t characteristic() const { return p_; }

  bool operator==(const Field& other) const {
    return kind_ == other.kind_ && p_ == other.p_;
  }
  bool operator!=(const Field& other) const { return !(*this == other); }

  std::string description() const;

 private:
  Field(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

/// An element of the active field. Prime-field values are canonical
/// residues in [0, p); rational values are arbitrary-precision fractions,
/// so no operation can overflow.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, std::int64_t v);
  static Scalar from_rational(const Field& f, const Rational& r);
  /// Accepts "n" or "n/d"; rejects anything else.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  /// Multiplicative inverse; throws DomainError on zero.
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical residue for prime fields; throws for rationals.
  std::int64_t residue() const;
  const Rational& rational() const;

  std::string to_string() const;

 private:
  Field field_;
  std::int64_t res_ = 0;
  Rational rat_;

  void check_same_field(const Scalar& o) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace linsite
