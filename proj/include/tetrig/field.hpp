#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "tetrig/errors.hpp"

namespace tetrig {

enum class FieldKind { rational, prime };

/// The coefficient field: exact rationals, or residues modulo a prime p > 3.
/// Characteristics 2 and 3 are rejected at construction.
class FieldSpec {
 public:
  static FieldSpec rational() { return FieldSpec(FieldKind::rational, 0); }
  static FieldSpec prime(std::uint64_t p);
  // "rational" or "prime:<p>"
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }  // 0 for the rationals
  std::string str() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  friend class Scalar;
  FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint64_t p_;
};

/// One exact field element. Rationals stay fully reduced with a positive
/// denominator; prime residues stay in [0, p). All arithmetic is exact and
/// mixing elements of different fields raises FieldMismatch.
class Scalar {
 public:
  Scalar() = delete;

  static Scalar zero(const FieldSpec& spec) { return of(0, spec); }
  static Scalar one(const FieldSpec& spec) { return of(1, spec); }
  static Scalar of(long long n, const FieldSpec& spec);
  // Text grammar: -?[0-9]+(/[0-9]+)? over the rationals, -?[0-9]+ mod p.
  static Scalar parse(std::string_view text, const FieldSpec& spec);

  FieldSpec spec() const;
  bool is_zero() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar&) const;
  Scalar operator-(const Scalar&) const;
  Scalar operator*(const Scalar&) const;
  Scalar operator/(const Scalar&) const;  // ZeroDenominator on a zero divisor

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar&) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Rational-only views; UnsupportedField over a prime field.
  int sign() const;
  double to_double() const;

 private:
  explicit Scalar(mpq_class q) : kind_(FieldKind::rational), q_(std::move(q)) {}
  Scalar(std::uint64_t r, std::uint64_t p) : kind_(FieldKind::prime), r_(r), p_(p) {}

  void require_same_spec(const Scalar& o) const;

  FieldKind kind_;
  mpq_class q_;                   // rational payload
  std::uint64_t r_ = 0, p_ = 0;  // prime payload
};

std::ostream& operator<<(std::ostream&, const Scalar&);

}  // namespace tetrig
