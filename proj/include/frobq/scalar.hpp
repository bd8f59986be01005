#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace frobq {

// An element of Q (arbitrary precision, always reduced with a positive
// denominator) or of a prime field F_p. Arithmetic between the two kinds,
// or between different primes, throws ScalarKindError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& value);

  static Scalar modular(std::uint64_t residue, std::uint64_t modulus);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  const mpq_class& rational() const;
  std::uint64_t residue() const;

  bool is_zero() const;
  bool is_one() const;
  int sign() const;  // F_p elements report 0 or 1

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& rhs) const;

  // |a| < |b| for rationals; residue order for F_p. Used for pivot choice.
  static bool smaller_magnitude(const Scalar& a, const Scalar& b);

  // "num/den" always, e.g. "3/1", "-1/2". F_p elements print as "r/1".
  std::string fraction() const;
  // "num" when the denominator is 1, otherwise "num/den".
  std::string str() const;

 private:
  void check_same_kind(const Scalar& rhs) const;

  mpq_class value_;
  std::uint64_t residue_ = 0;
  std::uint64_t modulus_ = 0;
};

// The ground field: Q or F_p for a prime p < 2^32.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  // Maps a rational into this field; throws std::domain_error when the
  // denominator vanishes mod p.
  Scalar from_rational(const mpq_class& value) const;
  // Converts a scalar of Q into this field; scalars already of this field
  // pass through unchanged.
  Scalar convert(const Scalar& value) const;
  bool contains(const Scalar& value) const noexcept {
    return value.modulus() == modulus_;
  }

  // Parses "num" or "num/den" (optionally signed).
  Scalar parse(std::string_view text) const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace frobq
