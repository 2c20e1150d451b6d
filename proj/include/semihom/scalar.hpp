#pragma once

// Exact field scalars over Q or a prime field F_p.
//
// A Scalar carries its characteristic. Characteristic 0 values are
// arbitrary-precision rationals; a rational constant combined with an F_p
// value is reduced into F_p first, so integer literals such as 0, 1 and -1
// can be used freely in either field.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace semihom {

/// Raised for malformed user input (bad tables, shape mismatches, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed a configured size cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an identity the construction guarantees turns out to fail.
/// Seeing one means a bug or inconsistent input data.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws InputError unless p is prime.
  static FieldSpec prime(std::uint64_t p);
  /// Parses "q" or "fp:<p>".
  static FieldSpec parse(const std::string& text);

  std::string to_string() const;
  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT: integer literals are field constants
  static Scalar from_rational(mpq_class q);
  static Scalar modular(std::int64_t v, std::uint32_t p);
  /// The scalar `v` interpreted in `field`.
  static Scalar in(const FieldSpec& field, long v);
  /// Parses "a", "-a", "a/b" (rationals) or "a" (prime field).
  static Scalar parse(const FieldSpec& field, const std::string& text);

  std::uint32_t characteristic() const { return p_; }
  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "p/q" or "p" for rationals; "0".."p-1" for F_p.
  std::string to_string() const;
  /// Integer value of an F_p scalar; throws for rationals.
  std::int64_t residue() const;
  const mpq_class& rational() const { return q_; }

 private:
  // Brings `*this` into characteristic `p` (no-op if already there).
  void lift_to(std::uint32_t p);
  static std::uint32_t common(const Scalar& a, const Scalar& b);

  mpq_class q_;
  std::int64_t r_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace semihom
