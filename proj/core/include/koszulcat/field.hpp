#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace koszulcat {

/// Descriptor of the coefficient field: the rationals or a prime field F_p.
///
/// Values are carried as `mpq_class` in both cases. Over F_p a value is the
/// canonical integer representative in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws RangeError unless p is prime and fits the modular fast path.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }

  /// "Q" or "F_p".
  std::string to_string() const;
  /// Inverse of to_string; also accepts "GF(p)" and "F<p>".
  static Field parse(const std::string& text);

  void normalize(mpq_class& v) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }
  /// Image of an arbitrary rational in this field (throws if the denominator vanishes mod p).
  mpq_class from_rational(const mpq_class& v) const;

  /// "3/7" over Q, "2 mod 5" over F_p.
  std::string format(const mpq_class& v) const;
  /// Accepts "3/7", "-2", and over F_p also "2 mod 5".
  mpq_class parse_value(const std::string& text) const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) noexcept { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// An exact field element together with its field descriptor.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  Scalar(const Field& f, const mpq_class& v) : value_(f.from_rational(v)), field_(f) {}
  Scalar(const Field& f, long v) : Scalar(f, mpq_class(v)) {}

  const mpq_class& value() const noexcept { return value_; }
  const Field& field() const noexcept { return field_; }
  bool is_zero() const { return sgn(value_) == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const { return field_.format(value_); }
  static Scalar parse(const Field& f, const std::string& text) {
    return Scalar(f, f.parse_value(text));
  }

 private:
  void check(const Scalar& o) const;
  mpq_class value_;
  Field field_;
};

}  // namespace koszulcat
