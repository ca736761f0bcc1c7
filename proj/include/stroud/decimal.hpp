#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace stroud {

/// 10^n as a big integer.
mpz_class pow10(unsigned long n);

/// Number of decimal digits of |n| (1 for zero).
int decimal_digit_count(const mpz_class& n);

/// Floor of the square root of a non-negative integer, by Newton iteration.
mpz_class isqrt(const mpz_class& n);

/// Scaled-integer decimal: value = mantissa * 10^exponent.
///
/// A nonzero value always carries exactly `precision()` significant digits in
/// its mantissa. Arithmetic between two decimals is exact and then rounded
/// (half-even) to the larger of the two operand precisions. Integers convert
/// exactly, with their own digit count as precision.
class PrecisionDecimal {
 public:
  PrecisionDecimal() = default;
  PrecisionDecimal(long value);  // NOLINT(google-explicit-constructor)

  /// Rounds mantissa * 10^exponent to `precision` significant digits.
  static PrecisionDecimal from_parts(const mpz_class& mantissa, long exponent, int precision);

  /// Correctly rounded (half-even) value of num/den, den != 0.
  static PrecisionDecimal from_quotient(const mpz_class& num, const mpz_class& den, int precision);
  static PrecisionDecimal from_rational(const mpq_class& q, int precision);

  /// Exact parse of `[-]d[.ddd][E|e[+-]dd]`; precision is the significant
  /// digit count of the literal.
  static PrecisionDecimal parse(std::string_view text);

  const mpz_class& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }
  int precision() const { return precision_; }
  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return mantissa_ == 0; }

  /// Decimal exponent of the leading digit (0 for zero).
  long leading_exponent() const;

  PrecisionDecimal rounded(int digits) const;
  PrecisionDecimal with_precision(int digits) const { return rounded(digits); }

  /// `d.ddd...E±dd` with `fractional_digits` digits after the point.
  std::string scientific(int fractional_digits) const;
  /// Positional notation of the stored digits, e.g. "0.7749357659".
  std::string str() const;

  mpq_class to_rational() const;
  double to_double() const;

  PrecisionDecimal operator-() const;
  friend PrecisionDecimal operator+(const PrecisionDecimal& a, const PrecisionDecimal& b);
  friend PrecisionDecimal operator-(const PrecisionDecimal& a, const PrecisionDecimal& b);
  friend PrecisionDecimal operator*(const PrecisionDecimal& a, const PrecisionDecimal& b);
  friend PrecisionDecimal operator/(const PrecisionDecimal& a, const PrecisionDecimal& b);

  /// Value comparison; precision is ignored.
  friend bool operator==(const PrecisionDecimal& a, const PrecisionDecimal& b);
  friend std::strong_ordering operator<=>(const PrecisionDecimal& a, const PrecisionDecimal& b);

 private:
  mpz_class mantissa_ = 0;
  long exponent_ = 0;
  int precision_ = 1;
};

PrecisionDecimal abs(const PrecisionDecimal& v);

/// The shortest decimal that reads back as `v` (std::to_chars), exactly.
PrecisionDecimal decimal_from_double(double v);

/// Correctly rounded square root at `digits` significant digits.
/// Throws DomainError for negative input.
PrecisionDecimal sqrt_decimal(const PrecisionDecimal& v, int digits);

/// Integer bounds on a real: value in [lo, hi] * 10^-scale.
struct DecimalEnclosure {
  mpz_class lo;
  mpz_class hi;
  long scale = 0;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }

  /// Enclosure of the square root. A negative lower end is clamped to zero.
  DecimalEnclosure sqrt() const;

  /// Rounded value at `digits` significant digits, if both ends agree.
  std::optional<PrecisionDecimal> round(int digits) const;
};

}  // namespace stroud
