#include "stroud/decimal.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

#include "stroud/errors.hpp"

namespace stroud {

mpz_class pow10(unsigned long n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

int decimal_digit_count(const mpz_class& n) {
  if (n == 0) return 1;
  mpz_class a = abs(n);
  // mpz_sizeinbase is exact or one too large for base 10.
  auto digits = static_cast<int>(mpz_sizeinbase(a.get_mpz_t(), 10));
  if (a < pow10(static_cast<unsigned long>(digits - 1))) --digits;
  return digits;
}

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  if (n < 2) return n;
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  mpz_class x = mpz_class(1) << static_cast<mp_bitcnt_t>((bits + 1) / 2);
  while (true) {
    mpz_class y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

namespace {

// Divides |m| by 10^drop with half-even rounding. `sticky` marks a nonzero
// tail below the integer m that breaks exact ties upwards.
mpz_class drop_digits_half_even(const mpz_class& m, int drop, bool sticky = false) {
  if (drop <= 0) return m * pow10(static_cast<unsigned long>(-drop));
  const mpz_class unit = pow10(static_cast<unsigned long>(drop));
  mpz_class q;
  mpz_class r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), unit.get_mpz_t());
  const int cmp_half = cmp(2 * r, unit);
  if (cmp_half > 0 || (cmp_half == 0 && (sticky || mpz_odd_p(q.get_mpz_t()) != 0))) ++q;
  return q;
}

}  // namespace

PrecisionDecimal::PrecisionDecimal(long value) : mantissa_(value), exponent_(0) {
  precision_ = decimal_digit_count(mantissa_);
}

PrecisionDecimal PrecisionDecimal::from_parts(const mpz_class& mantissa, long exponent,
                                              int precision) {
  if (precision < 1) throw DomainError("precision must be positive");
  PrecisionDecimal r;
  r.precision_ = precision;
  if (mantissa == 0) return r;
  const int negative = mantissa < 0;
  mpz_class m = abs(mantissa);
  const int drop = decimal_digit_count(m) - precision;
  m = drop_digits_half_even(m, drop);
  long e = exponent + drop;
  if (decimal_digit_count(m) > precision) {  // carried into a new digit, e.g. 999 -> 1000
    m /= 10;
    ++e;
  }
  r.mantissa_ = negative ? mpz_class(-m) : m;
  r.exponent_ = e;
  return r;
}

PrecisionDecimal PrecisionDecimal::from_quotient(const mpz_class& num, const mpz_class& den,
                                                 int precision) {
  if (den == 0) throw DivisionByZeroError("decimal quotient with zero denominator");
  if (precision < 1) throw DomainError("precision must be positive");
  if (num == 0) return from_parts(0, 0, precision);
  const bool negative = (num < 0) != (den < 0);
  const mpz_class n = abs(num);
  const mpz_class d = abs(den);

  // Leading exponent e with 10^e <= n/d < 10^(e+1).
  long e = decimal_digit_count(n) - decimal_digit_count(d);
  auto below = [&](long k) {  // n/d < 10^k
    return k >= 0 ? n < d * pow10(static_cast<unsigned long>(k))
                  : n * pow10(static_cast<unsigned long>(-k)) < d;
  };
  while (below(e)) --e;
  while (!below(e + 1)) ++e;

  // Scale so the integer quotient has exactly `precision` digits.
  const long shift = precision - 1 - e;
  mpz_class scaled_n = n;
  mpz_class scaled_d = d;
  if (shift >= 0) {
    scaled_n *= pow10(static_cast<unsigned long>(shift));
  } else {
    scaled_d *= pow10(static_cast<unsigned long>(-shift));
  }
  mpz_class q;
  mpz_class r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_n.get_mpz_t(), scaled_d.get_mpz_t());
  const int cmp_half = cmp(2 * r, scaled_d);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(q.get_mpz_t()) != 0)) ++q;
  return from_parts(negative ? mpz_class(-q) : q, -shift, precision);
}

PrecisionDecimal PrecisionDecimal::from_rational(const mpq_class& q, int precision) {
  return from_quotient(q.get_num(), q.get_den(), precision);
}

PrecisionDecimal PrecisionDecimal::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw DomainError("malformed decimal: " + std::string(text));
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw DomainError("malformed decimal: " + std::string(text));
    const std::string tail(text.substr(i + 1));
    char* end = nullptr;
    const long e = std::strtol(tail.c_str(), &end, 10);
    if (tail.empty() || *end != '\0') throw DomainError("malformed decimal: " + std::string(text));
    exponent += e;
  }
  mpz_class m(digits, 10);
  if (negative) m = -m;
  const auto first = digits.find_first_not_of('0');
  const int sig = first == std::string::npos ? 1 : static_cast<int>(digits.size() - first);
  return from_parts(m, exponent, sig);
}

long PrecisionDecimal::leading_exponent() const {
  if (is_zero()) return 0;
  return exponent_ + decimal_digit_count(mantissa_) - 1;
}

PrecisionDecimal PrecisionDecimal::rounded(int digits) const {
  return from_parts(mantissa_, exponent_, digits);
}

std::string PrecisionDecimal::scientific(int fractional_digits) const {
  if (fractional_digits < 0) throw DomainError("negative fractional digit count");
  const PrecisionDecimal r = rounded(fractional_digits + 1);
  std::string out;
  long e10 = 0;
  std::string body;
  if (r.is_zero()) {
    body.assign(static_cast<std::size_t>(fractional_digits + 1), '0');
  } else {
    body = mpz_class(abs(r.mantissa_)).get_str();
    e10 = r.leading_exponent();
    if (r.sign() < 0) out.push_back('-');
  }
  out.push_back(body[0]);
  if (fractional_digits > 0) {
    out.push_back('.');
    out.append(body, 1, std::string::npos);
  }
  out.push_back('E');
  out.push_back(e10 < 0 ? '-' : '+');
  std::string exp_digits = std::to_string(e10 < 0 ? -e10 : e10);
  if (exp_digits.size() < 2) exp_digits.insert(0, 2 - exp_digits.size(), '0');
  out += exp_digits;
  return out;
}

std::string PrecisionDecimal::str() const {
  if (is_zero()) return "0";
  std::string digits = mpz_class(abs(mantissa_)).get_str();
  std::string out = sign() < 0 ? "-" : "";
  if (exponent_ >= 0) {
    return out + digits + std::string(static_cast<std::size_t>(exponent_), '0');
  }
  const auto frac = static_cast<std::size_t>(-exponent_);
  if (digits.size() <= frac) {
    return out + "0." + std::string(frac - digits.size(), '0') + digits;
  }
  digits.insert(digits.size() - frac, ".");
  return out + digits;
}

mpq_class PrecisionDecimal::to_rational() const {
  if (exponent_ >= 0) return mpq_class(mantissa_ * pow10(static_cast<unsigned long>(exponent_)));
  mpq_class q(mantissa_, pow10(static_cast<unsigned long>(-exponent_)));
  q.canonicalize();
  return q;
}

double PrecisionDecimal::to_double() const {
  const std::string s = scientific(precision_ > 1 ? precision_ - 1 : 0);
  return std::strtod(s.c_str(), nullptr);
}

PrecisionDecimal PrecisionDecimal::operator-() const {
  PrecisionDecimal r = *this;
  r.mantissa_ = -r.mantissa_;
  return r;
}

namespace {

// Both mantissas brought to the smaller exponent.
void align(const PrecisionDecimal& a, const PrecisionDecimal& b, mpz_class& ma, mpz_class& mb,
           long& e) {
  e = std::min(a.exponent(), b.exponent());
  ma = a.mantissa() * pow10(static_cast<unsigned long>(a.exponent() - e));
  mb = b.mantissa() * pow10(static_cast<unsigned long>(b.exponent() - e));
}

}  // namespace

PrecisionDecimal operator+(const PrecisionDecimal& a, const PrecisionDecimal& b) {
  mpz_class ma;
  mpz_class mb;
  long e = 0;
  align(a, b, ma, mb, e);
  return PrecisionDecimal::from_parts(ma + mb, e, std::max(a.precision_, b.precision_));
}

PrecisionDecimal operator-(const PrecisionDecimal& a, const PrecisionDecimal& b) { return a + (-b); }

PrecisionDecimal operator*(const PrecisionDecimal& a, const PrecisionDecimal& b) {
  return PrecisionDecimal::from_parts(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_,
                                      std::max(a.precision_, b.precision_));
}

PrecisionDecimal operator/(const PrecisionDecimal& a, const PrecisionDecimal& b) {
  if (b.is_zero()) throw DivisionByZeroError("decimal division by zero");
  const int p = std::max(a.precision_, b.precision_);
  const long de = a.exponent_ - b.exponent_;
  mpz_class num = a.mantissa_;
  mpz_class den = b.mantissa_;
  if (de >= 0) {
    num *= pow10(static_cast<unsigned long>(de));
  } else {
    den *= pow10(static_cast<unsigned long>(-de));
  }
  return PrecisionDecimal::from_quotient(num, den, p);
}

bool operator==(const PrecisionDecimal& a, const PrecisionDecimal& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const PrecisionDecimal& a, const PrecisionDecimal& b) {
  mpz_class ma;
  mpz_class mb;
  long e = 0;
  align(a, b, ma, mb, e);
  const int c = cmp(ma, mb);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

PrecisionDecimal abs(const PrecisionDecimal& v) { return v.sign() < 0 ? -v : v; }

PrecisionDecimal decimal_from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite value has no decimal form");
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific);
  return PrecisionDecimal::parse(std::string_view(buf.data(), static_cast<std::size_t>(res.ptr - buf.data())));
}

PrecisionDecimal sqrt_decimal(const PrecisionDecimal& v, int digits) {
  constexpr int kGuardDigits = 16;
  if (digits < 1) throw DomainError("precision must be positive");
  if (v.sign() < 0) throw DomainError("square root of a negative decimal");
  if (v.is_zero()) return PrecisionDecimal::from_parts(0, 0, digits);

  // N = m * 10^s with an even remaining exponent and enough digits that
  // isqrt(N) carries at least digits + guard significant digits.
  long s = std::max(0L, 2L * (digits + kGuardDigits) - decimal_digit_count(v.mantissa()));
  if ((v.exponent() - s) % 2 != 0) ++s;
  const mpz_class n = v.mantissa() * pow10(static_cast<unsigned long>(s));
  const mpz_class root = isqrt(n);
  const bool exact = root * root == n;
  const long root_exponent = (v.exponent() - s) / 2;

  const int drop = decimal_digit_count(root) - digits;
  mpz_class m = drop_digits_half_even(root, drop, !exact);
  long e = root_exponent + drop;
  return PrecisionDecimal::from_parts(m, e, digits);
}

DecimalEnclosure DecimalEnclosure::sqrt() const {
  mpz_class l = lo < 0 ? mpz_class(0) : lo;
  mpz_class h = hi;
  if (h < 0) throw DomainError("square root of a negative enclosure");
  long s = scale;
  if (s % 2 != 0) {
    l *= 10;
    h *= 10;
    ++s;
  }
  DecimalEnclosure r;
  r.lo = isqrt(l);
  r.hi = isqrt(h);
  if (r.hi * r.hi != h) ++r.hi;
  r.scale = s / 2;
  return r;
}

std::optional<PrecisionDecimal> DecimalEnclosure::round(int digits) const {
  if (contains_zero() && !(lo == 0 && hi == 0)) return std::nullopt;
  const mpz_class den = scale >= 0 ? pow10(static_cast<unsigned long>(scale)) : mpz_class(1);
  mpz_class l = lo;
  mpz_class h = hi;
  if (scale < 0) {
    l *= pow10(static_cast<unsigned long>(-scale));
    h *= pow10(static_cast<unsigned long>(-scale));
  }
  PrecisionDecimal a = PrecisionDecimal::from_quotient(l, den, digits);
  PrecisionDecimal b = PrecisionDecimal::from_quotient(h, den, digits);
  if (a.mantissa() != b.mantissa() || a.exponent() != b.exponent()) return std::nullopt;
  return a;
}

}  // namespace stroud
