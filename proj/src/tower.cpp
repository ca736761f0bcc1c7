#include "stroud/tower.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "stroud/errors.hpp"

namespace stroud {

namespace {

constexpr long kRadicand = 19;
constexpr long kTSquaredRational = 71440;
constexpr long kTSquaredIrrational = 6802;

// Element p0 + p1*sqrt(19) of Q(sqrt(19)).
struct QuadraticPart {
  Rational p0;
  Rational p1;
};

QuadraticPart mul(const QuadraticPart& x, const QuadraticPart& y) {
  return {x.p0 * y.p0 + kRadicand * x.p1 * y.p1, x.p0 * y.p1 + x.p1 * y.p0};
}

QuadraticPart add(const QuadraticPart& x, const QuadraticPart& y) {
  return {x.p0 + y.p0, x.p1 + y.p1};
}

QuadraticPart t_squared_part(Branch branch) {
  return {kTSquaredRational,
          branch == Branch::plus ? Rational(kTSquaredIrrational) : Rational(-kTSquaredIrrational)};
}

mpz_class floor_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

mpz_class ceil_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

const char* to_string(Branch b) { return b == Branch::plus ? "t+" : "t-"; }

TowerElement::TowerElement(Branch branch, Rational a, Rational b, Rational c, Rational d)
    : branch_(branch), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
}

void TowerElement::require_same_branch(const TowerElement& o) const {
  if (branch_ != o.branch_) {
    throw BranchConflictError(std::string("cannot combine elements on branches ") +
                              to_string(branch_) + " and " + to_string(o.branch_));
  }
}

TowerElement TowerElement::operator-() const { return TowerElement(branch_, -a_, -b_, -c_, -d_); }

TowerElement& TowerElement::operator+=(const TowerElement& o) {
  require_same_branch(o);
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& o) {
  require_same_branch(o);
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

TowerElement& TowerElement::operator*=(const TowerElement& o) {
  require_same_branch(o);
  // (p + q t)(r + s t) = (pr + qs t^2) + (ps + qr) t
  const QuadraticPart p{a_, b_};
  const QuadraticPart q{c_, d_};
  const QuadraticPart r{o.a_, o.b_};
  const QuadraticPart s{o.c_, o.d_};
  const QuadraticPart rational_part = add(mul(p, r), mul(mul(q, s), t_squared_part(branch_)));
  const QuadraticPart t_part = add(mul(p, s), mul(q, r));
  a_ = rational_part.p0;
  b_ = rational_part.p1;
  c_ = t_part.p0;
  d_ = t_part.p1;
  return *this;
}

TowerElement operator*(const Rational& q, TowerElement x) {
  x.a_ *= q;
  x.b_ *= q;
  x.c_ *= q;
  x.d_ *= q;
  return x;
}

TowerElement operator+(const Rational& q, TowerElement x) {
  x.a_ += q;
  return x;
}

TowerElement TowerElement::inverse() const {
  // x * conj_t(x) = p^2 - q^2 t^2 lies in Q(sqrt 19); its norm down to Q is
  // n0^2 - 19 n1^2.
  const QuadraticPart p{a_, b_};
  const QuadraticPart q{c_, d_};
  const QuadraticPart q2 = mul(q, q);
  const QuadraticPart q2t2 = mul(q2, t_squared_part(branch_));
  const QuadraticPart pp = mul(p, p);
  const QuadraticPart n{pp.p0 - q2t2.p0, pp.p1 - q2t2.p1};
  const Rational norm = n.p0 * n.p0 - kRadicand * n.p1 * n.p1;
  if (norm == 0) throw DivisionByZeroError("inverse of the zero tower element");

  const TowerElement conj_t(branch_, a_, b_, -c_, -d_);
  const TowerElement conj_s(branch_, n.p0, -n.p1);
  const Rational inv_norm = 1 / norm;
  return inv_norm * (conj_t * conj_s);
}

int TowerElement::sign() const {
  if (is_zero()) return 0;
  for (long scale = 24;; scale *= 2) {
    const DecimalEnclosure box = enclose(*this, scale);
    if (box.lo > 0) return 1;
    if (box.hi < 0) return -1;
    if (scale > (1L << 22)) throw InternalConsistencyError("sign of a nonzero element not resolved");
  }
}

bool operator==(const TowerElement& x, const TowerElement& y) {
  return x.branch_ == y.branch_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::string TowerElement::str() const {
  std::ostringstream os;
  os << "(" << a_ << ") + (" << b_ << ")*s + (" << c_ << ")*t + (" << d_ << ")*s*t  [s=sqrt(19), "
     << to_string(branch_) << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TowerElement& e) { return os << e.str(); }

TowerElement t_squared(Branch branch) {
  const QuadraticPart t2 = t_squared_part(branch);
  return TowerElement(branch, t2.p0, t2.p1);
}

DecimalEnclosure enclose(const TowerElement& e, long scale) {
  if (scale < 0) throw DomainError("enclosure scale must be non-negative");
  const auto w = static_cast<unsigned long>(scale);
  const mpz_class unit = pow10(w);
  const mpz_class unit2 = unit * unit;

  // sqrt(19) * 10^w in [s_lo, s_hi]
  const mpz_class s_lo = isqrt(kRadicand * unit2);
  const mpz_class s_hi = s_lo * s_lo == kRadicand * unit2 ? s_lo : mpz_class(s_lo + 1);

  // t^2 * 10^(2w) in [t2_lo, t2_hi]
  mpz_class t2_lo;
  mpz_class t2_hi;
  if (e.branch() == Branch::plus) {
    t2_lo = kTSquaredRational * unit2 + kTSquaredIrrational * s_lo * unit;
    t2_hi = kTSquaredRational * unit2 + kTSquaredIrrational * s_hi * unit;
  } else {
    t2_lo = kTSquaredRational * unit2 - kTSquaredIrrational * s_hi * unit;
    t2_hi = kTSquaredRational * unit2 - kTSquaredIrrational * s_lo * unit;
  }
  const auto root_bounds = [](const mpz_class& lo, const mpz_class& hi) {
    mpz_class r_lo = isqrt(lo);
    mpz_class r_hi = isqrt(hi);
    if (r_hi * r_hi != hi) ++r_hi;
    return std::pair{r_lo, r_hi};
  };
  const auto [t_lo, t_hi] = root_bounds(t2_lo, t2_hi);
  const auto [st_lo, st_hi] = root_bounds(kRadicand * t2_lo, kRadicand * t2_hi);

  // Clear denominators: value * den = A + B s + C t + D s t.
  mpz_class den = 1;
  for (const Rational* q : {&e.a(), &e.b(), &e.c(), &e.d()}) den = lcm(den, q->get_den());
  const auto scaled = [&](const Rational& q) { return mpz_class(q.get_num() * (den / q.get_den())); };

  mpz_class lo = scaled(e.a()) * unit;
  mpz_class hi = lo;
  const auto accumulate = [&](const mpz_class& k, const mpz_class& b_lo, const mpz_class& b_hi) {
    if (k >= 0) {
      lo += k * b_lo;
      hi += k * b_hi;
    } else {
      lo += k * b_hi;
      hi += k * b_lo;
    }
  };
  accumulate(scaled(e.b()), s_lo, s_hi);
  accumulate(scaled(e.c()), t_lo, t_hi);
  accumulate(scaled(e.d()), st_lo, st_hi);

  return DecimalEnclosure{floor_div(lo, den), ceil_div(hi, den), scale};
}

namespace {

constexpr int kGuardDigits = 16;
constexpr long kMaxScale = 1L << 20;

}  // namespace

PrecisionDecimal to_decimal(const TowerElement& e, int digits) {
  if (digits < 1) throw DomainError("precision must be positive");
  if (e.is_rational()) return PrecisionDecimal::from_rational(e.a(), digits);
  for (long scale = digits + kGuardDigits; scale <= kMaxScale; scale *= 2) {
    if (auto r = enclose(e, scale).round(digits)) return *r;
  }
  throw InternalConsistencyError("decimal conversion did not converge");
}

PrecisionDecimal sqrt_to_decimal(const TowerElement& e, int digits) {
  if (digits < 1) throw DomainError("precision must be positive");
  const int s = e.sign();
  if (s < 0) throw DomainError("square root of a negative tower element");
  if (s == 0) return PrecisionDecimal::from_parts(0, 0, digits);
  for (long scale = digits + kGuardDigits; scale <= kMaxScale; scale *= 2) {
    if (auto r = enclose(e, 2 * scale).sqrt().round(digits)) return *r;
  }
  throw InternalConsistencyError("decimal square root did not converge");
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) c.canonicalize();
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

TowerElement UnivariatePolynomial::evaluate(const TowerElement& u) const {
  TowerElement acc(u.branch());
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= u;
    acc = *it + acc;
  }
  return acc;
}

Rational UnivariatePolynomial::evaluate(const Rational& u) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double UnivariatePolynomial::evaluate(double u) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * u + it->get_d();
  }
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coefficients_.size(); ++k) {
    d.push_back(coefficients_[k] * static_cast<long>(k));
  }
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial x_octic_in_square() {
  return UnivariatePolynomial(
      {Rational(361), Rational(-2828796, 5), Rational(2339622), Rational(-3108780), Rational(1330425)});
}

UnivariatePolynomial y_octic_in_square() {
  return UnivariatePolynomial({Rational(361), Rational(-30324, 5), Rational(833454, 25),
                               Rational(-363204, 5), Rational(53217)});
}

}  // namespace stroud
