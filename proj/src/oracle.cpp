#include "stroud/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "stroud/errors.hpp"
#include "stroud/residuals.hpp"

namespace stroud::oracle {

namespace {

constexpr int kMaxBisections = 400;
constexpr int kNewtonPolishSteps = 3;

long double eval(const std::vector<long double>& c, long double u) {
  long double acc = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
  return acc;
}

std::vector<long double> as_long_double(const UnivariatePolynomial& p) {
  std::vector<long double> c;
  for (const auto& q : p.coefficients()) {
    c.push_back(static_cast<long double>(q.get_num().get_d()) /
                static_cast<long double>(q.get_den().get_d()));
  }
  return c;
}

// Root of p in the sign-changing bracket [a, b].
double refine(const std::vector<long double>& p, const std::vector<long double>& dp, long double a,
              long double b, double rel_tol) {
  long double fa = eval(p, a);
  for (int i = 0; i < kMaxBisections; ++i) {
    const long double mid = 0.5L * (a + b);
    if (mid == a || mid == b) break;
    if (b - a <= static_cast<long double>(rel_tol) * std::fabs(mid)) break;
    const long double fm = eval(p, mid);
    if (fm == 0.0L) return static_cast<double>(mid);
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  long double x = 0.5L * (a + b);
  for (int i = 0; i < kNewtonPolishSteps; ++i) {
    const long double d = eval(dp, x);
    if (d == 0.0L) break;
    const long double next = x - eval(p, x) / d;
    if (!(next >= a && next <= b)) break;  // stay inside the bracket
    x = next;
  }
  return static_cast<double>(x);
}

std::vector<double> roots_impl(const UnivariatePolynomial& p, double lo, double hi, double rel_tol) {
  std::vector<double> out;
  const int deg = p.degree();
  if (deg <= 0) return out;
  const auto c = as_long_double(p);
  if (deg == 1) {
    const double r = static_cast<double>(-c[0] / c[1]);
    if (r >= lo && r <= hi) out.push_back(r);
    return out;
  }
  const UnivariatePolynomial dp = p.derivative();
  const auto dc = as_long_double(dp);

  std::vector<double> knots{lo};
  for (double r : roots_impl(dp, lo, hi, rel_tol)) {
    if (r > knots.back()) knots.push_back(r);
  }
  if (hi > knots.back()) knots.push_back(hi);

  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const long double a = knots[i];
    const long double b = knots[i + 1];
    const long double fa = eval(c, a);
    const long double fb = eval(c, b);
    if (fa == 0.0L) {
      if (out.empty() || out.back() != knots[i]) out.push_back(knots[i]);
      continue;
    }
    if (fb == 0.0L) {
      out.push_back(knots[i + 1]);
      continue;
    }
    if ((fa < 0) != (fb < 0)) out.push_back(refine(c, dc, a, b, rel_tol));
  }
  return out;
}

// Cauchy bound: every root satisfies |u| < 1 + max |a_k / a_n|.
double cauchy_bound(const UnivariatePolynomial& p) {
  const auto& c = p.coefficients();
  const double lead = std::abs(c.back().get_d());
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, std::abs(c[k].get_d()) / lead);
  return 1.0 + m;
}

std::array<double, 4> four_positive_roots(const UnivariatePolynomial& p, const char* name,
                                          double rel_tol) {
  const auto roots = real_roots(p, 0.0, cauchy_bound(p), rel_tol);
  std::vector<double> positive;
  for (double r : roots) {
    if (r > 0.0) positive.push_back(r);
  }
  if (positive.size() != 4) {
    throw InternalConsistencyError(std::string(name) + ": expected 4 positive roots, bracketed " +
                                   std::to_string(positive.size()));
  }
  std::sort(positive.begin(), positive.end(), std::greater<>());
  return {positive[0], positive[1], positive[2], positive[3]};
}

struct Candidate {
  SignedRule rule;
  int negative = 0;  // 0 lambda, 1 xi, 2 mu, 3 gamma
  double residual = 0.0;
};

std::vector<Candidate> all_assignments(const BranchSolution& first, const BranchSolution& second) {
  std::vector<Candidate> out;
  for (int swap = 0; swap < 2; ++swap) {
    const BranchSolution& b_orbit = swap == 0 ? first : second;
    const BranchSolution& c_orbit = swap == 0 ? second : first;
    for (int negative = 0; negative < 4; ++negative) {
      std::array<double, 4> v{std::sqrt(b_orbit.x_sq), std::sqrt(b_orbit.y_sq),
                              std::sqrt(c_orbit.y_sq), std::sqrt(c_orbit.x_sq)};
      v[static_cast<std::size_t>(negative)] = -v[static_cast<std::size_t>(negative)];
      SignedRule rule{v[0], v[1], v[2], v[3], b_orbit.w, c_orbit.w};
      out.push_back({rule, negative, residuals(rule).max_abs()});
    }
  }
  return out;
}

bool inside_cube(const BranchSolution& s) { return s.x_sq <= 1.0 && s.y_sq <= 1.0; }

}  // namespace

double ResidualVector::max_abs() const {
  double m = 0.0;
  for (double r : {r_m1_B, r_m1_C, r_m2_B, r_m2_C, r_m3_B, r_m3_C, r_m4, r_m5}) {
    m = std::max(m, std::abs(r));
  }
  return m;
}

std::vector<double> real_roots(const UnivariatePolynomial& p, double lo, double hi, double rel_tol) {
  if (!(lo <= hi)) throw DomainError("real_roots: empty interval");
  return roots_impl(p, lo, hi, rel_tol);
}

std::array<double, 4> solve_x_octic(double rel_tol) {
  return four_positive_roots(x_octic_in_square(), "x octic", rel_tol);
}

std::array<double, 4> solve_y_octic(double rel_tol) {
  return four_positive_roots(y_octic_in_square(), "y octic", rel_tol);
}

double pair_via_m1(double x_sq) {
  if (x_sq > 19.0 / 15.0) {
    throw NoRealPairError("x^2 = " + std::to_string(x_sq) + " exceeds 19/15; m1 has no real partner");
  }
  return (19.0 - 15.0 * x_sq) / 30.0;
}

double weight_from_m2(double x_sq, double y_sq) {
  const double m2 = 45.0 * x_sq * x_sq - 30.0 * x_sq - 60.0 * y_sq + 126.0 * y_sq * y_sq +
                    72.0 * x_sq * y_sq + 19.0;
  if (!(m2 > 0.0)) throw InvalidBranchError("m2 is not positive; no positive weight exists");
  // m2 = 32 / (2w): the solved weight is twice the per-point weight.
  return 0.5 * 32.0 / m2;
}

ResidualVector residuals(const SignedRule& r) {
  using namespace residual;
  ResidualVector v;
  v.r_m1_B = m1(r.lambda, r.xi);
  v.r_m1_C = m1(r.gamma, r.mu);
  v.r_m2_B = m2(r.lambda, r.xi) - 32.0 / (2.0 * r.B);
  v.r_m2_C = m2(r.gamma, r.mu) - 32.0 / (2.0 * r.C);
  v.r_m3_B = m3(r.lambda, r.xi);
  v.r_m3_C = m3(r.gamma, r.mu);
  v.r_m4 = m4(r.lambda, r.xi, r.mu, r.gamma);
  v.r_m5 = m5(r.lambda, r.xi, r.mu, r.gamma);
  return v;
}

SignedRule assign_signs(const BranchSolution& first, const BranchSolution& second, double tol) {
  const auto candidates = all_assignments(first, second);
  std::optional<double> best;
  for (const auto& c : candidates) {
    if (c.residual <= tol && c.negative == 1) return c.rule;
    best = std::min(best.value_or(c.residual), c.residual);
  }
  throw InvalidPairingError("no assignment with xi as the single negative parameter zeroes the "
                            "block residuals (best max residual " +
                            std::to_string(best.value_or(0.0)) + ")");
}

double best_assignment_residual(const BranchSolution& first, const BranchSolution& second) {
  double best = INFINITY;
  for (const auto& c : all_assignments(first, second)) best = std::min(best, c.residual);
  return best;
}

Derivation derive_all(double tol) {
  Derivation d;
  d.x_roots = solve_x_octic();
  d.y_roots = solve_y_octic();

  std::array<BranchSolution, 4> raw{};
  for (std::size_t i = 0; i < 4; ++i) {
    const double x_sq = d.x_roots[i];
    const double y_sq = pair_via_m1(x_sq);
    const bool matches = std::any_of(d.y_roots.begin(), d.y_roots.end(), [&](double v) {
      return std::abs(v - y_sq) <= tol * std::max(1.0, std::abs(v));
    });
    if (!matches) {
      throw InternalConsistencyError("m1 partner of x^2 = " + std::to_string(x_sq) +
                                     " is not a root of the y octic");
    }
    raw[i] = {0, x_sq, y_sq, weight_from_m2(x_sq, y_sq)};
  }

  // The three ways to split four solutions into two pairs.
  constexpr std::array<std::array<std::size_t, 4>, 3> kSplits{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  std::vector<std::size_t> valid_splits;
  for (std::size_t s = 0; s < kSplits.size(); ++s) {
    const auto& k = kSplits[s];
    bool ok = true;
    for (std::size_t half = 0; half < 2 && ok; ++half) {
      try {
        assign_signs(raw[k[2 * half]], raw[k[2 * half + 1]], tol);
      } catch (const InvalidPairingError&) {
        ok = false;
      }
    }
    if (ok) valid_splits.push_back(s);
  }
  if (valid_splits.empty()) throw InvalidPairingError("no pairing of the four branch solutions is valid");
  if (valid_splits.size() > 1) throw InternalConsistencyError("more than one valid pairing");

  const auto& split = kSplits[valid_splits.front()];
  std::array<std::size_t, 2> pair_a{split[0], split[1]};
  std::array<std::size_t, 2> pair_b{split[2], split[3]};
  const bool a_inside = inside_cube(raw[pair_a[0]]) && inside_cube(raw[pair_a[1]]);
  const bool b_inside = inside_cube(raw[pair_b[0]]) && inside_cube(raw[pair_b[1]]);
  if (a_inside == b_inside) {
    throw InternalConsistencyError("cannot tell the all-inside rule from the other one");
  }
  auto inside_pair = a_inside ? pair_a : pair_b;
  auto outside_pair = a_inside ? pair_b : pair_a;
  const auto larger_x_first = [&](std::array<std::size_t, 2>& p) {
    if (raw[p[0]].x_sq < raw[p[1]].x_sq) std::swap(p[0], p[1]);
  };
  larger_x_first(inside_pair);
  larger_x_first(outside_pair);

  std::array<int, 4> label{};
  label[outside_pair[0]] = 1;
  label[outside_pair[1]] = 2;
  label[inside_pair[0]] = 3;
  label[inside_pair[1]] = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    raw[i].table_index = label[i];
    d.solutions[static_cast<std::size_t>(label[i] - 1)] = raw[i];
  }

  for (const auto& k : kSplits) {
    PairingDiagnostic diag;
    diag.first = {label[k[0]], label[k[1]]};
    diag.second = {label[k[2]], label[k[3]]};
    diag.residual_first = best_assignment_residual(raw[k[0]], raw[k[1]]);
    diag.residual_second = best_assignment_residual(raw[k[2]], raw[k[3]]);
    diag.valid = &k == &split;
    d.pairings.push_back(diag);
  }

  d.rule1 = assign_signs(d.solutions[2], d.solutions[3], tol);
  d.rule2 = assign_signs(d.solutions[0], d.solutions[1], tol);
  d.rule1_residuals = residuals(d.rule1);
  d.rule2_residuals = residuals(d.rule2);
  // The (1,1) block entry 19 equals 32/A.
  d.A = 32.0 / 19.0;
  return d;
}

}  // namespace stroud::oracle
