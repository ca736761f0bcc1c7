#pragma once

#include <array>
#include <string>
#include <vector>

#include "stroud/tower.hpp"

// Numerical re-derivation of both rules from the governing equations alone:
// octic roots, m1 pairing, m2 weights, m3/m4/m5 sign selection. Nothing here
// reads the closed-form constants.
namespace stroud::oracle {

constexpr double kDefaultTolerance = 1e-12;
constexpr double kRootTolerance = 1e-14;

/// One (x^2, y^2, w) solution of the m1/m3/m2 subsystem.
struct BranchSolution {
  int table_index = 0;  // 1..4 once derive_all has labelled it, else 0
  double x_sq = 0.0;
  double y_sq = 0.0;
  double w = 0.0;
};

/// Signed parameters and the two orbit weights of a candidate rule.
struct SignedRule {
  double lambda = 0.0;
  double xi = 0.0;
  double mu = 0.0;
  double gamma = 0.0;
  double B = 0.0;
  double C = 0.0;
};

struct ResidualVector {
  double r_m1_B = 0.0;
  double r_m1_C = 0.0;
  double r_m2_B = 0.0;
  double r_m2_C = 0.0;
  double r_m3_B = 0.0;
  double r_m3_C = 0.0;
  double r_m4 = 0.0;
  double r_m5 = 0.0;

  double max_abs() const;
};

/// Real roots of `p` in [lo, hi], ascending. Critical points of the
/// derivative split the interval into monotone pieces; each sign change is
/// refined by bisection and a safeguarded Newton polish.
std::vector<double> real_roots(const UnivariatePolynomial& p, double lo, double hi,
                               double rel_tol = kRootTolerance);

/// The four positive roots u = x^2 of the x octic, descending.
/// Throws InternalConsistencyError if bracketing does not find four.
std::array<double, 4> solve_x_octic(double rel_tol = kRootTolerance);
/// The four positive roots v = y^2 of the y octic, descending.
std::array<double, 4> solve_y_octic(double rel_tol = kRootTolerance);

/// y^2 = (19 - 15 x^2) / 30. Throws NoRealPairError for x^2 > 19/15.
double pair_via_m1(double x_sq);

/// w = (1/2) * 32 / m2. Throws InvalidBranchError if m2 <= 0.
double weight_from_m2(double x_sq, double y_sq);

/// Residuals of all block equations; m2 entries compare against 32/(2w).
ResidualVector residuals(const SignedRule& rule);

/// Chooses which solution feeds the (lambda, xi) orbit and which single
/// parameter is negative, keeping the assignment whose residuals all vanish
/// and whose negative parameter is xi. Throws InvalidPairingError if none.
SignedRule assign_signs(const BranchSolution& first, const BranchSolution& second,
                        double tol = kDefaultTolerance);

/// Smallest max-residual over every role/sign assignment of a pair.
double best_assignment_residual(const BranchSolution& first, const BranchSolution& second);

struct PairingDiagnostic {
  std::array<int, 2> first{};   // table indices
  std::array<int, 2> second{};
  double residual_first = 0.0;
  double residual_second = 0.0;
  bool valid = false;
};

struct Derivation {
  std::array<double, 4> x_roots{};
  std::array<double, 4> y_roots{};
  /// Labelled 1..4 and stored in label order.
  std::array<BranchSolution, 4> solutions{};
  SignedRule rule1;
  SignedRule rule2;
  double A = 0.0;
  ResidualVector rule1_residuals;
  ResidualVector rule2_residuals;
  /// All three ways of splitting the four solutions into two pairs.
  std::vector<PairingDiagnostic> pairings;
};

/// Full derivation. The all-inside pair becomes rule 1, labelled 3 and 4;
/// the other pair is rule 2, labelled 1 and 2; larger x first in each pair.
Derivation derive_all(double tol = kDefaultTolerance);

}  // namespace stroud::oracle
