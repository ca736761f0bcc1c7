#include "stroud/kernels.hpp"

#include <cmath>
#include <string>

#include "stroud/errors.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace stroud::kernels {

namespace {

double sweep_one(const QuadratureRule& rule, const MonomialExponent& e) {
  double sum = 0.0;
  for (const auto& p : rule.points) sum += p.weight * evaluate_monomial(e, p.xyz);
  return sum;
}

double integrate_one(const QuadratureRule& rule, const HexCell& cell, const Polynomial3& f) {
  double sum = 0.0;
  for (const auto& p : map_rule(rule, cell)) sum += p.scaled_weight * f.evaluate(p.x);
  return sum;
}

[[noreturn]] void throw_inverted(std::size_t index, const std::string& what) {
  throw InvertedCellError("cell " + std::to_string(index) + ": " + what);
}

}  // namespace

std::vector<double> monomial_sweep_serial(const QuadratureRule& rule,
                                          std::span<const MonomialExponent> exponents) {
  std::vector<double> out(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) out[i] = sweep_one(rule, exponents[i]);
  return out;
}

std::vector<double> monomial_sweep_parallel(const QuadratureRule& rule,
                                            std::span<const MonomialExponent> exponents) {
  std::vector<double> out(exponents.size());
  const auto n = static_cast<std::ptrdiff_t>(exponents.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = sweep_one(rule, exponents[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<double> integrate_cells_serial(const QuadratureRule& rule, std::span<const HexCell> cells,
                                           const Polynomial3& f) {
  std::vector<double> out(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    try {
      out[i] = integrate_one(rule, cells[i], f);
    } catch (const InvertedCellError& e) {
      throw_inverted(i, e.what());
    }
  }
  return out;
}

std::vector<double> integrate_cells_parallel(const QuadratureRule& rule,
                                             std::span<const HexCell> cells, const Polynomial3& f) {
  std::vector<double> out(cells.size());
  // Exceptions may not leave the parallel region; record them per cell.
  std::vector<std::string> failures(cells.size());
  const auto n = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = integrate_one(rule, cells[k], f);
    } catch (const InvertedCellError& e) {
      failures[k] = e.what();
    }
  }
  for (std::size_t k = 0; k < failures.size(); ++k) {
    if (!failures[k].empty()) throw_inverted(k, failures[k]);
  }
  return out;
}

double total(std::span<const double> values, Summation mode) {
  double sum = 0.0;
  if (mode == Summation::naive) {
    for (double v : values) sum += v;
    return sum;
  }
  double compensation = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      compensation += (sum - t) + v;
    } else {
      compensation += (v - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace stroud::kernels
