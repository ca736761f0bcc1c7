#pragma once

#include <span>
#include <vector>

#include "stroud/hex_cell.hpp"
#include "stroud/quadrature.hpp"

// Data-parallel loops of the engine. Each kernel has a serial reference and
// an OpenMP version; both produce bitwise-identical per-item results because
// every item is still summed sequentially in rule point order.
namespace stroud::kernels {

enum class Summation { naive, compensated };

/// Rule value of each monomial.
std::vector<double> monomial_sweep_serial(const QuadratureRule& rule,
                                          std::span<const MonomialExponent> exponents);
std::vector<double> monomial_sweep_parallel(const QuadratureRule& rule,
                                            std::span<const MonomialExponent> exponents);

/// Integral of `f` over each cell. Throws InvertedCellError naming the
/// first inverted cell.
std::vector<double> integrate_cells_serial(const QuadratureRule& rule, std::span<const HexCell> cells,
                                           const Polynomial3& f);
std::vector<double> integrate_cells_parallel(const QuadratureRule& rule,
                                             std::span<const HexCell> cells, const Polynomial3& f);

/// Sum of per-cell values, left to right; `compensated` uses Neumaier's
/// variant of Kahan summation.
double total(std::span<const double> values, Summation mode = Summation::naive);

/// Number of threads the parallel kernels would use (1 without OpenMP).
int max_threads();

}  // namespace stroud::kernels
