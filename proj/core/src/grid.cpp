#include "qtail/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qtail/gauss.hpp"

namespace qtail {

std::vector<double> mixed_grid(std::size_t n) {
  if (n < 4) throw std::invalid_argument("mixed_grid needs at least 4 points");
  const std::size_t n_linear = n / 2;
  const std::size_t n_log = n - n_linear;

  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t i = 1; i <= n_linear; ++i)
    grid.push_back(kMaxAbscissa * static_cast<double>(i) /
                   static_cast<double>(n_linear));
  const double lo_exp = -3.0;
  const double hi_exp = std::log10(kMaxAbscissa);
  for (std::size_t i = 0; i < n_log; ++i)
    grid.push_back(std::min(
        std::pow(10.0, lo_exp + (hi_exp - lo_exp) * static_cast<double>(i) /
                           static_cast<double>(n_log - 1)),
        kMaxAbscissa));
  return grid;
}

std::vector<double> linear_grid(double lo, double hi, double step) {
  const auto count =
      static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-6)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    grid.push_back(std::min(lo + static_cast<double>(k) * step, hi));
  return grid;
}

std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
  const double decades = std::log10(hi / lo);
  const auto count = static_cast<std::size_t>(std::floor(
                         decades * points_per_decade + 1e-6)) +
                     1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    grid.push_back(std::min(
        lo * std::pow(10.0, static_cast<double>(k) / points_per_decade), hi));
  return grid;
}

}  // namespace qtail
