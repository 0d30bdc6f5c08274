#pragma once

#include <cstddef>
#include <vector>

namespace qtail {

// Standard evaluation grid on (0, kMaxAbscissa]: half linearly spaced, half
// log spaced from 1e-3, concatenated. Deterministic for a given n.
std::vector<double> mixed_grid(std::size_t n = 2000);

// lo, lo+step, ... up to hi (inclusive within a small step tolerance).
std::vector<double> linear_grid(double lo, double hi, double step);

// Log-spaced fencepost grid lo * 10^(k/points_per_decade), k = 0..N-1,
// where N spans [lo, hi]; one decade at 1/decade yields both endpoints.
std::vector<double> log_grid(double lo, double hi, int points_per_decade);

}  // namespace qtail
