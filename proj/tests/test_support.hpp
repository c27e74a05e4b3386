#pragma once

#include <random>

#include "dtheta/harmonics.hpp"

namespace dtheta::testing {

/// Coefficients uniform in [-amp, amp] on degrees [min_degree, max_degree], stored at band L.
inline SpectralFunction random_function(std::mt19937_64& rng, int L, int max_degree,
                                        int min_degree = 0, double amp = 1.0) {
  std::uniform_real_distribution<double> u(-amp, amp);
  SpectralFunction f(L);
  for (int l = min_degree; l <= max_degree; ++l)
    for (int m = -l; m <= l; ++m) f.at(l, m) = u(rng);
  return f;
}

}  // namespace dtheta::testing
