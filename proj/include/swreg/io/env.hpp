#pragma once

// Environment overrides for caps and tolerances:
//   SWREG_TIE_TOL, SWREG_ZERO_TOL, SWREG_SIGN_TOL,
//   SWREG_MAX_TIE_ALTERATIONS, SWREG_D_MAX, SWREG_N_MAX,
//   SWREG_BRUTE_BUDGET, SWREG_COMBINATION_BUDGET, SWREG_NOISELESS_BUDGET.

#include "swreg/solvers/report.hpp"

#include <cstdlib>
#include <functional>
#include <string>

namespace swreg {

/// getenv-like lookup; injectable for tests.
using EnvLookup = std::function<const char*(const char*)>;

inline SolverConfig apply_env_overrides(SolverConfig cfg,
                                        const EnvLookup& lookup = [](const char* k) { return std::getenv(k); }) {
  auto number = [&](const char* key, auto& field) {
    const char* raw = lookup(key);
    if (!raw) return;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(raw, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != std::string(raw).size())
      throw std::invalid_argument(std::string(key) + "='" + raw + "' is not a number");
    field = static_cast<std::remove_reference_t<decltype(field)>>(v);
  };
  number("SWREG_TIE_TOL", cfg.tol.tie_tol);
  number("SWREG_ZERO_TOL", cfg.tol.zero_tol);
  number("SWREG_SIGN_TOL", cfg.tol.sign_tol);
  number("SWREG_MAX_TIE_ALTERATIONS", cfg.max_tie_alterations);
  number("SWREG_D_MAX", cfg.d_max);
  number("SWREG_N_MAX", cfg.n_max);
  number("SWREG_BRUTE_BUDGET", cfg.brute_budget);
  number("SWREG_COMBINATION_BUDGET", cfg.combination_budget);
  number("SWREG_NOISELESS_BUDGET", cfg.noiseless_budget);
  cfg.validate();
  return cfg;
}

}  // namespace swreg
