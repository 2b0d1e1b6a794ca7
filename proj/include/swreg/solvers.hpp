#pragma once

#include "swreg/solvers/altmin.hpp"
#include "swreg/solvers/brute_force.hpp"
#include "swreg/solvers/enumeration.hpp"
#include "swreg/solvers/fit.hpp"
#include "swreg/solvers/noiseless.hpp"
#include "swreg/solvers/report.hpp"

#include <string_view>

namespace swreg {

enum class Method { brute, enumeration, noiseless, altmin };

inline Method parse_method(std::string_view s) {
  if (s == "brute") return Method::brute;
  if (s == "enum") return Method::enumeration;
  if (s == "noiseless") return Method::noiseless;
  if (s == "altmin") return Method::altmin;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::enumeration: return "enum";
    case Method::noiseless: return "noiseless";
    case Method::altmin: return "altmin";
  }
  return "unknown";
}

inline SolveReport solve(const Dataset& data, int n, Method method, LossModel loss,
                         const SolverConfig& cfg = {}) {
  switch (method) {
    case Method::brute: return brute_force_solve(data, n, loss, cfg);
    case Method::enumeration: return enumeration_solve(data, n, loss, cfg);
    case Method::noiseless: return noiseless_solve(data, n, cfg);
    case Method::altmin: return altmin_solve(data, n, loss, cfg.restarts, cfg.seed, cfg.tol);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace swreg
