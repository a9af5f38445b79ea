#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inertia/json_io.hpp"
#include "inertia/sampling.hpp"

namespace inertia {

struct Assertion {
  std::string name;
  bool pass = false;
  std::string details;
};

struct VerifyReport {
  std::string id;
  std::vector<Assertion> assertions;
  double wall_seconds = 0.0;

  bool pass() const;
  json to_json() const;
};

/// Scale knobs for the property suites; zero values pick per-id defaults.
struct VerifyParams {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-9;
  int restarts = 64;
  std::size_t jobs = 1;
};

/// Known check ids: thm1 thm2 thm3 thm4 thm5 lem1iv lem4 lem5 lem6 lemC1
/// kron ncopy.
const std::vector<std::string>& verify_ids();

/// Runs one property suite and reports every assertion with values.
VerifyReport run_verify(const std::string& id, const VerifyParams& params);

}  // namespace inertia
