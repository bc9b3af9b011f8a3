#pragma once

// Registered verification suites.  Each suite checks one family of algebraic
// identities over an exhaustive range (plus seeded random instances where
// configured), never throws on an instance failure, and returns a
// deterministic machine-readable report.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "topalg/preorder.hpp"

namespace topalg {

struct SuiteOptions {
  int max_size = -1;        // -1: suite default
  std::uint64_t seed = 0;   // for the randomized portions
  int trials = -1;          // -1: suite default
};

struct SuiteReport {
  std::string suite;
  nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  long long instances = 0;
  long long failure_count = 0;
  std::vector<nlohmann::ordered_json> failures;  // detail capped
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();
  double wall_time_s = 0.0;

  bool ok() const { return failure_count == 0; }
  nlohmann::ordered_json to_json() const;
};

// Registered names, in listing order:
//   counts, prelie, assoc-props, coassoc, bialgebra, duality, psi-diagrams,
//   gamma-witness, hopf-star
const std::vector<std::string>& suite_names();

// Throws DomainError("UnknownSuite") for unregistered names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

// All topologies on exactly the given labels (relabelled enumeration).
std::vector<Preorder> all_topologies_on(const std::vector<std::string>& labels);

}  // namespace topalg
