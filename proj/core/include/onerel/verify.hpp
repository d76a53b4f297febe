#pragma once

// Seeded randomised verification: exact Fox-calculus identities, polytope
// algebra against independent oracles, and invariance of the polytope class.
// Drives the `verify` CLI subcommand and the acceptance suite; failures are
// reported in replayable form (the offending inputs are printed).

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "onerel/invariants.hpp"

namespace onerel::verify {

// Derivative route used by the identity suites; tests may inject a corrupted
// implementation to confirm the harness catches it.
using FoxFn = std::function<FreeRingElement(const Word&, Gen)>;

struct Options {
  std::uint64_t seed = 42;
  int count = 500;
  FoxFn fox;  // empty: the production fox_derivative
};

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

struct Summary {
  std::vector<SuiteResult> suites;

  bool ok() const;
  long long total_cases() const;
};

Summary run_all(const Options& opts);

SuiteResult fundamental_formula_suite(const Options& opts);
SuiteResult chain_rule_suite(const Options& opts);
SuiteResult product_inverse_rule_suite(const Options& opts);
SuiteResult fox_route_equivalence_suite(const Options& opts);
SuiteResult two_formula_suite(const Options& opts);
SuiteResult class_invariance_suite(const Options& opts);
SuiteResult minkowski_algebra_suite(const Options& opts);
SuiteResult hull_oracle_suite(const Options& opts);
SuiteResult proper_power_oracle_suite(const Options& opts);
SuiteResult thickness_suite(const Options& opts);
SuiteResult faces_duals_partition_suite(const Options& opts);

// Independent oracles, deliberately naive; they stay apart from the
// production routes they check.
namespace oracle {

// Extreme points of a planar or linear point set by Caratheodory search:
// a point is dropped iff it lies in a triangle (or segment) of the others.
std::vector<LatticePoint> extreme_points(std::span<const LatticePoint> pts);

// Proper-power detection by trying every divisor of the length as a period.
std::optional<ProperPower> proper_power_by_periods(const Word& w);

// Minkowski sum computed as the hull of all pairwise sums of the raw point
// sets (not of their vertex lists).
IntegralPolytope hull_of_pairwise_sums(std::span<const LatticePoint> a,
                                       std::span<const LatticePoint> b);

}  // namespace oracle

// Deterministic input generators, shared with the test suites.
Word random_word(std::mt19937_64& rng, std::size_t length);
Word random_cyclically_reduced_word(std::mt19937_64& rng, std::size_t max_length);

// Nonempty cyclically reduced relator with both exponent sums zero.
Word random_nice_relator(std::mt19937_64& rng, std::size_t max_length);

std::vector<LatticePoint> random_points(std::mt19937_64& rng, int rank,
                                        std::size_t max_points, long long bound);

}  // namespace onerel::verify
