#pragma once

#include "qcat/formal_balls.hpp"

#include <cstdint>

namespace qcat::corpus {

struct IdempotentCounterexample {
  QCategory category;
  DirectedFamily chain;  // ((x_n, x_n)) with declared radius sup b
  NetPrefix net;         // the centers
  Rational b;
  std::size_t fixed_points;  // extra candidate centers placed before the sequence
};

/// The category on the strictly increasing sequence x_n = b*n/(n+1)
/// below an idempotent b, with hom(x,y) = min(x->y, y->x) off the
/// diagonal; its ball chain ((x_n, x_n)) and the net of centers.
/// extra_centers (deduplicated, restricted to (0,b)) become fixed
/// carrier points usable as candidate centers in join refutations.
/// Exact tails are declared for the Goedel spec; other specs get
/// prefix-level verdicts only.
IdempotentCounterexample gen_idempotent_counterexample(const QuantaleSpec& spec, const Rational& b,
                                                       std::vector<Rational> extra_centers = {});

struct SequenceSpace {
  QCategory category;  // index 0 = the point 1, index k >= 1 = 1 - 1/(k+1); Goedel
  NetPrefix net;       // x_n = 1 - 1/n from n = 2, with declared tails

  /// Constant-center chain with radii increasing to r_sup.
  DirectedFamily constant_center_family(std::size_t center, const Rational& r_sup) const;
  /// The chain ((x_n, min(x_n, r_sup))) along the strictly increasing net.
  DirectedFamily increasing_family(const Rational& r_sup) const;
  /// min{x in the truncation : r <= x}.
  std::optional<std::size_t> least_point_geq(const Rational& r, std::size_t cutoff) const;
};
SequenceSpace gen_sequence_space();

struct QuasiMetricSpace {
  QCategory category;  // Lawvere; index 0 = the point 0, index k >= 1 = 1/(k+1)
  NetPrefix net;       // x_n = 1/n from n = 2, with declared tails

  /// The chain ((1/n, 1/n)); the radii join to 0, the unit.
  DirectedFamily vanishing_chain() const;
  /// Constant-center chain with radii shrinking to 0.
  DirectedFamily constant_center_family(std::size_t center) const;
};
QuasiMetricSpace gen_quasimetric_space();

/// The two-point symmetric category with hom(x,y) = hom(y,x) = q.
QCategory gen_two_point(const QuantaleSpec& spec, const QValue& q);

/// A valid random category: hom sampled on the grid {i/denominator}
/// (plus the point at infinity on the Lawvere carrier), diagonal set to
/// the unit, transitivity repaired by closing
/// hom(x,z) := join(hom(x,z), hom(y,z) (*) hom(x,y)) to a fixed point.
/// Deterministic per seed.
QCategory gen_random_category(const QuantaleSpec& spec, std::size_t size,
                              unsigned value_denominator, std::uint64_t seed);

/// A valid explicit chain of `length` balls ending in (a, unit), built
/// backward so that consecutive balls are comparable; its centers net is
/// eventually constant at a and its radius sup is the unit.
DirectedFamily gen_constant_tail_chain(const QCategory& C, std::size_t a, std::size_t length,
                                       std::uint64_t seed);

struct SuiteCheck {
  std::string id;
  bool pass;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<SuiteCheck> checks;
  bool ok() const;
  std::string summary() const;
};

struct SuiteParams {
  std::uint64_t seed = 1;
  std::size_t cutoff = 200;
  unsigned grid_denominator = 32;
  std::size_t instances = 0;  // 0 = suite default
};

/// Named executable suites; each asserts instance-level consequences of
/// one statement, never a universally quantified theorem. Unknown names
/// are rejected.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);
std::vector<std::string> suite_names();

}  // namespace qcat::corpus
