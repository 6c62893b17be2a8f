#pragma once

#include "qcat/quantale.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

namespace qcat {

/// A Q-category: a carrier with a spec-valued hom satisfying
/// unit <= hom(x,x) and hom(y,z) (*) hom(x,y) <= hom(x,z).
///
/// Finite categories are matrix-backed. Countably generated categories
/// supply a closed-form hom over indices 0, 1, 2, ... where the first
/// fixed_points indices are always-present named points and the rest
/// enumerate the generated sequence; the truncation at cutoff N consists
/// of the first fixed_points + N indices.
class QCategory {
 public:
  QCategory(QuantaleSpec spec, std::vector<std::string> labels, std::vector<QValue> hom_row_major);

  struct Generator {
    std::size_t fixed_points = 0;
    std::function<std::string(std::size_t)> label;
    std::function<QValue(std::size_t, std::size_t)> hom;
    std::string name;
  };
  QCategory(QuantaleSpec spec, Generator gen);

  const QuantaleSpec& spec() const { return spec_; }
  bool finite() const { return !gen_.has_value(); }
  /// Carrier size; defined for finite categories only.
  std::size_t size() const;
  std::size_t fixed_points() const { return gen_ ? gen_->fixed_points : 0; }
  std::size_t truncated_size(std::size_t cutoff) const;
  QValue hom(std::size_t i, std::size_t j) const;
  std::string label(std::size_t i) const;
  std::optional<std::size_t> index_of(std::string_view label, std::size_t cutoff) const;
  const std::string& name() const { return name_; }

 private:
  QuantaleSpec spec_;
  std::vector<std::string> labels_;
  std::vector<QValue> matrix_;  // row-major, finite case
  std::optional<Generator> gen_;
  std::string name_;
};

struct ValidationViolation {
  std::string rule;  // "reflexivity" | "transitivity"
  std::size_t x, y, z;
  QValue lhs, rhs;   // the two sides of the failed inequality lhs <= rhs
};

struct ValidationReport {
  std::vector<ValidationViolation> violations;
  std::size_t checked_size = 0;
  bool ok() const { return violations.empty(); }
};

/// Checks reflexivity and the composition inequality on the (truncated)
/// carrier, listing every violating triple.
ValidationReport validate_category(const QCategory& C, std::size_t cutoff);

/// A weight: values phi(x) with phi(y) (*) hom(x,y) <= phi(x). Values are
/// either an explicit vector over a finite carrier or a closed form for
/// generated carriers.
class Weight {
 public:
  explicit Weight(std::vector<QValue> values);
  Weight(std::function<QValue(std::size_t)> fn, std::string name);
  QValue at(std::size_t i) const;
  bool has_explicit_values() const { return !fn_; }
  std::size_t explicit_size() const { return values_.size(); }
  const std::string& name() const { return name_; }

 private:
  std::vector<QValue> values_;
  std::function<QValue(std::size_t)> fn_;
  std::string name_;
};

Weight representable(const QCategory& C, std::size_t a);

struct PairViolation {
  std::size_t x, y;
  QValue lhs, rhs;
};

struct WeightReport {
  std::vector<PairViolation> violations;
  bool ok() const { return violations.empty(); }
};

WeightReport is_weight(const QCategory& C, const Weight& phi, std::size_t cutoff);

/// Exact tail declarations for a generated net, the data a prefix cannot
/// reach. Declarations are cross-checked against every computed
/// truncation; inconsistency throws std::logic_error.
struct NetTails {
  /// Exact meet of hom(x_g, x_m) over all lambda <= g <= m.
  std::function<QValue(std::size_t)> pair_window_inf;
  QValue pair_window_sup;
  /// Exact meet of hom(x, x_m) over all m >= lambda.
  std::function<QValue(std::size_t /*x*/, std::size_t /*lambda*/)> hom_window_inf;
  /// Exact join over lambda of hom_window_inf(x, lambda).
  std::function<QValue(std::size_t /*x*/)> weight_value;
};

/// An N-indexed sequence in a category. A head list with no continuation
/// denotes the sequence that repeats its last term forever, so
/// "eventually constant" is a syntactic certainty for such nets.
class NetPrefix {
 public:
  NetPrefix(const QCategory& C, std::vector<std::size_t> head);
  NetPrefix(const QCategory& C, std::vector<std::size_t> head,
            std::function<std::size_t(std::size_t)> continuation,
            std::optional<NetTails> tails);

  std::size_t term(std::size_t n) const;
  bool eventually_constant() const { return !continuation_; }
  /// First index from which the net is constant; eventually-constant
  /// nets only.
  std::size_t stabilization_index() const;
  const std::optional<NetTails>& tails() const { return tails_; }
  std::size_t head_size() const { return head_.size(); }

 private:
  std::vector<std::size_t> head_;
  std::function<std::size_t(std::size_t)> continuation_;
  std::optional<NetTails> tails_;
};

enum class Verdict { CertifiedYes, CertifiedNo, Inconclusive };

std::string verdict_name(Verdict v);

struct NetWeightResult {
  Weight weight;
  bool exact;
  std::string caveat;  // empty when exact
};

/// The weight of a net: join over lambda of the window meets
/// of hom(-, x_mu). Exact for eventually-constant nets and for nets with
/// declared tails; otherwise the prefix value is returned with a caveat
/// (window meets are over-approximated, the outer join is truncated).
NetWeightResult net_weight(const QCategory& C, const NetPrefix& net, std::size_t cutoff);

struct CauchyReport {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<QValue> bound;  // certified-no: every window infimum <= bound < unit
  std::vector<QValue> prefix_windows;
  std::string detail;
};

/// Forward-Cauchy test: do the window infima of hom(x_g, x_m) reach the
/// unit in the limit? Certification requires an eventually-constant net
/// or declared tails; otherwise the verdict is inconclusive.
CauchyReport forward_cauchy_check(const QCategory& C, const NetPrefix& net, std::size_t cutoff);

struct FcWeightReport {
  bool ok;
  std::string detail;
};

/// Decides, exactly, whether a weight on a finite unit-interval category
/// is forward Cauchy, via the two conditions: the values join to the
/// unit, and every way-below triple of demands is met by some carrier
/// point. The way-below quantifiers over [0,1] are eliminated against
/// the finite set of occurring values.
FcWeightReport is_forward_cauchy_weight(const QCategory& C, const Weight& phi);

struct ColimitProbe {
  std::size_t y;
  QValue lhs;  // hom(a, y)
  QValue rhs;  // meet over x of phi(x) -> hom(x, y)
};

struct ColimitReport {
  bool holds = false;  // scoped to the truncation for generated carriers
  std::vector<ColimitProbe> probes;
  std::optional<std::size_t> first_failure;
};

ColimitReport is_colimit(const QCategory& C, const Weight& phi, std::size_t a, std::size_t cutoff);

/// All truncation elements passing is_colimit. An empty list over a full
/// finite carrier certifies that no listed element is a colimit.
std::vector<std::size_t> colimit_candidates(const QCategory& C, const Weight& phi,
                                            std::size_t cutoff);

struct YonedaReport {
  Verdict verdict = Verdict::Inconclusive;
  bool certified = false;  // exact (finite carrier, exact weight) vs truncation-scoped
  ColimitReport colimit;
  bool direct_route_checked = false;  // eventually-constant nets only
  bool routes_agree = true;
  CauchyReport cauchy;
};

/// Yoneda-limit test through the colimit of the net weight; for
/// eventually-constant nets the direct join-of-window-meets formula is
/// evaluated as a second route and the two must agree.
YonedaReport is_yoneda_limit(const QCategory& C, const NetPrefix& net, std::size_t a,
                             std::size_t cutoff);

/// x below y iff unit <= hom(x,y); reflexive and transitive on any valid
/// category. Returned as the list of related pairs of the truncation.
std::vector<std::pair<std::size_t, std::size_t>> underlying_order(const QCategory& C,
                                                                  std::size_t cutoff);

}  // namespace qcat
