#pragma once

#include "qcat/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace qcat {

// Carrier families. Every unit-interval t-norm (Goedel, product,
// Lukasiewicz, ordinal sums) shares the Unit carrier; a value is only
// meaningful relative to a spec of the same family.
enum class Family { Unit, Lawvere, Boolean };

std::string family_name(Family f);

/// An element of a quantale carrier: a rational in [0,1], an extended
/// nonnegative rational (Lawvere), or a bit. On the Lawvere carrier the
/// lattice order is the reverse of the numeric one: bottom = inf,
/// top = unit = 0.
class QValue {
 public:
  static QValue unit_interval(Rational v);  // 0 <= v <= 1
  static QValue lawvere(Rational v);        // v >= 0
  static QValue lawvere_infinity();
  static QValue boolean(bool bit);

  Family family() const { return family_; }
  bool infinite() const { return infinite_; }
  /// Finite numeric value; throws for the Lawvere point at infinity.
  const Rational& value() const;
  bool bit() const;

  std::string str() const;  // "p/q" | "inf" | "0" / "1"
  static std::optional<QValue> parse(Family family, std::string_view text);

  friend bool operator==(const QValue&, const QValue&) = default;

 private:
  QValue(Family f, Rational v, bool inf)
      : family_(f), value_(std::move(v)), infinite_(inf) {}
  Family family_;
  Rational value_;
  bool infinite_;
};

enum class ArchKind { Product, Lukasiewicz };

/// One Archimedean piece of an ordinal sum, acting on [lo, hi].
struct Summand {
  Rational lo;
  Rational hi;
  ArchKind kind;
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Symbolic description of a commutative integral quantale: one of the
/// three basic continuous t-norms on [0,1], an ordinal sum of
/// product/Lukasiewicz summands (min outside the summands), Lawvere's
/// ([0,inf]^op, +, 0), or the Boolean quantale {0,1}.
///
/// Only integral families are representable: the unit always coincides
/// with the top element.
class QuantaleSpec {
 public:
  enum class Kind { Goedel, Product, Lukasiewicz, OrdinalSum, Lawvere, Boolean };

  static QuantaleSpec goedel() { return QuantaleSpec(Kind::Goedel); }
  static QuantaleSpec product() { return QuantaleSpec(Kind::Product); }
  static QuantaleSpec lukasiewicz() { return QuantaleSpec(Kind::Lukasiewicz); }
  static QuantaleSpec lawvere() { return QuantaleSpec(Kind::Lawvere); }
  static QuantaleSpec boolean() { return QuantaleSpec(Kind::Boolean); }
  /// Summands must satisfy 0 <= lo < hi <= 1 and be sorted with
  /// pairwise disjoint interiors; throws std::invalid_argument otherwise.
  static QuantaleSpec ordinal_sum(std::vector<Summand> summands);

  Kind kind() const { return kind_; }
  const std::vector<Summand>& summands() const { return summands_; }
  Family family() const;
  bool is_tnorm() const { return family() == Family::Unit; }

  QValue top() const;
  QValue bottom() const;
  QValue unit() const { return top(); }

  bool in_carrier(const QValue& v) const;

  /// Textual form: godel | product | lukasiewicz | lawvere | boolean |
  /// ordinal_sum[lo..hi:kind, ...] with rationals written p/q.
  std::string str() const;
  static std::optional<QuantaleSpec> parse(std::string_view text);

  friend bool operator==(const QuantaleSpec&, const QuantaleSpec&) = default;

 private:
  explicit QuantaleSpec(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<Summand> summands_;
};

/// Lattice order of the spec's carrier (numeric on [0,1], reversed
/// numeric on Lawvere). Throws std::invalid_argument on family mismatch.
bool leq(const QuantaleSpec& spec, const QValue& p, const QValue& q);

/// The quantale multiplication p (*) q.
QValue mul(const QuantaleSpec& spec, const QValue& p, const QValue& q);

/// The residuum p -> q: the largest z with p (*) z <= q. Lawvere uses
/// truncated subtraction with imp(inf, q) = 0 (top) and
/// imp(p, inf) = inf for finite p, the choices forced by the adjunction.
QValue imp(const QuantaleSpec& spec, const QValue& p, const QValue& q);

/// n-fold multiplication, n >= 1; n = 0 is rejected.
QValue power(const QuantaleSpec& spec, const QValue& x, unsigned n);

enum class BoundKind { Join, Meet };

/// Lattice join or meet of a nonempty list; the empty list is rejected
/// (top() / bottom() exist as constants).
QValue bound(const QuantaleSpec& spec, BoundKind kind, std::span<const QValue> values);

/// Way-below relation of the carrier's complete lattice. On the chain
/// [0,1]: p = 0 or p < q; on Lawvere: p = inf or p > q numerically; on
/// Boolean: p = 0 or p = q = 1.
bool way_below(const QuantaleSpec& spec, const QValue& p, const QValue& q);

/// {x : x (*) x = x} as a finite union of closed intervals (degenerate
/// intervals are isolated points), plus the Lawvere point at infinity.
struct IdempotentSet {
  struct Interval {
    Rational lo;
    Rational hi;  // lo <= hi; lo == hi for a point
  };
  std::vector<Interval> intervals;  // sorted ascending, disjoint
  bool includes_infinity = false;   // Lawvere only

  bool contains(const Rational& v) const;
  /// Any idempotent p with lo_excl < p <= hi_incl?
  bool intersects_left_open(const Rational& lo_excl, const Rational& hi_incl) const;
  /// No idempotent strictly inside (0, 1).
  bool only_trivial() const;
  std::string str() const;
};

IdempotentSet idempotents(const QuantaleSpec& spec);

/// Archimedean test for unit-interval t-norm specs, decided symbolically
/// from the idempotent description; rejects other families.
bool is_archimedean(const QuantaleSpec& spec);

}  // namespace qcat
