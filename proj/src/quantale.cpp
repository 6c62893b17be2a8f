#include "qcat/quantale.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcat {

namespace {

const Rational kZero = 0;
const Rational kOne = 1;

void require_family(const QuantaleSpec& spec, const QValue& v, const char* where) {
  if (v.family() != spec.family()) {
    throw std::invalid_argument(std::string(where) + ": value of family " +
                                family_name(v.family()) + " used with a " +
                                family_name(spec.family()) + " quantale");
  }
}

// The summand whose closure contains both values, if any. Interiors are
// pairwise disjoint, so for a != b the summand is unique; for a == b on a
// shared endpoint either choice gives the same results.
const Summand* common_summand(const QuantaleSpec& spec, const Rational& a, const Rational& b) {
  for (const Summand& s : spec.summands()) {
    if (s.lo <= a && a <= s.hi && s.lo <= b && b <= s.hi) return &s;
  }
  return nullptr;
}

Rational arch_mul(ArchKind kind, const Rational& x, const Rational& y) {
  switch (kind) {
    case ArchKind::Product:
      return x * y;
    case ArchKind::Lukasiewicz: {
      Rational v = x + y - 1;
      return v > 0 ? v : kZero;
    }
  }
  throw std::logic_error("arch_mul: bad kind");
}

// Residuum of an Archimedean summand t-norm, for x > y.
Rational arch_imp(ArchKind kind, const Rational& x, const Rational& y) {
  switch (kind) {
    case ArchKind::Product:
      return y / x;  // x > y >= 0, so x > 0
    case ArchKind::Lukasiewicz:
      return 1 - x + y;
  }
  throw std::logic_error("arch_imp: bad kind");
}

Rational tnorm_mul(const QuantaleSpec& spec, const Rational& p, const Rational& q) {
  switch (spec.kind()) {
    case QuantaleSpec::Kind::Goedel:
      return std::min(p, q);
    case QuantaleSpec::Kind::Product:
      return p * q;
    case QuantaleSpec::Kind::Lukasiewicz: {
      Rational v = p + q - 1;
      return v > 0 ? v : kZero;
    }
    case QuantaleSpec::Kind::OrdinalSum: {
      if (const Summand* s = common_summand(spec, p, q)) {
        const Rational scale = s->hi - s->lo;
        const Rational z = arch_mul(s->kind, (p - s->lo) / scale, (q - s->lo) / scale);
        return s->lo + scale * z;
      }
      return std::min(p, q);
    }
    default:
      throw std::logic_error("tnorm_mul: not a t-norm spec");
  }
}

Rational tnorm_imp(const QuantaleSpec& spec, const Rational& p, const Rational& q) {
  if (p <= q) return kOne;
  switch (spec.kind()) {
    case QuantaleSpec::Kind::Goedel:
      return q;
    case QuantaleSpec::Kind::Product:
      return q / p;
    case QuantaleSpec::Kind::Lukasiewicz:
      return 1 - p + q;
    case QuantaleSpec::Kind::OrdinalSum: {
      // The closure case must come first: for q on a summand's lower
      // endpoint the residuum is computed inside the summand, not as q.
      if (const Summand* s = common_summand(spec, p, q)) {
        const Rational scale = s->hi - s->lo;
        const Rational z = arch_imp(s->kind, (p - s->lo) / scale, (q - s->lo) / scale);
        return z >= 1 ? kOne : s->lo + scale * z;
      }
      return q;
    }
    default:
      throw std::logic_error("tnorm_imp: not a t-norm spec");
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Unit:
      return "unit-interval";
    case Family::Lawvere:
      return "lawvere";
    case Family::Boolean:
      return "boolean";
  }
  return "?";
}

QValue QValue::unit_interval(Rational v) {
  if (v < 0 || v > 1) {
    throw std::invalid_argument("QValue: " + qcat::to_string(v) + " outside [0,1]");
  }
  return QValue(Family::Unit, std::move(v), false);
}

QValue QValue::lawvere(Rational v) {
  if (v < 0) {
    throw std::invalid_argument("QValue: " + qcat::to_string(v) + " outside [0,inf]");
  }
  return QValue(Family::Lawvere, std::move(v), false);
}

QValue QValue::lawvere_infinity() { return QValue(Family::Lawvere, 0, true); }

QValue QValue::boolean(bool bit) { return QValue(Family::Boolean, bit ? 1 : 0, false); }

const Rational& QValue::value() const {
  if (infinite_) throw std::invalid_argument("QValue: no finite value at infinity");
  return value_;
}

bool QValue::bit() const {
  if (family_ != Family::Boolean) throw std::invalid_argument("QValue: not a boolean value");
  return value_ == 1;
}

std::string QValue::str() const {
  if (infinite_) return "inf";
  return qcat::to_string(value_);
}

std::optional<QValue> QValue::parse(Family family, std::string_view text) {
  if (family == Family::Lawvere && text == "inf") return lawvere_infinity();
  auto r = parse_rational(text);
  if (!r) return std::nullopt;
  switch (family) {
    case Family::Unit:
      if (*r < 0 || *r > 1) return std::nullopt;
      return unit_interval(*r);
    case Family::Lawvere:
      if (*r < 0) return std::nullopt;
      return lawvere(*r);
    case Family::Boolean:
      if (*r != 0 && *r != 1) return std::nullopt;
      return boolean(*r == 1);
  }
  return std::nullopt;
}

QuantaleSpec QuantaleSpec::ordinal_sum(std::vector<Summand> summands) {
  if (summands.empty()) {
    throw std::invalid_argument("ordinal_sum: at least one summand required");
  }
  Rational prev_hi = 0;
  bool first = true;
  for (const Summand& s : summands) {
    if (s.lo < 0 || s.hi > 1 || !(s.lo < s.hi)) {
      throw std::invalid_argument("ordinal_sum: summand must satisfy 0 <= lo < hi <= 1");
    }
    if (!first && s.lo < prev_hi) {
      throw std::invalid_argument("ordinal_sum: summands must be sorted with disjoint interiors");
    }
    prev_hi = s.hi;
    first = false;
  }
  QuantaleSpec spec(Kind::OrdinalSum);
  spec.summands_ = std::move(summands);
  return spec;
}

Family QuantaleSpec::family() const {
  switch (kind_) {
    case Kind::Lawvere:
      return Family::Lawvere;
    case Kind::Boolean:
      return Family::Boolean;
    default:
      return Family::Unit;
  }
}

QValue QuantaleSpec::top() const {
  switch (family()) {
    case Family::Unit:
      return QValue::unit_interval(1);
    case Family::Lawvere:
      return QValue::lawvere(0);
    case Family::Boolean:
      return QValue::boolean(true);
  }
  throw std::logic_error("top: bad family");
}

QValue QuantaleSpec::bottom() const {
  switch (family()) {
    case Family::Unit:
      return QValue::unit_interval(0);
    case Family::Lawvere:
      return QValue::lawvere_infinity();
    case Family::Boolean:
      return QValue::boolean(false);
  }
  throw std::logic_error("bottom: bad family");
}

bool QuantaleSpec::in_carrier(const QValue& v) const { return v.family() == family(); }

std::string QuantaleSpec::str() const {
  switch (kind_) {
    case Kind::Goedel:
      return "godel";
    case Kind::Product:
      return "product";
    case Kind::Lukasiewicz:
      return "lukasiewicz";
    case Kind::Lawvere:
      return "lawvere";
    case Kind::Boolean:
      return "boolean";
    case Kind::OrdinalSum: {
      std::string out = "ordinal_sum[";
      bool first = true;
      for (const Summand& s : summands_) {
        if (!first) out += ", ";
        first = false;
        out += qcat::to_string(s.lo) + ".." + qcat::to_string(s.hi) + ':';
        out += s.kind == ArchKind::Product ? "product" : "lukasiewicz";
      }
      return out + "]";
    }
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<QuantaleSpec> QuantaleSpec::parse(std::string_view text) {
  text = trim(text);
  if (text == "godel") return goedel();
  if (text == "product") return product();
  if (text == "lukasiewicz") return lukasiewicz();
  if (text == "lawvere") return lawvere();
  if (text == "boolean") return boolean();
  constexpr std::string_view prefix = "ordinal_sum[";
  if (!text.starts_with(prefix) || !text.ends_with("]")) return std::nullopt;
  std::string_view body = text.substr(prefix.size(), text.size() - prefix.size() - 1);
  std::vector<Summand> summands;
  while (true) {
    const auto comma = body.find(',');
    std::string_view piece = trim(comma == std::string_view::npos ? body : body.substr(0, comma));
    const auto dots = piece.find("..");
    const auto colon = piece.find(':');
    if (dots == std::string_view::npos || colon == std::string_view::npos || colon < dots) {
      return std::nullopt;
    }
    const auto lo = parse_rational(trim(piece.substr(0, dots)));
    const auto hi = parse_rational(trim(piece.substr(dots + 2, colon - dots - 2)));
    const std::string_view kind_text = trim(piece.substr(colon + 1));
    if (!lo || !hi) return std::nullopt;
    ArchKind kind;
    if (kind_text == "product") {
      kind = ArchKind::Product;
    } else if (kind_text == "lukasiewicz") {
      kind = ArchKind::Lukasiewicz;
    } else {
      return std::nullopt;
    }
    summands.push_back({*lo, *hi, kind});
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  try {
    return ordinal_sum(std::move(summands));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool leq(const QuantaleSpec& spec, const QValue& p, const QValue& q) {
  require_family(spec, p, "leq");
  require_family(spec, q, "leq");
  switch (spec.family()) {
    case Family::Unit:
    case Family::Boolean:
      return p.value() <= q.value();
    case Family::Lawvere:
      if (p.infinite()) return true;   // inf is the bottom element
      if (q.infinite()) return false;
      return p.value() >= q.value();
  }
  throw std::logic_error("leq: bad family");
}

QValue mul(const QuantaleSpec& spec, const QValue& p, const QValue& q) {
  require_family(spec, p, "mul");
  require_family(spec, q, "mul");
  switch (spec.family()) {
    case Family::Unit:
      return QValue::unit_interval(tnorm_mul(spec, p.value(), q.value()));
    case Family::Lawvere:
      if (p.infinite() || q.infinite()) return QValue::lawvere_infinity();
      return QValue::lawvere(p.value() + q.value());
    case Family::Boolean:
      return QValue::boolean(p.bit() && q.bit());
  }
  throw std::logic_error("mul: bad family");
}

QValue imp(const QuantaleSpec& spec, const QValue& p, const QValue& q) {
  require_family(spec, p, "imp");
  require_family(spec, q, "imp");
  switch (spec.family()) {
    case Family::Unit:
      return QValue::unit_interval(tnorm_imp(spec, p.value(), q.value()));
    case Family::Lawvere:
      if (p.infinite()) return QValue::lawvere(0);  // top, also when q = inf
      if (q.infinite()) return QValue::lawvere_infinity();
      return q.value() > p.value() ? QValue::lawvere(q.value() - p.value()) : QValue::lawvere(0);
    case Family::Boolean:
      return QValue::boolean(!p.bit() || q.bit());
  }
  throw std::logic_error("imp: bad family");
}

QValue power(const QuantaleSpec& spec, const QValue& x, unsigned n) {
  require_family(spec, x, "power");
  if (n == 0) throw std::invalid_argument("power: exponent must be >= 1");
  QValue acc = x;
  QValue base = x;
  --n;
  while (n > 0) {  // square-and-multiply; mul is associative and commutative
    if (n & 1u) acc = mul(spec, acc, base);
    n >>= 1u;
    if (n > 0) base = mul(spec, base, base);
  }
  return acc;
}

QValue bound(const QuantaleSpec& spec, BoundKind kind, std::span<const QValue> values) {
  if (values.empty()) throw std::invalid_argument("bound: empty list");
  QValue acc = values.front();
  require_family(spec, acc, "bound");
  for (std::size_t i = 1; i < values.size(); ++i) {
    const QValue& v = values[i];
    const bool acc_below = leq(spec, acc, v);
    if (kind == BoundKind::Join ? acc_below : !acc_below) acc = v;
  }
  return acc;
}

bool way_below(const QuantaleSpec& spec, const QValue& p, const QValue& q) {
  require_family(spec, p, "way_below");
  require_family(spec, q, "way_below");
  switch (spec.family()) {
    case Family::Unit:
      return p.value() == 0 || p.value() < q.value();
    case Family::Lawvere:
      if (p.infinite()) return true;
      if (q.infinite()) return false;
      return p.value() > q.value();
    case Family::Boolean:
      return !p.bit() || q.bit();
  }
  throw std::logic_error("way_below: bad family");
}

bool IdempotentSet::contains(const Rational& v) const {
  for (const Interval& iv : intervals) {
    if (iv.lo <= v && v <= iv.hi) return true;
  }
  return false;
}

bool IdempotentSet::intersects_left_open(const Rational& lo_excl, const Rational& hi_incl) const {
  for (const Interval& iv : intervals) {
    if (iv.lo <= hi_incl && iv.hi > lo_excl) return true;
  }
  return false;
}

bool IdempotentSet::only_trivial() const {
  for (const Interval& iv : intervals) {
    const bool point_at_bound = iv.lo == iv.hi && (iv.lo == 0 || iv.lo == 1);
    if (!point_at_bound) return false;
  }
  return true;
}

std::string IdempotentSet::str() const {
  bool all_points = true;
  for (const Interval& iv : intervals) {
    if (iv.lo != iv.hi) all_points = false;
  }
  if (all_points) {
    std::string out = "{";
    bool first = true;
    for (const Interval& iv : intervals) {
      if (!first) out += ", ";
      first = false;
      out += qcat::to_string(iv.lo);
    }
    if (includes_infinity) {
      if (!first) out += ", ";
      out += "inf";
    }
    return out + "}";
  }
  std::string out;
  bool first = true;
  for (const Interval& iv : intervals) {
    if (!first) out += " u ";
    first = false;
    if (iv.lo == iv.hi) {
      out += "{" + qcat::to_string(iv.lo) + "}";
    } else {
      out += "[" + qcat::to_string(iv.lo) + "," + qcat::to_string(iv.hi) + "]";
    }
  }
  if (includes_infinity) out += first ? "{inf}" : " u {inf}";
  return out;
}

IdempotentSet idempotents(const QuantaleSpec& spec) {
  IdempotentSet set;
  switch (spec.kind()) {
    case QuantaleSpec::Kind::Goedel:
      set.intervals.push_back({0, 1});
      break;
    case QuantaleSpec::Kind::Product:
    case QuantaleSpec::Kind::Lukasiewicz:
      set.intervals.push_back({0, 0});
      set.intervals.push_back({1, 1});
      break;
    case QuantaleSpec::Kind::OrdinalSum: {
      // Complement of the union of the open summand intervals.
      Rational cursor = 0;
      for (const Summand& s : spec.summands()) {
        if (cursor <= s.lo) set.intervals.push_back({cursor, s.lo});
        cursor = s.hi;
      }
      set.intervals.push_back({cursor, 1});
      break;
    }
    case QuantaleSpec::Kind::Lawvere:
      set.intervals.push_back({0, 0});
      set.includes_infinity = true;
      break;
    case QuantaleSpec::Kind::Boolean:
      set.intervals.push_back({0, 0});
      set.intervals.push_back({1, 1});
      break;
  }
  return set;
}

bool is_archimedean(const QuantaleSpec& spec) {
  if (!spec.is_tnorm()) {
    throw std::invalid_argument("is_archimedean: defined for unit-interval t-norm specs only");
  }
  return idempotents(spec).only_trivial();
}

}  // namespace qcat
