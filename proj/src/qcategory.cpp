#include "qcat/qcategory.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcat {

namespace {

// Dense hom table for a truncation; generated categories evaluate their
// closed form once per pair.
std::vector<QValue> hom_table(const QCategory& C, std::size_t n) {
  std::vector<QValue> t;
  t.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.push_back(C.hom(i, j));
  }
  return t;
}

}  // namespace

QCategory::QCategory(QuantaleSpec spec, std::vector<std::string> labels,
                     std::vector<QValue> hom_row_major)
    : spec_(std::move(spec)), labels_(std::move(labels)), matrix_(std::move(hom_row_major)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("QCategory: empty carrier");
  if (matrix_.size() != n * n) {
    throw std::invalid_argument("QCategory: hom matrix must be square and match the carrier");
  }
  for (const QValue& v : matrix_) {
    if (!spec_.in_carrier(v)) {
      throw std::invalid_argument("QCategory: hom value " + v.str() +
                                  " outside the carrier of " + spec_.str());
    }
  }
}

QCategory::QCategory(QuantaleSpec spec, Generator gen)
    : spec_(std::move(spec)), gen_(std::move(gen)), name_(gen_->name) {
  if (!gen_->label || !gen_->hom) {
    throw std::invalid_argument("QCategory: generator needs label and hom functions");
  }
}

std::size_t QCategory::size() const {
  if (!finite()) throw std::invalid_argument("QCategory: generated carrier has no finite size");
  return labels_.size();
}

std::size_t QCategory::truncated_size(std::size_t cutoff) const {
  return finite() ? labels_.size() : gen_->fixed_points + cutoff;
}

QValue QCategory::hom(std::size_t i, std::size_t j) const {
  if (finite()) {
    const std::size_t n = labels_.size();
    if (i >= n || j >= n) throw std::out_of_range("QCategory::hom: index outside carrier");
    return matrix_[i * n + j];
  }
  return gen_->hom(i, j);
}

std::string QCategory::label(std::size_t i) const {
  if (finite()) {
    if (i >= labels_.size()) throw std::out_of_range("QCategory::label: index outside carrier");
    return labels_[i];
  }
  return gen_->label(i);
}

std::optional<std::size_t> QCategory::index_of(std::string_view text, std::size_t cutoff) const {
  const std::size_t n = truncated_size(cutoff);
  for (std::size_t i = 0; i < n; ++i) {
    if (label(i) == text) return i;
  }
  return std::nullopt;
}

ValidationReport validate_category(const QCategory& C, std::size_t cutoff) {
  ValidationReport report;
  const std::size_t n = C.truncated_size(cutoff);
  report.checked_size = n;
  const QuantaleSpec& spec = C.spec();
  const QValue k = spec.unit();
  const std::vector<QValue> hom = hom_table(C, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq(spec, k, hom[x * n + x])) {
      report.violations.push_back({"reflexivity", x, x, x, k, hom[x * n + x]});
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      const QValue& yz = hom[y * n + z];
      for (std::size_t x = 0; x < n; ++x) {
        const QValue lhs = mul(spec, yz, hom[x * n + y]);
        if (!leq(spec, lhs, hom[x * n + z])) {
          report.violations.push_back({"transitivity", x, y, z, lhs, hom[x * n + z]});
        }
      }
    }
  }
  return report;
}

Weight::Weight(std::vector<QValue> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("Weight: empty value list");
}

Weight::Weight(std::function<QValue(std::size_t)> fn, std::string name)
    : fn_(std::move(fn)), name_(std::move(name)) {
  if (!fn_) throw std::invalid_argument("Weight: null closed form");
}

QValue Weight::at(std::size_t i) const {
  if (fn_) return fn_(i);
  if (i >= values_.size()) {
    throw std::out_of_range("Weight: index outside the weight's domain");
  }
  return values_[i];
}

Weight representable(const QCategory& C, std::size_t a) {
  if (C.finite()) {
    std::vector<QValue> values;
    values.reserve(C.size());
    for (std::size_t x = 0; x < C.size(); ++x) values.push_back(C.hom(x, a));
    return Weight(std::move(values));
  }
  return Weight([C, a](std::size_t x) { return C.hom(x, a); }, "hom(-," + C.label(a) + ")");
}

WeightReport is_weight(const QCategory& C, const Weight& phi, std::size_t cutoff) {
  const std::size_t n = C.truncated_size(cutoff);
  if (phi.has_explicit_values() && phi.explicit_size() < n) {
    throw std::invalid_argument("is_weight: weight domain smaller than the truncated carrier");
  }
  WeightReport report;
  const QuantaleSpec& spec = C.spec();
  std::vector<QValue> values;
  values.reserve(n);
  for (std::size_t x = 0; x < n; ++x) values.push_back(phi.at(x));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const QValue lhs = mul(spec, values[y], C.hom(x, y));
      if (!leq(spec, lhs, values[x])) report.violations.push_back({x, y, lhs, values[x]});
    }
  }
  return report;
}

NetPrefix::NetPrefix(const QCategory& C, std::vector<std::size_t> head) : head_(std::move(head)) {
  if (head_.empty()) throw std::invalid_argument("NetPrefix: empty net");
  if (C.finite()) {
    for (std::size_t i : head_) {
      if (i >= C.size()) throw std::invalid_argument("NetPrefix: term outside the carrier");
    }
  }
}

NetPrefix::NetPrefix(const QCategory& C, std::vector<std::size_t> head,
                     std::function<std::size_t(std::size_t)> continuation,
                     std::optional<NetTails> tails)
    : NetPrefix(C, std::move(head)) {
  continuation_ = std::move(continuation);
  tails_ = std::move(tails);
}

std::size_t NetPrefix::term(std::size_t n) const {
  if (n < head_.size()) return head_[n];
  return continuation_ ? continuation_(n) : head_.back();
}

std::size_t NetPrefix::stabilization_index() const {
  if (!eventually_constant()) {
    throw std::invalid_argument("NetPrefix: stabilization index of a generated net");
  }
  std::size_t s = head_.size() - 1;
  while (s > 0 && head_[s - 1] == head_.back()) --s;
  return s;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CertifiedYes:
      return "certified-yes";
    case Verdict::CertifiedNo:
      return "certified-no";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

// Suffix meets of hom(x, term(mu)) for mu in [lambda, last]: the inner
// window meets of the net-weight formula, truncated at `last`.
std::vector<QValue> weight_window_meets(const QCategory& C, const NetPrefix& net, std::size_t x,
                                        std::size_t last) {
  const QuantaleSpec& spec = C.spec();
  std::vector<QValue> w(last + 1, spec.top());
  w[last] = C.hom(x, net.term(last));
  for (std::size_t l = last; l-- > 0;) {
    const QValue at_l = C.hom(x, net.term(l));
    w[l] = leq(spec, at_l, w[l + 1]) ? at_l : w[l + 1];
  }
  return w;
}

void check_tail_consistency(const QCategory& C, const NetPrefix& net, std::size_t last) {
  const QuantaleSpec& spec = C.spec();
  const NetTails& tails = *net.tails();
  // Declared pair windows: monotone, below the declared sup, and below
  // every computed truncation of the same window.
  QValue prev = spec.bottom();
  for (std::size_t l = 0; l <= last; ++l) {
    const QValue declared = tails.pair_window_inf(l);
    if (!leq(spec, prev, declared) || !leq(spec, declared, tails.pair_window_sup)) {
      throw std::logic_error("NetTails: declared pair windows not monotone below their sup");
    }
    prev = declared;
  }
}

}  // namespace

NetWeightResult net_weight(const QCategory& C, const NetPrefix& net, std::size_t cutoff) {
  if (cutoff == 0) throw std::invalid_argument("net_weight: cutoff must be positive");
  const QuantaleSpec& spec = C.spec();
  const std::size_t n = C.truncated_size(cutoff);

  if (net.eventually_constant()) {
    // All windows from the stabilization point are constant, so the
    // join of window meets collapses to hom(-, c).
    const std::size_t c = net.term(net.head_size() - 1);
    return {representable(C, c), true, ""};
  }

  const std::size_t last = cutoff - 1;
  if (net.tails()) {
    const NetTails& tails = *net.tails();
    for (std::size_t x = 0; x < n; ++x) {
      const std::vector<QValue> computed = weight_window_meets(C, net, x, last);
      QValue prev = spec.bottom();
      for (std::size_t l = 0; l <= last; ++l) {
        const QValue declared = tails.hom_window_inf(x, l);
        // The computed window meets fewer terms, so it sits above the
        // declared exact value; declared values rise to the weight.
        if (!leq(spec, declared, computed[l]) || !leq(spec, prev, declared) ||
            !leq(spec, declared, tails.weight_value(x))) {
          throw std::logic_error("NetTails: declared hom windows inconsistent with the prefix");
        }
        prev = declared;
      }
    }
    return {Weight(tails.weight_value, "net-weight"), true, ""};
  }

  std::vector<QValue> values;
  values.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::vector<QValue> w = weight_window_meets(C, net, x, last);
    QValue join = w[0];
    for (const QValue& v : w) {
      if (leq(spec, join, v)) join = v;
    }
    values.push_back(join);
  }
  return {Weight(std::move(values)), false,
          "window meets truncated at " + std::to_string(cutoff) +
              ": inner meets are upper bounds, the outer join is a lower bound"};
}

CauchyReport forward_cauchy_check(const QCategory& C, const NetPrefix& net, std::size_t cutoff) {
  if (cutoff == 0) throw std::invalid_argument("forward_cauchy_check: cutoff must be positive");
  const QuantaleSpec& spec = C.spec();
  std::size_t last = cutoff - 1;
  if (net.eventually_constant()) last = std::max(last, net.stabilization_index());

  // w(l) = meet of hom(x_g, x_m) over l <= g <= m <= last, built backward
  // from the row meets of each g.
  std::vector<QValue> windows(last + 1, spec.top());
  for (std::size_t l = last + 1; l-- > 0;) {
    QValue row = C.hom(net.term(l), net.term(l));
    for (std::size_t m = l + 1; m <= last; ++m) {
      const QValue v = C.hom(net.term(l), net.term(m));
      if (leq(spec, v, row)) row = v;
    }
    windows[l] = l == last ? row : (leq(spec, row, windows[l + 1]) ? row : windows[l + 1]);
  }

  CauchyReport report;
  report.prefix_windows = windows;
  if (net.eventually_constant()) {
    // Beyond the stabilization point every pair is (c, c), so the
    // truncated windows are the exact ones and their join is the unit.
    report.verdict = Verdict::CertifiedYes;
    report.detail = "net is eventually constant";
    return report;
  }
  if (net.tails()) {
    check_tail_consistency(C, net, last);
    const NetTails& tails = *net.tails();
    for (std::size_t l = 0; l <= last; ++l) {
      if (!leq(spec, tails.pair_window_inf(l), windows[l])) {
        throw std::logic_error("NetTails: declared pair window above the computed prefix window");
      }
    }
    if (tails.pair_window_sup == spec.top()) {
      report.verdict = Verdict::CertifiedYes;
      report.detail = "declared window infima join to the unit";
    } else {
      report.verdict = Verdict::CertifiedNo;
      report.bound = tails.pair_window_sup;
      report.detail = "declared window infima stay below " + tails.pair_window_sup.str();
    }
    return report;
  }
  report.verdict = Verdict::Inconclusive;
  report.detail = "no declared tails; prefix windows listed up to " + std::to_string(last);
  return report;
}

FcWeightReport is_forward_cauchy_weight(const QCategory& C, const Weight& phi) {
  if (!C.finite()) {
    throw std::invalid_argument(
        "is_forward_cauchy_weight: generated carriers admit only truncation-level evidence");
  }
  if (C.spec().family() != Family::Unit) {
    throw std::invalid_argument("is_forward_cauchy_weight: unit-interval specs only");
  }
  const std::size_t n = C.size();

  std::vector<Rational> values;
  values.reserve(n);
  for (std::size_t x = 0; x < n; ++x) values.push_back(phi.at(x).value());

  Rational max_value = values.front();
  for (const Rational& v : values) max_value = std::max(max_value, v);
  if (max_value != 1) {
    return {false, "condition (i) fails: the values join to " + to_string(max_value)};
  }

  // Threshold set of all occurring values. On the chain [0,1] a
  // strict-inequality quantifier only distinguishes positions relative
  // to this set, and the demanded triples are downward closed, so it is
  // enough to test the representative just below each bound.
  std::vector<Rational> thresholds{Rational(0), Rational(1)};
  for (const Rational& v : values) thresholds.push_back(v);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) thresholds.push_back(C.hom(x, y).value());
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  const auto just_below = [&thresholds](const Rational& v) -> Rational {
    if (v == 0) return Rational(0);  // the only element way below 0
    auto it = std::lower_bound(thresholds.begin(), thresholds.end(), v);
    return (*(it - 1) + v) / 2;
  };
  const auto wb = [](const Rational& a, const Rational& b) { return a == 0 || a < b; };

  const Rational r_hat = just_below(Rational(1));
  for (std::size_t x1 = 0; x1 < n; ++x1) {
    const Rational s1 = just_below(values[x1]);
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      const Rational s2 = just_below(values[x2]);
      bool found = false;
      for (std::size_t x = 0; x < n && !found; ++x) {
        found = wb(r_hat, values[x]) && wb(s1, C.hom(x1, x).value()) &&
                wb(s2, C.hom(x2, x).value());
      }
      if (!found) {
        return {false, "condition (ii) fails at the pair (" + C.label(x1) + ", " + C.label(x2) +
                           ")"};
      }
    }
  }
  return {true, ""};
}

namespace {

std::vector<QValue> colimit_rhs(const QCategory& C, const Weight& phi, std::size_t n) {
  const QuantaleSpec& spec = C.spec();
  std::vector<QValue> rhs;
  rhs.reserve(n);
  for (std::size_t y = 0; y < n; ++y) {
    QValue m = spec.top();
    for (std::size_t x = 0; x < n; ++x) {
      const QValue v = imp(spec, phi.at(x), C.hom(x, y));
      if (leq(spec, v, m)) m = v;
    }
    rhs.push_back(m);
  }
  return rhs;
}

}  // namespace

ColimitReport is_colimit(const QCategory& C, const Weight& phi, std::size_t a,
                         std::size_t cutoff) {
  const std::size_t n = C.truncated_size(cutoff);
  const std::vector<QValue> rhs = colimit_rhs(C, phi, n);
  ColimitReport report{true, {}, std::nullopt};
  for (std::size_t y = 0; y < n; ++y) {
    const QValue lhs = C.hom(a, y);
    report.probes.push_back({y, lhs, rhs[y]});
    if (lhs != rhs[y] && report.holds) {
      report.holds = false;
      report.first_failure = y;
    }
  }
  return report;
}

std::vector<std::size_t> colimit_candidates(const QCategory& C, const Weight& phi,
                                            std::size_t cutoff) {
  const std::size_t n = C.truncated_size(cutoff);
  const std::vector<QValue> rhs = colimit_rhs(C, phi, n);
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < n; ++a) {
    bool holds = true;
    for (std::size_t y = 0; y < n && holds; ++y) holds = C.hom(a, y) == rhs[y];
    if (holds) out.push_back(a);
  }
  return out;
}

YonedaReport is_yoneda_limit(const QCategory& C, const NetPrefix& net, std::size_t a,
                             std::size_t cutoff) {
  YonedaReport report{Verdict::Inconclusive, false, {}, false, true, {}};
  report.cauchy = forward_cauchy_check(C, net, cutoff);
  NetWeightResult nw = net_weight(C, net, cutoff);
  report.colimit = is_colimit(C, nw.weight, a, cutoff);

  if (net.eventually_constant()) {
    // Second route: the direct join-of-window-meets formula, which for an
    // eventually constant net collapses to hom(c, -).
    report.direct_route_checked = true;
    const std::size_t c = net.term(net.head_size() - 1);
    const std::size_t n = C.truncated_size(cutoff);
    bool direct_holds = true;
    for (std::size_t y = 0; y < n && direct_holds; ++y) {
      direct_holds = C.hom(a, y) == C.hom(c, y);
    }
    report.routes_agree = direct_holds == report.colimit.holds;
  }

  if (!nw.exact) {
    report.verdict = Verdict::Inconclusive;
    return report;
  }
  report.certified = C.finite();
  report.verdict = report.colimit.holds ? Verdict::CertifiedYes : Verdict::CertifiedNo;
  return report;
}

std::vector<std::pair<std::size_t, std::size_t>> underlying_order(const QCategory& C,
                                                                  std::size_t cutoff) {
  const std::size_t n = C.truncated_size(cutoff);
  const QuantaleSpec& spec = C.spec();
  const QValue k = spec.unit();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (leq(spec, k, C.hom(x, y))) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

}  // namespace qcat
