#include "qcat/formal_balls.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qcat {

bool ball_leq(const QCategory& C, const FormalBall& b1, const FormalBall& b2) {
  const QuantaleSpec& spec = C.spec();
  return leq(spec, b1.radius, mul(spec, b2.radius, C.hom(b1.center, b2.center)));
}

DirectedFamily::DirectedFamily(const QCategory& C, std::vector<FormalBall> balls)
    : balls_(std::move(balls)), r_sup_(C.spec().bottom()) {
  if (balls_.empty()) throw std::invalid_argument("DirectedFamily: empty family");
  const QuantaleSpec& spec = C.spec();
  for (const FormalBall& b : balls_) {
    if (C.finite() && b.center >= C.size()) {
      throw std::invalid_argument("DirectedFamily: ball center outside the carrier");
    }
    if (!spec.in_carrier(b.radius)) {
      throw std::invalid_argument("DirectedFamily: ball radius outside the carrier");
    }
    if (leq(spec, r_sup_, b.radius)) r_sup_ = b.radius;
  }
}

DirectedFamily::DirectedFamily(const QCategory& C, std::function<FormalBall(std::size_t)> chain,
                               QValue r_sup, std::string name)
    : chain_(std::move(chain)), r_sup_(std::move(r_sup)), name_(std::move(name)) {
  if (!chain_) throw std::invalid_argument("DirectedFamily: null chain generator");
  if (!C.spec().in_carrier(r_sup_)) {
    throw std::invalid_argument("DirectedFamily: declared radius sup outside the carrier");
  }
}

FormalBall DirectedFamily::ball(std::size_t i) const {
  if (chain_) return chain_(i);
  if (i >= balls_.size()) throw std::out_of_range("DirectedFamily: index outside the family");
  return balls_[i];
}

std::size_t DirectedFamily::clamp_depth(std::size_t depth) const {
  // Explicit lists are the whole family; prefix depth only limits chains.
  return is_explicit() ? balls_.size() : depth;
}

NetPrefix DirectedFamily::centers_net(const QCategory& C, std::size_t depth) const {
  if (is_explicit()) {
    std::vector<std::size_t> head;
    head.reserve(balls_.size());
    for (const FormalBall& b : balls_) head.push_back(b.center);
    return NetPrefix(C, head);
  }
  std::vector<std::size_t> head;
  head.reserve(depth);
  for (std::size_t i = 0; i < std::max<std::size_t>(depth, 1); ++i) head.push_back(chain_(i).center);
  auto chain = chain_;
  return NetPrefix(
      C, std::move(head), [chain](std::size_t n) { return chain(n).center; }, centers_tails_);
}

namespace {

void check_declared_radius_sup(const QCategory& C, const DirectedFamily& F, std::size_t depth) {
  const QuantaleSpec& spec = C.spec();
  for (std::size_t i = 0; i < depth; ++i) {
    if (!leq(spec, F.ball(i).radius, F.radius_sup())) {
      throw std::logic_error("DirectedFamily: prefix radius above the declared radius sup");
    }
  }
}

}  // namespace

DirectedVerdict directed_check(const QCategory& C, const DirectedFamily& F, std::size_t depth) {
  if (depth < 2) throw std::invalid_argument("directed_check: depth must be at least 2");
  const std::size_t m = F.clamp_depth(depth);
  check_declared_radius_sup(C, F, m);

  if (!F.is_explicit()) {
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (!ball_leq(C, F.ball(i), F.ball(i + 1))) {
        return {Verdict::CertifiedNo, std::make_pair(i, i + 1),
                "chain order fails between consecutive balls"};
      }
    }
    return {Verdict::CertifiedYes, std::nullopt,
            "declared chain, monotone on the first " + std::to_string(m) + " balls"};
  }

  // Exhaustive pairwise upper-bound search; a single dominating ball
  // settles everything first.
  for (std::size_t k = 0; k < m; ++k) {
    bool dominates = true;
    for (std::size_t i = 0; i < m && dominates; ++i) {
      dominates = ball_leq(C, F.ball(i), F.ball(k));
    }
    if (dominates) {
      return {Verdict::CertifiedYes, std::nullopt,
              "ball " + std::to_string(k) + " dominates the family"};
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      bool found = false;
      for (std::size_t k = 0; k < m && !found; ++k) {
        found = ball_leq(C, F.ball(i), F.ball(k)) && ball_leq(C, F.ball(j), F.ball(k));
      }
      if (!found) {
        return {Verdict::CertifiedNo, std::make_pair(i, j),
                "no upper bound in the family for this pair"};
      }
    }
  }
  return {Verdict::CertifiedYes, std::nullopt, "all pairs bounded within the family"};
}

RadiiCauchyReport radii_imply_cauchy(const QCategory& C, const DirectedFamily& F,
                                     std::size_t depth) {
  const std::size_t m = F.clamp_depth(depth);
  const QuantaleSpec& spec = C.spec();
  check_declared_radius_sup(C, F, m);

  RadiiCauchyReport report{true, std::nullopt, false, ""};
  // hom(x_mu, x_gamma) >= r_lambda for lambda <= mu <= gamma: with the
  // prefix maximum of the radii at mu the triple scan becomes a pair scan.
  QValue prefix_max = spec.bottom();
  std::size_t argmax = 0;
  for (std::size_t mu = 0; mu < m && report.kernel_holds; ++mu) {
    const QValue r = F.ball(mu).radius;
    if (leq(spec, prefix_max, r)) {
      prefix_max = r;
      argmax = mu;
    }
    for (std::size_t gamma = mu; gamma < m; ++gamma) {
      if (!leq(spec, prefix_max, C.hom(F.ball(mu).center, F.ball(gamma).center))) {
        report.kernel_holds = false;
        report.witness = std::make_tuple(argmax, mu, gamma);
        break;
      }
    }
  }

  if (!report.kernel_holds) {
    report.detail = "kernel inequality fails on the prefix";
    return report;
  }
  if (F.radius_sup() == spec.top()) {
    report.centers_certified_cauchy = true;
    report.detail = "declared radius sup is the unit; a directed family with that sup has forward-Cauchy centers";
    return report;
  }
  if (spec.is_tnorm() && is_archimedean(spec)) {
    bool positive = false;
    for (std::size_t i = 0; i < m && !positive; ++i) {
      positive = !(F.ball(i).radius == spec.bottom());
    }
    if (positive) {
      report.centers_certified_cauchy = true;
      report.detail = "Archimedean spec and a positive radius: directed families of this kind have forward-Cauchy centers";
      return report;
    }
  }
  report.detail = "radius sup " + F.radius_sup().str() + " below the unit; no certification";
  return report;
}

JoinViaYonedaResult join_via_yoneda(const QCategory& C, const DirectedFamily& F,
                                    std::size_t cutoff) {
  JoinViaYonedaResult result;
  const NetPrefix net = F.centers_net(C, cutoff);
  const CauchyReport cauchy = forward_cauchy_check(C, net, cutoff);
  if (cauchy.verdict != Verdict::CertifiedYes) {
    result.verdict = Verdict::Inconclusive;
    result.detail = "centers not certified forward Cauchy (" + verdict_name(cauchy.verdict) + ")";
    return result;
  }
  const std::size_t n = C.truncated_size(cutoff);
  for (std::size_t a = 0; a < n; ++a) {
    const YonedaReport yr = is_yoneda_limit(C, net, a, cutoff);
    if (yr.verdict == Verdict::CertifiedYes) {
      result.yoneda_limit = a;
      result.join = FormalBall{a, F.radius_sup()};
      result.upper_bound_verified = true;
      const std::size_t m = F.clamp_depth(cutoff);
      for (std::size_t i = 0; i < m && result.upper_bound_verified; ++i) {
        result.upper_bound_verified = ball_leq(C, F.ball(i), *result.join);
      }
      result.verdict = result.upper_bound_verified ? Verdict::CertifiedYes : Verdict::CertifiedNo;
      result.detail = result.upper_bound_verified
                          ? "join is (Yoneda limit, declared radius sup)"
                          : "candidate fails the upper-bound half on the prefix";
      return result;
    }
  }
  result.verdict = Verdict::Inconclusive;
  result.detail = "no Yoneda limit found in the truncation; the hypotheses are not established";
  return result;
}

JoinVerdict join_certify(const QCategory& C, const DirectedFamily& F, const FormalBall& candidate,
                         std::span<const FormalBall> probes, std::size_t depth) {
  const QuantaleSpec& spec = C.spec();
  const std::size_t m = F.clamp_depth(depth);
  JoinVerdict verdict{JoinVerdict::Kind::Inconclusive, candidate, std::nullopt, m, 0, ""};

  for (std::size_t i = 0; i < m; ++i) {
    const FormalBall b = F.ball(i);
    if (!ball_leq(C, b, candidate)) {
      verdict.kind = JoinVerdict::Kind::Refuted;
      verdict.witness = RefutationWitness{
          RefutationWitness::Kind::MemberNotBelow, i, candidate, b.radius,
          mul(spec, candidate.radius, C.hom(b.center, candidate.center))};
      verdict.detail = "family member " + std::to_string(i) + " is not below the candidate";
      return verdict;
    }
  }

  for (const FormalBall& probe : probes) {
    bool upper_bound = true;
    for (std::size_t i = 0; i < m && upper_bound; ++i) {
      upper_bound = ball_leq(C, F.ball(i), probe);
    }
    if (!upper_bound) continue;
    ++verdict.upper_bound_probes;
    if (!ball_leq(C, candidate, probe)) {
      verdict.kind = JoinVerdict::Kind::Refuted;
      verdict.witness = RefutationWitness{
          RefutationWitness::Kind::UpperBoundNotAbove, 0, probe, candidate.radius,
          mul(spec, probe.radius, C.hom(candidate.center, probe.center))};
      verdict.detail = "an upper-bound probe is not above the candidate";
      return verdict;
    }
  }
  verdict.kind = JoinVerdict::Kind::CertifiedAgainstProbes;
  verdict.detail = "upper bound of the family; below all " +
                   std::to_string(verdict.upper_bound_probes) + " upper-bound probes";
  return verdict;
}

std::optional<RefutationWitness> refute_join(const QCategory& C, const DirectedFamily& F,
                                             const FormalBall& candidate, std::size_t depth) {
  const QuantaleSpec& spec = C.spec();
  const std::size_t m = F.clamp_depth(depth);
  for (std::size_t i = 0; i < m; ++i) {
    const FormalBall b = F.ball(i);
    if (!ball_leq(C, b, candidate)) {
      return RefutationWitness{RefutationWitness::Kind::MemberNotBelow, i, candidate, b.radius,
                               mul(spec, candidate.radius, C.hom(b.center, candidate.center))};
    }
  }
  return std::nullopt;
}

std::vector<QValue> default_radius_grid(const QCategory& C) {
  if (!C.finite()) {
    throw std::invalid_argument("default_radius_grid: finite categories only");
  }
  const QuantaleSpec& spec = C.spec();
  if (spec.family() == Family::Boolean) {
    return {QValue::boolean(false), QValue::boolean(true)};
  }
  std::vector<Rational> values;
  if (spec.family() == Family::Unit) {
    for (int i = 0; i <= 16; ++i) values.push_back(Rational(i, 16));
  } else {
    for (int i = 0; i <= 16; ++i) values.push_back(Rational(i, 8));
  }
  const std::size_t n = C.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const QValue v = C.hom(x, y);
      if (!v.infinite()) values.push_back(v.value());
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  // Midpoints: way-below slices need radii strictly between occurring
  // thresholds, which the plain grid cannot always provide.
  std::vector<Rational> grid = values;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    grid.push_back((values[i] + values[i + 1]) / 2);
  }
  std::sort(grid.begin(), grid.end());
  std::vector<QValue> out;
  out.reserve(grid.size() + 1);
  for (const Rational& v : grid) {
    out.push_back(spec.family() == Family::Unit ? QValue::unit_interval(v) : QValue::lawvere(v));
  }
  if (spec.family() == Family::Lawvere) out.push_back(QValue::lawvere_infinity());
  return out;
}

BphiResult bphi(const QCategory& C, const Weight& phi, std::span<const QValue> radius_grid) {
  const FcWeightReport fc = is_forward_cauchy_weight(C, phi);
  if (!fc.ok) {
    throw std::invalid_argument("bphi: the weight is not forward Cauchy (" + fc.detail + ")");
  }
  const QuantaleSpec& spec = C.spec();
  const std::size_t n = C.size();

  std::vector<QValue> grid(radius_grid.begin(), radius_grid.end());
  std::sort(grid.begin(), grid.end(),
            [&spec](const QValue& a, const QValue& b) { return leq(spec, a, b) && !(a == b); });
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<FormalBall> balls;
  for (std::size_t x = 0; x < n; ++x) {
    for (const QValue& r : grid) {
      if (way_below(spec, r, phi.at(x))) balls.push_back({x, r});
    }
  }
  DirectedFamily family(C, std::move(balls));
  BphiResult result{family, false, true, ""};
  result.directed = directed_check(C, family, std::max<std::size_t>(2, family.explicit_size()))
                        .verdict == Verdict::CertifiedYes;

  // Reconstruction: the net weight of the family indexed by itself,
  // join over members of the meet of hom(-, center) over the members above.
  const std::size_t m = family.explicit_size();
  std::vector<std::vector<std::size_t>> above(m);
  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t u = 0; u < m; ++u) {
      if (ball_leq(C, family.ball(l), family.ball(u))) above[l].push_back(u);
    }
  }
  for (std::size_t x = 0; x < n && result.reconstruction_ok; ++x) {
    std::vector<QValue> row;
    row.reserve(m);
    for (std::size_t u = 0; u < m; ++u) row.push_back(C.hom(x, family.ball(u).center));
    QValue join = spec.bottom();
    for (std::size_t l = 0; l < m; ++l) {
      QValue meet = spec.top();
      for (std::size_t u : above[l]) {
        if (leq(spec, row[u], meet)) meet = row[u];
      }
      if (leq(spec, join, meet)) join = meet;
    }
    if (!(join == phi.at(x))) {
      result.reconstruction_ok = false;
      result.detail = "reconstruction differs at " + C.label(x) + ": " + join.str() + " vs " +
                      phi.at(x).str();
    }
  }
  return result;
}

PropertyRDecision property_r_decide(const QCategory& C, std::size_t cutoff) {
  const QuantaleSpec& spec = C.spec();
  if (!spec.is_tnorm()) {
    throw std::invalid_argument("property_r_decide: unit-interval t-norm specs only");
  }
  const IdempotentSet idem = idempotents(spec);
  const std::size_t n = C.truncated_size(cutoff);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Rational v = C.hom(x, y).value();
      if (v < 1 && idem.intersects_left_open(Rational(0), v)) {
        return {false, std::make_pair(x, y)};
      }
    }
  }
  return {true, std::nullopt};
}

PropertyRGridConfig default_property_r_grid_config(const QCategory& C) {
  if (!C.spec().is_tnorm()) {
    throw std::invalid_argument("property_r grids: unit-interval t-norm specs only");
  }
  PropertyRGridConfig config;
  for (int i = 1; i <= 8; ++i) {
    for (int j = i; j <= 8; ++j) {
      config.st_grid.emplace_back(QValue::unit_interval(Rational(i, 8)),
                                  QValue::unit_interval(Rational(j, 8)));
    }
  }
  std::vector<Rational> rprimes;
  for (int i = 0; i <= 16; ++i) rprimes.push_back(Rational(i, 16));
  if (C.finite()) {
    for (std::size_t x = 0; x < C.size(); ++x) {
      for (std::size_t y = 0; y < C.size(); ++y) rprimes.push_back(C.hom(x, y).value());
    }
  }
  std::sort(rprimes.begin(), rprimes.end());
  rprimes.erase(std::unique(rprimes.begin(), rprimes.end()), rprimes.end());
  for (const Rational& r : rprimes) config.rprime_grid.push_back(QValue::unit_interval(r));
  // The trial schedule: refutation must break the biconditional at every
  // trial. 15/16 lies inside (1-t, 1) for every t in the grid, which is
  // what the Lukasiewicz witness radius needs; the product case holds at
  // any trial. Widening the st grid below 1/8 would require trials
  // closer to 1.
  config.trial_r = {QValue::unit_interval(Rational(1, 2)), QValue::unit_interval(Rational(3, 4)),
                    QValue::unit_interval(Rational(15, 16))};
  return config;
}

PropertyRGridResult property_r_grid(const QCategory& C, const PropertyRGridConfig& config,
                                    std::size_t cutoff) {
  const QuantaleSpec& spec = C.spec();
  if (!spec.is_tnorm()) {
    throw std::invalid_argument("property_r_grid: unit-interval t-norm specs only");
  }
  const std::size_t n = C.truncated_size(cutoff);
  const QValue top = spec.top();

  // The biconditional depends on (x,y) only through hom(x,y).
  std::vector<QValue> distinct;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const QValue v = C.hom(x, y);
      if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
    }
  }

  for (const auto& [s, t] : config.st_grid) {
    if (!leq(spec, s, t) || s == spec.bottom()) {
      throw std::invalid_argument("property_r_grid: st pairs must satisfy 0 < s <= t");
    }
    const QValue t_to_s = imp(spec, t, s);
    // broken[i][v]: biconditional fails at rprime_grid[i] and hom value v.
    std::vector<std::vector<bool>> broken(config.rprime_grid.size());
    std::vector<QValue> s_v, ts_v;
    for (const QValue& v : distinct) {
      s_v.push_back(mul(spec, s, v));
      ts_v.push_back(mul(spec, t_to_s, v));
    }
    for (std::size_t i = 0; i < config.rprime_grid.size(); ++i) {
      const QValue t_rp = mul(spec, t, config.rprime_grid[i]);
      broken[i].resize(distinct.size());
      for (std::size_t vi = 0; vi < distinct.size(); ++vi) {
        const bool lhs = leq(spec, t_rp, s_v[vi]);
        const bool rhs = leq(spec, config.rprime_grid[i], ts_v[vi]);
        broken[i][vi] = lhs != rhs;
      }
    }

    std::vector<PropertyRGridBreak> breaks;
    bool all_trials_break = true;
    for (const QValue& trial : config.trial_r) {
      if (!way_below(spec, trial, top)) {
        throw std::invalid_argument("property_r_grid: trial radii must be way below the unit");
      }
      std::optional<PropertyRGridBreak> found;
      for (std::size_t x = 0; x < n && !found; ++x) {
        for (std::size_t y = 0; y < n && !found; ++y) {
          const QValue v = C.hom(x, y);
          const std::size_t vi =
              std::find(distinct.begin(), distinct.end(), v) - distinct.begin();
          for (std::size_t i = 0; i < config.rprime_grid.size(); ++i) {
            if (!leq(spec, trial, config.rprime_grid[i])) continue;
            if (broken[i][vi]) {
              const QValue t_rp = mul(spec, t, config.rprime_grid[i]);
              found = PropertyRGridBreak{trial, x, y, config.rprime_grid[i],
                                         leq(spec, t_rp, s_v[vi]),
                                         leq(spec, config.rprime_grid[i], ts_v[vi])};
              break;
            }
          }
        }
      }
      if (!found) {
        all_trials_break = false;
        break;
      }
      breaks.push_back(*found);
    }
    if (all_trials_break) {
      return {true, std::make_pair(s, t), std::move(breaks)};
    }
  }
  return {false, std::nullopt, {}};
}

ExpansionReport expansion_check(const QCategory& C, std::size_t x, std::size_t y,
                                std::span<const QValue> s_grid) {
  const QuantaleSpec& spec = C.spec();
  ExpansionReport report{};
  report.hypothesis_ok = property_r_decide(C, 1).holds;
  const QValue top = spec.top();
  report.full_radius = ball_leq(C, {x, top}, {y, top});
  report.all_s = true;
  report.exists_s = false;
  for (const QValue& s : s_grid) {
    if (s == spec.bottom()) continue;
    const bool holds = ball_leq(C, {x, s}, {y, s});
    if (holds && !report.exists_s) report.exists_s = true;
    if (!holds && report.all_s) {
      report.all_s = false;
      report.diverging_s = s;
    }
  }
  report.equivalent =
      report.full_radius == report.all_s && report.all_s == report.exists_s;
  if (report.equivalent) report.diverging_s = std::nullopt;
  return report;
}

MainLemmaReport mainlemma_suite(const QCategory& C, const DirectedFamily& F, std::size_t a,
                                std::size_t cutoff) {
  const QuantaleSpec& spec = C.spec();
  if (!(F.radius_sup() == spec.top())) {
    throw std::invalid_argument("mainlemma_suite: the family's radius sup must be the unit");
  }
  MainLemmaReport report{Verdict::Inconclusive, false, false, false, true, false, true, ""};

  const NetPrefix net = F.centers_net(C, cutoff);
  const YonedaReport yoneda = is_yoneda_limit(C, net, a, cutoff);
  report.yoneda = yoneda.verdict;

  std::vector<FormalBall> probes;
  if (C.finite()) {
    for (const QValue& r : default_radius_grid(C)) {
      for (std::size_t p = 0; p < C.size(); ++p) probes.push_back({p, r});
    }
  } else {
    // Coarse probe radii for generated carriers: sixteenths plus the
    // unit; coarse centers keep prefix upper bounds honest.
    const std::size_t n = C.truncated_size(cutoff);
    for (int i = 0; i <= 16; ++i) {
      for (std::size_t p = 0; p < std::min<std::size_t>(n, 24); ++p) {
        probes.push_back({p, spec.family() == Family::Unit
                                 ? QValue::unit_interval(Rational(i, 16))
                                 : QValue::lawvere(Rational(i, 16))});
      }
    }
  }
  const FormalBall candidate{a, spec.top()};
  const JoinVerdict join = join_certify(C, F, candidate, probes, cutoff);
  report.join_certified = join.kind == JoinVerdict::Kind::CertifiedAgainstProbes;

  report.property_r = spec.is_tnorm() ? property_r_decide(C, cutoff).holds : false;

  report.dir1_checked = yoneda.verdict == Verdict::CertifiedYes;
  if (report.dir1_checked) report.dir1_ok = report.join_certified;
  report.dir2_checked = report.join_certified && report.property_r;
  if (report.dir2_checked) report.dir2_ok = yoneda.verdict == Verdict::CertifiedYes;

  report.detail = "yoneda " + verdict_name(yoneda.verdict) + "; join " +
                  (report.join_certified ? "certified" : "not certified") + "; property (R) " +
                  (report.property_r ? "holds" : "fails or not applicable");
  return report;
}

}  // namespace qcat
