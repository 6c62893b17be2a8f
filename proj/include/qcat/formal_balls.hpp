#pragma once

#include "qcat/qcategory.hpp"

#include <span>
#include <tuple>

namespace qcat {

/// A formal ball (center, radius); the radius may be the bottom element.
struct FormalBall {
  std::size_t center;
  QValue radius;
  friend bool operator==(const FormalBall&, const FormalBall&) = default;
};

/// The ball preorder: (x,r) <= (y,s) iff r <= s (*) hom(x,y).
bool ball_leq(const QCategory& C, const FormalBall& b1, const FormalBall& b2);

/// A finitely described directed subset of the ball preorder: an
/// explicit list, or an increasing chain given by a closed form together
/// with its declared radius supremum. Explicit lists are complete -- the
/// list is the whole family; chain prefixes are evidence about an
/// infinite object.
class DirectedFamily {
 public:
  DirectedFamily(const QCategory& C, std::vector<FormalBall> balls);
  DirectedFamily(const QCategory& C, std::function<FormalBall(std::size_t)> chain, QValue r_sup,
                 std::string name);

  bool is_explicit() const { return !chain_; }
  std::size_t explicit_size() const { return balls_.size(); }
  FormalBall ball(std::size_t i) const;
  const QValue& radius_sup() const { return r_sup_; }
  const std::string& name() const { return name_; }

  /// Smallest of depth and the explicit size; chains are unbounded.
  std::size_t clamp_depth(std::size_t depth) const;

  /// The net of centers. Explicit families yield an eventually-constant
  /// net; chains carry their continuation and optional declared tails.
  NetPrefix centers_net(const QCategory& C, std::size_t depth) const;
  void set_centers_tails(NetTails tails) { centers_tails_ = std::move(tails); }

 private:
  std::vector<FormalBall> balls_;
  std::function<FormalBall(std::size_t)> chain_;
  QValue r_sup_;
  std::string name_;
  std::optional<NetTails> centers_tails_;
};

struct DirectedVerdict {
  Verdict verdict;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::string detail;
};

/// Explicit lists: every pair must have an upper bound in the family
/// (exhaustive, hence certified either way). Chains: monotonicity of the
/// first `depth` balls is verified; a chain is directed outright.
DirectedVerdict directed_check(const QCategory& C, const DirectedFamily& F, std::size_t depth);

struct RadiiCauchyReport {
  bool kernel_holds;  // hom(x_mu, x_gamma) >= r_lambda for lambda <= mu <= gamma <= depth
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> witness;
  bool centers_certified_cauchy;
  std::string detail;
};

/// The quantitative kernel behind "a directed family whose radii join to
/// the unit has forward-Cauchy centers". On Archimedean specs a positive
/// radius lower bound certifies the centers as well.
RadiiCauchyReport radii_imply_cauchy(const QCategory& C, const DirectedFamily& F,
                                     std::size_t depth);

struct JoinViaYonedaResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<FormalBall> join;
  std::optional<std::size_t> yoneda_limit;
  bool upper_bound_verified = false;
  std::string detail;
};

/// If the centers are certified forward Cauchy and some truncation
/// element is their Yoneda limit a, returns (a, r_sup) and verifies the
/// upper-bound half on the prefix; inconclusive when the hypotheses
/// cannot be established.
JoinViaYonedaResult join_via_yoneda(const QCategory& C, const DirectedFamily& F,
                                    std::size_t cutoff);

struct RefutationWitness {
  enum class Kind { MemberNotBelow, UpperBoundNotAbove };
  Kind kind;
  std::size_t member_index;  // meaningful for MemberNotBelow
  FormalBall probe;          // meaningful for UpperBoundNotAbove
  QValue lhs, rhs;           // the failed inequality lhs <= rhs
};

struct JoinVerdict {
  enum class Kind { CertifiedAgainstProbes, Refuted, Inconclusive };
  Kind kind;
  FormalBall candidate;
  std::optional<RefutationWitness> witness;
  std::size_t depth = 0;
  std::size_t upper_bound_probes = 0;
  std::string detail;
};

/// Certifies the candidate as a join against a finite probe set: the
/// candidate must dominate the family (prefix of `depth` for chains) and
/// sit below every probe that itself dominates the family. Refutations
/// carry a re-checkable witness.
JoinVerdict join_certify(const QCategory& C, const DirectedFamily& F, const FormalBall& candidate,
                         std::span<const FormalBall> probes, std::size_t depth);

/// Searches the first index m <= depth with ball(m) not below the
/// candidate.
std::optional<RefutationWitness> refute_join(const QCategory& C, const DirectedFamily& F,
                                             const FormalBall& candidate, std::size_t depth);

/// Default radius grid: sixteenths, every value occurring in the
/// category, and the midpoints of consecutive occurring values (the
/// way-below slices need radii strictly between occurring thresholds).
std::vector<QValue> default_radius_grid(const QCategory& C);

struct BphiResult {
  DirectedFamily family;
  bool directed;
  bool reconstruction_ok;  // join-of-window-meets over the family equals phi
  std::string detail;
};

/// The finite slice {(x,r) : r in grid, r way-below phi(x)} of the ball
/// set of a forward-Cauchy weight phi; rejects weights that are not
/// forward Cauchy. The result records the directedness check and whether
/// the weight is reconstructed exactly from the slice.
BphiResult bphi(const QCategory& C, const Weight& phi, std::span<const QValue> radius_grid);

struct PropertyRDecision {
  bool holds;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Symbolic decision over unit-interval t-norm specs: fails iff some
/// hom(x,y) < 1 has an idempotent in (0, hom(x,y)].
PropertyRDecision property_r_decide(const QCategory& C, std::size_t cutoff);

struct PropertyRGridConfig {
  std::vector<std::pair<QValue, QValue>> st_grid;  // 0 < s <= t
  std::vector<QValue> rprime_grid;
  std::vector<QValue> trial_r;  // refutation requires a break at every trial
};

PropertyRGridConfig default_property_r_grid_config(const QCategory& C);

struct PropertyRGridBreak {
  QValue trial_r;
  std::size_t x, y;
  QValue r_prime;
  bool lhs, rhs;  // the two sides of the broken biconditional
};

struct PropertyRGridResult {
  bool refuted;
  std::optional<std::pair<QValue, QValue>> st_witness;
  std::vector<PropertyRGridBreak> breaks;  // one per trial when refuted
};

/// Sound, incomplete refuter for the radius-rescaling biconditional: a
/// pair (s,t) refutes only if every trial r admits a breaking
/// (x, y, r' >= r) from the grids.
PropertyRGridResult property_r_grid(const QCategory& C, const PropertyRGridConfig& config,
                                    std::size_t cutoff);

struct ExpansionReport {
  bool hypothesis_ok;  // property_r_decide holds; otherwise the report is so labeled
  bool full_radius;    // (x,1) <= (y,1)
  bool all_s;
  bool exists_s;
  bool equivalent;
  std::optional<QValue> diverging_s;
};

/// Three-way equivalence of ball expansion at equal radii, meaningful
/// under property (R).
ExpansionReport expansion_check(const QCategory& C, std::size_t x, std::size_t y,
                                std::span<const QValue> s_grid);

struct MainLemmaReport {
  Verdict yoneda;
  bool join_certified;
  bool property_r;
  bool dir1_checked, dir1_ok;  // Yoneda limit => (a, unit) is a join
  bool dir2_checked, dir2_ok;  // join + property (R) => Yoneda limit
  std::string detail;
  bool ok() const { return dir1_ok && dir2_ok; }
};

/// Instance check of both directions of the join/Yoneda-limit
/// correspondence for a family with radius supremum equal to the unit.
MainLemmaReport mainlemma_suite(const QCategory& C, const DirectedFamily& F, std::size_t a,
                                std::size_t cutoff);

}  // namespace qcat
