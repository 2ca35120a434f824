#ifndef MONIDEAL_NTF_HPP
#define MONIDEAL_NTF_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monideal/decomposition.hpp"
#include "monideal/errors.hpp"
#include "monideal/hypergraph.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// How the default number of powers to scan is chosen.
enum class BoundRule {
  /// ceil((d+1)/2) over the non-isolated vertices.
  HalfDimension,
  /// 1 + the largest matching number over all minors (isolated vertices
  /// stripped).
  BetaStarPlusOne,
};

struct AnalysisConfig {
  Budget budget;
  /// Fixed number of powers; overrides `rule` when set.
  std::optional<int> bound;
  BoundRule rule = BoundRule::HalfDimension;
  /// Exhaustive colon-equivalence over variable subsets up to this support size.
  std::size_t exhaustive_colon_max_vars = 6;
};

/// Number of vertices lying in an edge with at least two vertices.
std::size_t effective_dimension(const Hypergraph& h);
/// Largest matching number over all proper minors and h itself, each with its
/// isolated vertices stripped.
std::size_t beta_star(const Hypergraph& h, const Budget& budget = {});
int default_bound(const MonomialIdeal& ideal, BoundRule rule = BoundRule::HalfDimension, const Budget& budget = {});

/// The maximal ideal of the variables the ideal actually involves. Minors keep
/// the ambient ring, so this is the 𝔪 of the smaller polynomial ring.
MonomialPrime support_maximal(const MonomialIdeal& ideal);

struct PowerAss {
  int power = 1;
  std::vector<MonomialPrime> ass;
  /// Ass minus Min(R/I).
  std::vector<MonomialPrime> embedded;
  /// I^t == I^(t).
  bool symbolic_equal = true;
};

struct NtfVerdict {
  int bound_used = 0;
  std::vector<PowerAss> per_power;
  /// Least t with an embedded prime.
  std::optional<int> onset;
  /// Largest t such that no s <= t has an embedded prime.
  int certified_ntf_up_to = 0;
  /// Set when a budget stopped the scan early; per_power holds what finished.
  std::optional<std::string> resource_error;

  const PowerAss* at(int t) const;
};

/// Ass(R/I^t), embedded primes and I^t == I^(t) for t = 1..bound. Requires a
/// square-free proper ideal.
NtfVerdict ntf_verdict(const MonomialIdeal& ideal, int bound, const Budget& budget = {});

struct MinorsNtf {
  bool all_ntf = true;
  std::optional<MinorSpec> failing_minor;
  /// Onset observed on the failing minor.
  std::optional<int> failing_onset;
  std::size_t minors_checked = 0;
  /// Largest per-minor bound used (each minor uses min(bound, its default bound)).
  int max_bound_used = 0;
  std::optional<std::string> resource_error;

  bool certified() const { return all_ntf && !resource_error; }
};

/// Certifies every distinct proper minor NTF up to min(bound, default_bound(minor)).
/// Stops at the first failure.
MinorsNtf all_proper_minors_ntf(const MonomialIdeal& ideal, int bound, const Budget& budget = {});

enum class CheckStatus { Pass, Fail, NotApplicable, Conditional };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string detail;

  bool passed() const { return status == CheckStatus::Pass; }
};

/// Lazily computes and caches the facts every theorem check needs.
class Analyzer {
public:
  /// Throws UsageError unless `ideal` is square-free and proper.
  explicit Analyzer(MonomialIdeal ideal, AnalysisConfig config = {});

  const MonomialIdeal& ideal() const { return ideal_; }
  const AnalysisConfig& config() const { return config_; }
  const Hypergraph& hypergraph() const { return graph_; }
  MonomialPrime maximal() const { return support_maximal(ideal_); }

  int bound();
  std::size_t alpha0();
  const Matching& matching();
  std::size_t beta1() { return matching().size; }
  /// Generators of the witness matching.
  std::vector<Monomial> matching_generators();
  bool unmixed();
  bool konig() { return alpha0() == beta1(); }
  const PackingResult& packing();
  const std::vector<MonomialPrime>& min_primes();
  const MinorsNtf& minors();
  const NtfVerdict& verdict();

  const MonomialIdeal& power(int t);
  const std::vector<MonomialPrime>& ass_of_power(int t);
  const MonomialIdeal& symbolic(int t);
  bool maximal_in_ass(int t);

private:
  MonomialIdeal ideal_;
  AnalysisConfig config_;
  Hypergraph graph_;
  std::optional<int> bound_;
  std::optional<std::size_t> alpha0_;
  std::optional<Matching> matching_;
  std::optional<bool> unmixed_;
  std::optional<PackingResult> packing_;
  std::optional<std::vector<MonomialPrime>> min_primes_;
  std::optional<MinorsNtf> minors_;
  std::optional<NtfVerdict> verdict_;
  std::map<int, MonomialIdeal> powers_;
  std::map<int, std::vector<MonomialPrime>> ass_;
  std::map<int, MonomialIdeal> symbolic_;
};

/// 𝔪 ∈ Ass(R/I^t) ⟺ 𝔪 ∈ Ass(R/(I^t : ∏Y)). Conditional when the proper
/// minors are not certified NTF.
CheckResult check_colon_equivalence(Analyzer& a, const VarSet& ys, int t);
/// Every t <= bound with 𝔪 ∈ Ass(R/I^t) satisfies t >= β1 + 1.
CheckResult check_onset_lower_bound(Analyzer& a);
/// (I^t : ∏ g_i) == I^(t-β1) over the witness matching, when I is unmixed,
/// König, t > β1 and I^(t-β1) equals its symbolic power.
CheckResult check_powersreduce(Analyzer& a, int t);
/// Unmixed + packing + proper minors NTF ⇒ no onset up to the bound.
CheckResult check_unmixed_packing_ntf(Analyzer& a);
/// A generator g with exactly one variable in every minimal prime.
std::optional<Monomial> find_good_edge(const MonomialIdeal& ideal);
/// A good edge + proper minors NTF ⇒ no onset up to the bound.
CheckResult check_good_edge(Analyzer& a);
/// Proper minors NTF, packing fails, connected without isolated vertices ⇒
/// onset is exactly β1 + 1 and the only embedded prime there is 𝔪.
CheckResult check_embedded_at_beta1_plus_1(Analyzer& a);

struct StabilizationWindow {
  int from = 1;
  int to = 1;
  std::vector<MonomialPrime> primes;
};

struct Reduction {
  VarSet isolated;
  std::size_t components = 0;
  bool connected = true;
  std::string applied;
};

struct AnalysisReport {
  MonomialIdeal ideal;
  std::size_t ring_dim = 0;
  std::size_t effective_dim = 0;
  std::size_t alpha0 = 0;
  Matching matching;
  std::vector<Monomial> matching_generators;
  std::vector<MonomialPrime> min_primes;
  bool unmixed = false;
  bool konig = false;
  PackingResult packing;
  std::optional<Monomial> good_edge;
  MinorsNtf minors;
  Reduction reduction;
  int bound = 0;
  std::string bound_rule;
  NtfVerdict ntf;
  std::vector<CheckResult> checks;
  std::optional<StabilizationWindow> window;
  std::vector<std::string> errors;
};

/// Runs every invariant and theorem check. Resource errors are caught per
/// section and listed in `errors`.
AnalysisReport analyze(const MonomialIdeal& ideal, const AnalysisConfig& config = {});

}  // namespace monideal

#endif  // MONIDEAL_NTF_HPP
