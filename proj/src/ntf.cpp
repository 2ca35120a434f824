#include "monideal/ntf.hpp"

#include <algorithm>
#include <sstream>

#include "monideal/text.hpp"

namespace monideal {

std::size_t effective_dimension(const Hypergraph& h) {
  VarSet s;
  for (const auto& e : h.edges())
    if (e.size() >= 2) s |= e;
  return s.size();
}

std::size_t beta_star(const Hypergraph& h, const Budget& budget) {
  std::size_t best = 0;
  enumerate_minors(
      h,
      [&](const MinorEntry& entry) {
        if (!entry.result.is_proper() || !entry.first_occurrence) return;
        best = std::max(best, beta1(strip_isolated_vertices(entry.result.graph)).size);
      },
      budget.max_minors);
  return best;
}

int default_bound(const MonomialIdeal& ideal, BoundRule rule, const Budget& budget) {
  Hypergraph h = hypergraph_of(ideal);
  if (rule == BoundRule::BetaStarPlusOne) return static_cast<int>(beta_star(h, budget)) + 1;
  // ceil((d+1)/2)
  return static_cast<int>(effective_dimension(h) + 2) / 2;
}

MonomialPrime support_maximal(const MonomialIdeal& ideal) { return MonomialPrime(ideal.ring_dim(), ideal.support()); }

const PowerAss* NtfVerdict::at(int t) const {
  for (const auto& p : per_power)
    if (p.power == t) return &p;
  return nullptr;
}

namespace {

void require_square_free_proper(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) throw UsageError("analysis needs a proper nonzero ideal");
  if (!ideal.is_square_free()) throw UsageError("analysis needs a square-free ideal");
}

std::vector<MonomialPrime> set_difference(const std::vector<MonomialPrime>& a, const std::vector<MonomialPrime>& b) {
  std::vector<MonomialPrime> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_prime(const std::vector<MonomialPrime>& primes, const MonomialPrime& p) {
  return std::binary_search(primes.begin(), primes.end(), p);
}

}  // namespace

NtfVerdict ntf_verdict(const MonomialIdeal& ideal, int bound, const Budget& budget) {
  require_square_free_proper(ideal);
  if (bound < 1) throw UsageError("bound must be at least 1");
  NtfVerdict v;
  v.bound_used = bound;
  const auto min = minimal_primes(ideal);
  try {
    MonomialIdeal pw = MonomialIdeal::unit(ideal.ring_dim());
    for (int t = 1; t <= bound; ++t) {
      if (t > budget.max_power) throw ResourceError("power " + std::to_string(t) + " exceeds the max-power budget");
      pw = product(pw, ideal);
      PowerAss row;
      row.power = t;
      row.ass = associated_primes(pw, budget).primes;
      row.embedded = set_difference(row.ass, min);
      row.symbolic_equal = pw == symbolic_power(ideal, t);
      if (!row.embedded.empty() && !v.onset) v.onset = t;
      v.per_power.push_back(std::move(row));
    }
  } catch (const ResourceError& e) {
    v.resource_error = e.what();
  }
  v.certified_ntf_up_to = v.onset ? *v.onset - 1 : static_cast<int>(v.per_power.size());
  return v;
}

MinorsNtf all_proper_minors_ntf(const MonomialIdeal& ideal, int bound, const Budget& budget) {
  require_square_free_proper(ideal);
  const Hypergraph h = hypergraph_of(ideal);
  MinorsNtf out;
  bool stop = false;
  try {
    enumerate_minors(
        h,
        [&](const MinorEntry& entry) {
          if (stop || !entry.result.is_proper() || !entry.first_occurrence) return;
          if (entry.result.graph.edges() == h.edges()) return;
          MonomialIdeal minor = edge_ideal(entry.result.graph);
          int b = std::min(bound, default_bound(minor));
          out.max_bound_used = std::max(out.max_bound_used, b);
          NtfVerdict v = ntf_verdict(minor, b, budget);
          ++out.minors_checked;
          if (v.onset) {
            out.all_ntf = false;
            out.failing_minor = entry.spec;
            out.failing_onset = v.onset;
            stop = true;
          } else if (v.resource_error) {
            out.resource_error = *v.resource_error;
            stop = true;
          }
        },
        budget.max_minors);
  } catch (const ResourceError& e) {
    out.resource_error = e.what();
  }
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
    case CheckStatus::Conditional: return "conditional";
  }
  return "unknown";
}

Analyzer::Analyzer(MonomialIdeal ideal, AnalysisConfig config)
    : ideal_(std::move(ideal)), config_(std::move(config)) {
  require_square_free_proper(ideal_);
  graph_ = hypergraph_of(ideal_);
}

int Analyzer::bound() {
  if (!bound_) bound_ = config_.bound ? *config_.bound : default_bound(ideal_, config_.rule, config_.budget);
  return *bound_;
}

std::size_t Analyzer::alpha0() {
  if (!alpha0_) alpha0_ = monideal::alpha0(graph_);
  return *alpha0_;
}

const Matching& Analyzer::matching() {
  if (!matching_) matching_ = monideal::beta1(graph_);
  return *matching_;
}

std::vector<Monomial> Analyzer::matching_generators() {
  std::vector<Monomial> out;
  for (std::size_t i : matching().edges)
    out.push_back(Monomial::from_support(ideal_.ring_dim(), graph_.edges()[i]));
  return out;
}

bool Analyzer::unmixed() {
  // Square-free: Ass = Min.
  if (!unmixed_) {
    const auto& m = min_primes();
    unmixed_ = std::all_of(m.begin(), m.end(), [&](const MonomialPrime& p) { return p.height() == m.front().height(); });
  }
  return *unmixed_;
}

const PackingResult& Analyzer::packing() {
  if (!packing_) packing_ = monideal::packing(graph_, config_.budget.max_minors);
  return *packing_;
}

const std::vector<MonomialPrime>& Analyzer::min_primes() {
  if (!min_primes_) min_primes_ = minimal_primes(ideal_);
  return *min_primes_;
}

const MinorsNtf& Analyzer::minors() {
  if (!minors_) minors_ = all_proper_minors_ntf(ideal_, bound(), config_.budget);
  return *minors_;
}

const NtfVerdict& Analyzer::verdict() {
  if (!verdict_) {
    verdict_ = ntf_verdict(ideal_, bound(), config_.budget);
    for (const auto& row : verdict_->per_power) ass_.emplace(row.power, row.ass);
  }
  return *verdict_;
}

const MonomialIdeal& Analyzer::power(int t) {
  if (t > config_.budget.max_power) throw ResourceError("power " + std::to_string(t) + " exceeds the max-power budget");
  auto it = powers_.find(t);
  if (it == powers_.end()) it = powers_.emplace(t, monideal::power(ideal_, t)).first;
  return it->second;
}

const std::vector<MonomialPrime>& Analyzer::ass_of_power(int t) {
  auto it = ass_.find(t);
  if (it == ass_.end()) it = ass_.emplace(t, associated_primes(power(t), config_.budget).primes).first;
  return it->second;
}

const MonomialIdeal& Analyzer::symbolic(int t) {
  auto it = symbolic_.find(t);
  if (it == symbolic_.end()) it = symbolic_.emplace(t, symbolic_power(ideal_, t)).first;
  return it->second;
}

bool Analyzer::maximal_in_ass(int t) { return contains_prime(ass_of_power(t), maximal()); }

namespace {

CheckResult make(std::string name, CheckStatus status, std::string detail) {
  return {std::move(name), status, std::move(detail)};
}

/// The onset results assume every generator has degree at least 2.
std::optional<CheckResult> degree_one_guard(Analyzer& a, const std::string& name) {
  VarSet iso = isolated_vertices(a.hypergraph());
  if (iso.empty()) return std::nullopt;
  return make(name, CheckStatus::NotApplicable,
              "degree-1 generators " + to_string(iso) + "; check the ideal without them");
}

std::string minors_reason(const MinorsNtf& m) {
  if (m.resource_error) return "proper minors not certified: " + *m.resource_error;
  return "a proper minor is not NTF (onset " + std::to_string(m.failing_onset.value_or(0)) + ")";
}

}  // namespace

CheckResult check_colon_equivalence(Analyzer& a, const VarSet& ys, int t) {
  const std::string name = "colon_equivalence";
  if (auto na = degree_one_guard(a, name)) return *na;
  Monomial y = Monomial::from_support(a.ideal().ring_dim(), ys);
  bool lhs = a.maximal_in_ass(t);
  MonomialIdeal q = colon(a.power(t), y);
  bool rhs = contains_prime(associated_primes_or_empty(q, a.config().budget), a.maximal());
  std::ostringstream detail;
  detail << "t=" << t << " Y=" << to_string(ys) << ": m in Ass(I^t) " << (lhs ? "yes" : "no")
         << ", m in Ass(I^t : Y) " << (rhs ? "yes" : "no");
  if (!a.minors().certified()) {
    detail << "; " << (lhs == rhs ? "holds" : "differs") << " but " << minors_reason(a.minors());
    return make(name, CheckStatus::Conditional, detail.str());
  }
  return make(name, lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail, detail.str());
}

CheckResult check_onset_lower_bound(Analyzer& a) {
  const std::string name = "onset_lower_bound";
  if (auto na = degree_one_guard(a, name)) return *na;
  if (!a.minors().certified()) return make(name, CheckStatus::NotApplicable, minors_reason(a.minors()));
  const auto& v = a.verdict();
  const int floor = static_cast<int>(a.beta1()) + 1;
  std::ostringstream detail;
  detail << "beta1+1=" << floor;
  bool ok = true;
  bool any = false;
  for (const auto& row : v.per_power) {
    if (!contains_prime(row.ass, a.maximal())) continue;
    any = true;
    detail << "; m in Ass at t=" << row.power;
    if (row.power < floor) ok = false;
  }
  if (!any) detail << "; m never associated up to t=" << v.per_power.size() << " (vacuous)";
  return make(name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail.str());
}

CheckResult check_powersreduce(Analyzer& a, int t) {
  const std::string name = "powers_reduce";
  const int b = static_cast<int>(a.beta1());
  if (!a.unmixed()) return make(name, CheckStatus::NotApplicable, "not unmixed");
  if (!a.konig()) return make(name, CheckStatus::NotApplicable, "Konig property fails");
  if (t <= b) return make(name, CheckStatus::NotApplicable, "t=" + std::to_string(t) + " <= beta1");
  if (a.power(t - b) != a.symbolic(t - b))
    return make(name, CheckStatus::NotApplicable, "I^" + std::to_string(t - b) + " differs from its symbolic power");
  Monomial m = Monomial::unit(a.ideal().ring_dim());
  for (const auto& g : a.matching_generators()) m = mul(m, g);
  MonomialIdeal lhs = colon(a.power(t), m);
  bool ok = lhs == a.power(t - b);
  return make(name, ok ? CheckStatus::Pass : CheckStatus::Fail,
              "t=" + std::to_string(t) + ": (I^t : " + to_string(m) + ") " + (ok ? "==" : "!=") + " I^" +
                  std::to_string(t - b));
}

CheckResult check_unmixed_packing_ntf(Analyzer& a) {
  const std::string name = "unmixed_packing_ntf";
  if (!a.unmixed()) return make(name, CheckStatus::NotApplicable, "not unmixed");
  if (!a.packing().holds) return make(name, CheckStatus::NotApplicable, "packing property fails");
  if (!a.minors().certified()) return make(name, CheckStatus::NotApplicable, minors_reason(a.minors()));
  const auto& v = a.verdict();
  if (v.onset) return make(name, CheckStatus::Fail, "onset at t=" + std::to_string(*v.onset));
  return make(name, CheckStatus::Pass, "no embedded primes up to t=" + std::to_string(v.per_power.size()));
}

std::optional<Monomial> find_good_edge(const MonomialIdeal& ideal) {
  require_square_free_proper(ideal);
  const auto min = minimal_primes(ideal);
  for (const auto& g : ideal.generators()) {
    VarSet s = g.support();
    bool good = std::all_of(min.begin(), min.end(), [&](const MonomialPrime& p) { return (s & p.vars()).size() == 1; });
    if (good) return g;
  }
  return std::nullopt;
}

CheckResult check_good_edge(Analyzer& a) {
  const std::string name = "good_edge";
  auto g = find_good_edge(a.ideal());
  if (!g) return make(name, CheckStatus::NotApplicable, "no generator meets every minimal prime exactly once");
  if (!a.minors().certified()) return make(name, CheckStatus::NotApplicable, minors_reason(a.minors()));
  const auto& v = a.verdict();
  if (v.onset) return make(name, CheckStatus::Fail, "good edge " + to_string(*g) + " but onset at t=" + std::to_string(*v.onset));
  return make(name, CheckStatus::Pass,
              "good edge " + to_string(*g) + "; no embedded primes up to t=" + std::to_string(v.per_power.size()));
}

CheckResult check_embedded_at_beta1_plus_1(Analyzer& a) {
  const std::string name = "embedded_at_beta1_plus_1";
  const auto& h = a.hypergraph();
  if (auto na = degree_one_guard(a, name)) return *na;
  if (connected_components(h).size() != 1) return make(name, CheckStatus::NotApplicable, "not connected");
  if (a.packing().holds) return make(name, CheckStatus::NotApplicable, "packing property holds");
  if (!a.minors().certified()) return make(name, CheckStatus::NotApplicable, minors_reason(a.minors()));
  const int target = static_cast<int>(a.beta1()) + 1;
  const auto& v = a.verdict();
  if (static_cast<int>(v.per_power.size()) < target)
    return make(name, CheckStatus::NotApplicable,
                "bound " + std::to_string(v.per_power.size()) + " below beta1+1=" + std::to_string(target));
  std::ostringstream detail;
  detail << "beta1+1=" << target << ", onset=";
  if (v.onset) detail << *v.onset; else detail << "none";
  bool ok = v.onset == target;
  if (ok) {
    const auto& emb = v.at(target)->embedded;
    ok = emb.size() == 1 && emb.front() == a.maximal();
    detail << ", embedded at onset " << (ok ? "= {m}" : "!= {m}");
  }
  return make(name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail.str());
}

namespace {

CheckResult colon_equivalence_sweep(Analyzer& a) {
  if (auto na = degree_one_guard(a, "colon_equivalence")) return *na;
  const VarSet support = a.ideal().support();
  const auto vars = support.members();
  std::vector<VarSet> subsets;
  if (vars.size() <= a.config().exhaustive_colon_max_vars) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << vars.size()); ++mask) {
      VarSet s;
      for (std::size_t i = 0; i < vars.size(); ++i)
        if ((mask >> i) & 1U) s.insert(vars[i]);
      subsets.push_back(s);
    }
  } else {
    subsets.push_back(support);
  }
  std::size_t evaluated = 0;
  std::size_t failures = 0;
  std::string first_failure;
  for (int t = 1; t <= static_cast<int>(a.verdict().per_power.size()); ++t) {
    for (const auto& ys : subsets) {
      Monomial y = Monomial::from_support(a.ideal().ring_dim(), ys);
      bool lhs = a.maximal_in_ass(t);
      bool rhs = contains_prime(associated_primes_or_empty(colon(a.power(t), y), a.config().budget), a.maximal());
      ++evaluated;
      if (lhs != rhs && failures++ == 0)
        first_failure = "t=" + std::to_string(t) + " Y=" + to_string(ys);
    }
  }
  std::string detail = std::to_string(evaluated) + " (Y, t) pairs, " + std::to_string(failures) + " mismatches";
  if (failures != 0) detail += " (first " + first_failure + ")";
  if (!a.minors().certified()) return make("colon_equivalence", CheckStatus::Conditional, detail + "; " + minors_reason(a.minors()));
  return make("colon_equivalence", failures == 0 ? CheckStatus::Pass : CheckStatus::Fail, detail);
}

CheckResult powersreduce_sweep(Analyzer& a) {
  const int n = static_cast<int>(a.verdict().per_power.size());
  std::vector<CheckResult> results;
  for (int t = static_cast<int>(a.beta1()) + 1; t <= n; ++t) results.push_back(check_powersreduce(a, t));
  if (results.empty()) return make("powers_reduce", CheckStatus::NotApplicable, "no t in (beta1, bound]");
  bool any_applicable = false;
  for (const auto& r : results) {
    if (r.status == CheckStatus::Fail) return r;
    any_applicable = any_applicable || r.status == CheckStatus::Pass;
  }
  if (!any_applicable) return results.front();
  std::string detail;
  for (const auto& r : results)
    if (r.status == CheckStatus::Pass) detail += (detail.empty() ? "" : "; ") + r.detail;
  return make("powers_reduce", CheckStatus::Pass, detail);
}

}  // namespace

AnalysisReport analyze(const MonomialIdeal& ideal, const AnalysisConfig& config) {
  Analyzer a(ideal, config);
  AnalysisReport r;
  r.ideal = ideal;
  r.ring_dim = ideal.ring_dim();
  r.effective_dim = effective_dimension(a.hypergraph());
  r.bound_rule = config.bound ? "fixed" : (config.rule == BoundRule::HalfDimension ? "ceil((d+1)/2)" : "beta*+1");

  auto guarded = [&](const char* section, auto&& body) {
    try {
      body();
    } catch (const ResourceError& e) {
      r.errors.push_back(std::string(section) + ": " + e.what());
    }
  };

  guarded("invariants", [&] {
    r.alpha0 = a.alpha0();
    r.matching = a.matching();
    r.matching_generators = a.matching_generators();
    r.min_primes = a.min_primes();
    r.unmixed = a.unmixed();
    r.konig = a.konig();
    r.good_edge = find_good_edge(ideal);
  });
  guarded("packing", [&] { r.packing = a.packing(); });

  const auto& h = a.hypergraph();
  r.reduction.isolated = isolated_vertices(h);
  r.reduction.components = connected_components(h).size();
  r.reduction.connected = r.reduction.components == 1;
  if (!r.reduction.isolated.empty())
    r.reduction.applied = "isolated vertices " + to_string(r.reduction.isolated) + " split off";
  if (r.reduction.components > 1)
    r.reduction.applied += std::string(r.reduction.applied.empty() ? "" : "; ") + std::to_string(r.reduction.components) +
                           " components analyzed jointly";
  // Onset checks need generators of degree >= 2, so they see the ideal with
  // its degree-1 generators removed. Those variables only shift every prime.
  const Hypergraph stripped = strip_isolated_vertices(h);
  std::optional<Analyzer> reduced;
  if (!r.reduction.isolated.empty() && stripped.edge_count() != 0) {
    reduced.emplace(edge_ideal(stripped), config);
    r.reduction.applied += "; onset checks run without the degree-1 generators";
  }
  Analyzer& onset_target = reduced ? *reduced : a;
  if (r.reduction.applied.empty()) r.reduction.applied = "none";

  guarded("bound", [&] { r.bound = a.bound(); });
  if (r.bound == 0) return r;
  guarded("ntf", [&] { r.ntf = a.verdict(); });
  if (r.ntf.resource_error) r.errors.push_back("ntf: " + *r.ntf.resource_error);
  guarded("minors", [&] { r.minors = a.minors(); });
  if (r.minors.resource_error) r.errors.push_back("minors: " + *r.minors.resource_error);

  guarded("checks", [&] {
    r.checks.push_back(check_onset_lower_bound(onset_target));
    r.checks.push_back(colon_equivalence_sweep(onset_target));
    r.checks.push_back(powersreduce_sweep(a));
    r.checks.push_back(check_unmixed_packing_ntf(a));
    r.checks.push_back(check_good_edge(a));
    r.checks.push_back(check_embedded_at_beta1_plus_1(onset_target));
  });

  const auto& rows = r.ntf.per_power;
  if (!rows.empty()) {
    StabilizationWindow w;
    w.to = rows.back().power;
    w.from = w.to;
    w.primes = rows.back().ass;
    for (std::size_t i = rows.size() - 1; i-- > 0 && rows[i].ass == w.primes;) w.from = rows[i].power;
    r.window = w;
  }
  return r;
}

}  // namespace monideal
