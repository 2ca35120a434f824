#ifndef MONIDEAL_SEARCH_HPP
#define MONIDEAL_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monideal/errors.hpp"
#include "monideal/hypergraph.hpp"
#include "monideal/ntf.hpp"

namespace monideal {

enum class SearchPredicate { MinimallyNonPacking, OnsetEqualsBeta1PlusOne, NtfViolation };
enum class Dedup { None, PermutationCanonical };

std::string to_string(SearchPredicate p);
/// Accepts the names printed by to_string; UsageError otherwise.
SearchPredicate parse_search_predicate(const std::string& name);

struct SearchConfig {
  std::size_t d_min = 1;
  std::size_t d_max = 5;
  std::size_t edge_size_min = 2;
  std::size_t edge_size_max = 2;
  /// 0 means no limit.
  std::size_t max_edges = 0;
  Dedup dedup = Dedup::PermutationCanonical;
  SearchPredicate predicate = SearchPredicate::MinimallyNonPacking;
  /// Skip unmixed candidates (a minimal counterexample is never unmixed).
  bool discard_unmixed = false;
  Budget budget;
  /// Edge subsets examined before stopping with a resume token; 0 means no limit.
  std::size_t max_candidates = 0;
  /// Token from an earlier stopped run.
  std::optional<std::string> resume;
};

struct SearchHit {
  Hypergraph graph;
  std::size_t alpha0 = 0;
  std::size_t beta1 = 0;
  bool unmixed = false;
  std::optional<Monomial> good_edge;
  int bound = 0;
  std::optional<int> onset;
  /// Outcome of check_embedded_at_beta1_plus_1 on the candidate.
  CheckStatus onset_check = CheckStatus::NotApplicable;
  std::string onset_detail;
};

struct SearchOutcome {
  std::vector<SearchHit> hits;
  std::size_t candidates = 0;
  bool complete = true;
  /// Where to continue, set when a budget stopped the run.
  std::optional<std::string> resume_token;
  std::optional<std::string> stop_reason;
};

/// Vertex relabeling that minimizes the sorted edge list, by brute force over
/// all n! permutations. Throws ResourceError for n > 8.
Hypergraph canonical_form(const Hypergraph& h);
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

/// True when h fails König but every proper minor satisfies it.
bool is_minimally_non_packing(const Hypergraph& h, std::size_t max_specs = std::size_t{1} << 16);

/// Enumerates simple hypergraphs on exactly d vertices (every vertex covered),
/// d_min <= d <= d_max, in a fixed order, and reports those matching the
/// predicate. `on_hit` sees each hit as it is found.
SearchOutcome search(const SearchConfig& config, const std::function<void(const SearchHit&)>& on_hit = {});

}  // namespace monideal

#endif  // MONIDEAL_SEARCH_HPP
