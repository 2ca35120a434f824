#include "monideal/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace monideal {

std::string to_string(SearchPredicate p) {
  switch (p) {
    case SearchPredicate::MinimallyNonPacking: return "minimally-non-packing";
    case SearchPredicate::OnsetEqualsBeta1PlusOne: return "onset-equals-beta1-plus-1";
    case SearchPredicate::NtfViolation: return "ntf-violation";
  }
  return "unknown";
}

SearchPredicate parse_search_predicate(const std::string& name) {
  for (auto p : {SearchPredicate::MinimallyNonPacking, SearchPredicate::OnsetEqualsBeta1PlusOne,
                 SearchPredicate::NtfViolation})
    if (to_string(p) == name) return p;
  throw UsageError("unknown search predicate '" + name + "'");
}

namespace {

using Masks = std::vector<std::uint32_t>;

constexpr std::size_t kMaxCanonicalVertices = 8;
constexpr std::size_t kMaxCandidateEdges = 24;

Masks to_masks(const Hypergraph& h) {
  Masks out;
  for (const auto& e : h.edges()) out.push_back(static_cast<std::uint32_t>(e.words()[0]));
  std::sort(out.begin(), out.end());
  return out;
}

Masks canonical_masks(const Masks& edges, std::size_t n) {
  if (n > kMaxCanonicalVertices)
    throw ResourceError("canonical form is limited to " + std::to_string(kMaxCanonicalVertices) + " vertices");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Masks best = edges;
  Masks cur(edges.size());
  do {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::uint32_t m = 0;
      for (std::size_t v = 0; v < n; ++v)
        if ((edges[i] >> v) & 1U) m |= std::uint32_t{1} << perm[v];
      cur[i] = m;
    }
    std::sort(cur.begin(), cur.end());
    if (cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Hypergraph from_masks(std::size_t n, const Masks& masks) {
  std::vector<VarSet> edges;
  for (auto m : masks) {
    VarSet s;
    for (std::size_t v = 0; v < n; ++v)
      if ((m >> v) & 1U) s.insert(v);
    edges.push_back(s);
  }
  return Hypergraph(n, std::move(edges));
}

struct EarlyExit {};

struct Position {
  std::size_t d = 0;
  std::uint64_t mask = 0;
};

std::string token(Position p) { return "d=" + std::to_string(p.d) + ";mask=" + std::to_string(p.mask); }

Position parse_token(const std::string& text) {
  Position p;
  char sep = 0;
  std::istringstream in(text);
  std::string d_key(2, ' ');
  std::string mask_key(5, ' ');
  in.read(d_key.data(), 2);
  in >> p.d >> sep;
  in.read(mask_key.data(), 5);
  in >> p.mask;
  if (!in || d_key != "d=" || sep != ';' || mask_key != "mask=" || in.peek() != std::char_traits<char>::eof())
    throw UsageError("malformed resume token '" + text + "'");
  return p;
}

}  // namespace

Hypergraph canonical_form(const Hypergraph& h) {
  return from_masks(h.n_vertices(), canonical_masks(to_masks(h), h.n_vertices()));
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n_vertices() != b.n_vertices() || a.edge_count() != b.edge_count()) return false;
  return canonical_masks(to_masks(a), a.n_vertices()) == canonical_masks(to_masks(b), b.n_vertices());
}

bool is_minimally_non_packing(const Hypergraph& h, std::size_t max_specs) {
  if (konig(h)) return false;
  try {
    enumerate_minors(
        h,
        [&](const MinorEntry& e) {
          if (!e.result.is_proper() || !e.first_occurrence || e.result.graph.edges() == h.edges()) return;
          if (!konig(e.result.graph)) throw EarlyExit{};
        },
        max_specs);
  } catch (const EarlyExit&) {
    return false;
  }
  return true;
}

SearchOutcome search(const SearchConfig& config, const std::function<void(const SearchHit&)>& on_hit) {
  if (config.d_min < 1 || config.d_min > config.d_max) throw UsageError("need 1 <= d_min <= d_max");
  if (config.edge_size_min < 1 || config.edge_size_min > config.edge_size_max)
    throw UsageError("need 1 <= edge_size_min <= edge_size_max");
  if (config.dedup == Dedup::PermutationCanonical && config.d_max > kMaxCanonicalVertices)
    throw UsageError("dedup supports d_max <= " + std::to_string(kMaxCanonicalVertices));
  if (config.d_max > 16) throw UsageError("search supports d_max <= 16");

  Position start{config.d_min, 0};
  if (config.resume) start = parse_token(*config.resume);
  if (start.d < config.d_min || start.d > config.d_max) throw UsageError("resume token outside the d range");

  SearchOutcome out;
  AnalysisConfig analysis;
  analysis.budget = config.budget;

  for (std::size_t d = start.d; d <= config.d_max; ++d) {
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << d); ++s) {
      auto k = static_cast<std::size_t>(std::popcount(s));
      if (k >= config.edge_size_min && k <= config.edge_size_max) candidates.push_back(s);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    if (candidates.size() > kMaxCandidateEdges)
      throw ResourceError(std::to_string(candidates.size()) + " candidate edges at d=" + std::to_string(d) +
                          " exceeds the limit of " + std::to_string(kMaxCandidateEdges));
    const std::uint32_t full = (std::uint32_t{1} << d) - 1;
    const std::uint64_t end = std::uint64_t{1} << candidates.size();

    for (std::uint64_t mask = d == start.d ? std::max<std::uint64_t>(start.mask, 1) : 1; mask < end; ++mask) {
      if (config.max_candidates != 0 && out.candidates >= config.max_candidates) {
        out.complete = false;
        out.resume_token = token({d, mask});
        out.stop_reason = "candidate budget of " + std::to_string(config.max_candidates) + " reached";
        return out;
      }
      ++out.candidates;
      auto n_edges = static_cast<std::size_t>(std::popcount(mask));
      if (config.max_edges != 0 && n_edges > config.max_edges) continue;

      Masks edges;
      std::uint32_t covered = 0;
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if ((mask >> i) & 1U) {
          edges.push_back(candidates[i]);
          covered |= candidates[i];
        }
      if (covered != full) continue;
      bool simple = true;
      for (std::size_t i = 0; i < edges.size() && simple; ++i)
        for (std::size_t j = 0; j < edges.size() && simple; ++j)
          if (i != j && (edges[i] & edges[j]) == edges[i]) simple = false;
      if (!simple) continue;
      std::sort(edges.begin(), edges.end());
      if (config.dedup == Dedup::PermutationCanonical && canonical_masks(edges, d) != edges) continue;

      try {
        Hypergraph h = from_masks(d, edges);
        Analyzer a(edge_ideal(h), analysis);
        bool match = false;
        std::optional<CheckResult> onset_check;
        switch (config.predicate) {
          case SearchPredicate::MinimallyNonPacking:
            match = is_minimally_non_packing(h, config.budget.max_minors);
            break;
          case SearchPredicate::OnsetEqualsBeta1PlusOne:
            onset_check = check_embedded_at_beta1_plus_1(a);
            match = onset_check->passed();
            break;
          case SearchPredicate::NtfViolation:
            match = a.verdict().onset.has_value();
            break;
        }
        if (!match) continue;
        if (config.discard_unmixed && a.unmixed()) continue;
        if (!onset_check) onset_check = check_embedded_at_beta1_plus_1(a);
        SearchHit hit;
        hit.graph = h;
        hit.alpha0 = a.alpha0();
        hit.beta1 = a.beta1();
        hit.unmixed = a.unmixed();
        hit.good_edge = find_good_edge(a.ideal());
        hit.bound = a.bound();
        hit.onset = a.verdict().onset;
        hit.onset_check = onset_check->status;
        hit.onset_detail = onset_check->detail;
        if (on_hit) on_hit(hit);
        out.hits.push_back(std::move(hit));
      } catch (const ResourceError& e) {
        out.complete = false;
        out.resume_token = token({d, mask});
        out.stop_reason = e.what();
        return out;
      }
    }
  }
  return out;
}

}  // namespace monideal
