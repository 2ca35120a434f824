#include "monideal/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace monideal {

namespace {

void canonicalize(std::vector<VarSet>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n_vertices, std::vector<VarSet> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.empty()) throw UsageError("hypergraph edges must be non-empty");
    if (e.extent() > n_) throw UsageError("edge vertex outside [0, " + std::to_string(n_) + ")");
  }
  canonicalize(edges_);
  // Sorted by size: a containing edge always comes after the contained one.
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j)
      if (edges_[i].subset_of(edges_[j])) throw UsageError("hypergraph is not simple: an edge contains another");
}

Hypergraph Hypergraph::from_edges_minimalized(std::size_t n_vertices, std::vector<VarSet> edges) {
  canonicalize(edges);
  std::vector<VarSet> kept;
  for (const auto& e : edges)
    if (std::none_of(kept.begin(), kept.end(), [&](const VarSet& k) { return k.subset_of(e); }))
      kept.push_back(e);
  return Hypergraph(n_vertices, std::move(kept));
}

VarSet Hypergraph::covered_vertices() const {
  VarSet s;
  for (const auto& e : edges_) s |= e;
  return s;
}

MonomialIdeal edge_ideal(const Hypergraph& h) {
  std::vector<Monomial> gens;
  gens.reserve(h.edge_count());
  for (const auto& e : h.edges()) gens.push_back(Monomial::from_support(h.n_vertices(), e));
  return MonomialIdeal(h.n_vertices(), std::move(gens));
}

Hypergraph hypergraph_of(const MonomialIdeal& ideal) {
  if (!ideal.is_square_free()) throw UsageError("hypergraph_of requires a square-free ideal");
  if (ideal.is_unit()) throw UsageError("the unit ideal has no hypergraph (empty edge)");
  std::vector<VarSet> edges;
  edges.reserve(ideal.size());
  for (const auto& g : ideal.generators()) edges.push_back(g.support());
  return Hypergraph(ideal.ring_dim(), std::move(edges));
}

MinorResult apply_minor(const Hypergraph& h, const MinorSpec& spec) {
  if (spec.deleted.intersects(spec.contracted)) throw UsageError("a vertex cannot be both deleted and contracted");
  if (spec.deleted.extent() > h.n_vertices() || spec.contracted.extent() > h.n_vertices())
    throw UsageError("minor spec names a vertex outside the hypergraph");
  std::vector<VarSet> edges;
  for (const auto& e : h.edges()) {
    if (e.intersects(spec.deleted)) continue;
    VarSet shrunk = e - spec.contracted;
    if (shrunk.empty()) return MinorResult::unit();
    edges.push_back(shrunk);
  }
  if (edges.empty()) return MinorResult::zero();
  return {MinorResult::Kind::Proper, Hypergraph::from_edges_minimalized(h.n_vertices(), std::move(edges))};
}

void enumerate_minors(const Hypergraph& h, const std::function<void(const MinorEntry&)>& visit,
                      std::size_t max_specs) {
  const std::size_t n = h.n_vertices();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > max_specs / 3 + 1) throw ResourceError("minor enumeration exceeds budget of " + std::to_string(max_specs));
    total *= 3;
  }
  if (total > max_specs) throw ResourceError("minor enumeration exceeds budget of " + std::to_string(max_specs));

  std::set<std::vector<VarSet>> seen;
  std::vector<unsigned char> digits(n, 0);
  for (std::size_t code = 0; code < total; ++code) {
    MinorEntry entry;
    for (std::size_t v = 0; v < n; ++v) {
      if (digits[v] == 1) entry.spec.deleted.insert(v);
      if (digits[v] == 2) entry.spec.contracted.insert(v);
    }
    entry.result = apply_minor(h, entry.spec);
    if (entry.result.is_proper()) entry.first_occurrence = seen.insert(entry.result.graph.edges()).second;
    visit(entry);
    for (std::size_t v = 0; v < n; ++v) {
      if (++digits[v] < 3) break;
      digits[v] = 0;
    }
  }
}

std::vector<MinorEntry> enumerate_minors(const Hypergraph& h, std::size_t max_specs) {
  std::vector<MinorEntry> out;
  enumerate_minors(h, [&](const MinorEntry& e) { out.push_back(e); }, max_specs);
  return out;
}

bool is_vertex_cover(const Hypergraph& h, const VarSet& s) {
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const VarSet& e) { return e.intersects(s); });
}

namespace {

/// Every member of `chosen` still owns an edge nobody else in `chosen` hits.
bool all_members_private(const std::vector<VarSet>& edges, const VarSet& chosen) {
  bool ok = true;
  chosen.for_each([&](VarId v) {
    if (!ok) return;
    VarSet others = chosen;
    others.erase(v);
    ok = std::any_of(edges.begin(), edges.end(),
                     [&](const VarSet& e) { return e.contains(v) && !e.intersects(others); });
  });
  return ok;
}

class TransversalSearch {
public:
  explicit TransversalSearch(const std::vector<VarSet>& edges) : edges_(edges) {}

  void run(const VarSet& chosen, const VarSet& forbidden) {
    const VarSet* pick = nullptr;
    std::size_t best_free = VarSet::kCapacity + 1;
    for (const auto& e : edges_) {
      if (e.intersects(chosen)) continue;
      std::size_t free = (e - forbidden).size();
      if (free == 0) return;
      if (free < best_free) {
        best_free = free;
        pick = &e;
      }
    }
    if (pick == nullptr) {
      found.push_back(chosen);
      return;
    }
    VarSet banned = forbidden;
    for (VarId v : (*pick - forbidden).members()) {
      VarSet next = chosen;
      next.insert(v);
      if (all_members_private(edges_, next)) run(next, banned);
      banned.insert(v);
    }
  }

  std::vector<VarSet> found;

private:
  const std::vector<VarSet>& edges_;
};

}  // namespace

bool is_minimal_vertex_cover(const Hypergraph& h, const VarSet& s) {
  return is_vertex_cover(h, s) && all_members_private(h.edges(), s);
}

std::vector<VarSet> minimal_transversals(const Hypergraph& h) {
  TransversalSearch search(h.edges());
  search.run(VarSet{}, VarSet{});
  std::sort(search.found.begin(), search.found.end());
  return std::move(search.found);
}

namespace {

/// Greedy disjoint uncovered edges: a lower bound on the covers still needed.
std::size_t disjoint_uncovered(const std::vector<VarSet>& edges, const VarSet& chosen) {
  VarSet used;
  std::size_t count = 0;
  for (const auto& e : edges) {
    if (e.intersects(chosen) || e.intersects(used)) continue;
    used |= e;
    ++count;
  }
  return count;
}

void min_cover(const std::vector<VarSet>& edges, const VarSet& chosen, const VarSet& forbidden,
               std::size_t& best) {
  if (chosen.size() + disjoint_uncovered(edges, chosen) >= best) return;
  const VarSet* pick = nullptr;
  std::size_t best_free = VarSet::kCapacity + 1;
  for (const auto& e : edges) {
    if (e.intersects(chosen)) continue;
    std::size_t free = (e - forbidden).size();
    if (free == 0) return;
    if (free < best_free) {
      best_free = free;
      pick = &e;
    }
  }
  if (pick == nullptr) {
    best = chosen.size();
    return;
  }
  VarSet banned = forbidden;
  for (VarId v : (*pick - forbidden).members()) {
    VarSet next = chosen;
    next.insert(v);
    min_cover(edges, next, banned, best);
    banned.insert(v);
  }
}

void max_matching(const std::vector<VarSet>& edges, std::size_t from, const VarSet& used,
                  std::vector<std::size_t>& current, std::vector<std::size_t>& best) {
  if (current.size() > best.size()) best = current;
  std::size_t remaining = 0;
  for (std::size_t i = from; i < edges.size(); ++i)
    if (!edges[i].intersects(used)) ++remaining;
  if (current.size() + remaining <= best.size()) return;
  for (std::size_t i = from; i < edges.size(); ++i) {
    if (edges[i].intersects(used)) continue;
    current.push_back(i);
    max_matching(edges, i + 1, used | edges[i], current, best);
    current.pop_back();
  }
}

}  // namespace

std::size_t alpha0(const Hypergraph& h) {
  // Greedy upper bound: one vertex per uncovered edge.
  VarSet greedy;
  for (const auto& e : h.edges())
    if (!e.intersects(greedy)) greedy.insert(e.first());
  std::size_t best = greedy.size() + 1;
  min_cover(h.edges(), VarSet{}, VarSet{}, best);
  return best;
}

Matching beta1(const Hypergraph& h) {
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  max_matching(h.edges(), 0, VarSet{}, current, best);
  return {best.size(), best};
}

bool konig(const Hypergraph& h) { return alpha0(h) == beta1(h).size; }

PackingResult packing(const Hypergraph& h, std::size_t max_specs) {
  PackingResult result;
  enumerate_minors(
      h,
      [&](const MinorEntry& entry) {
        if (!result.holds || !entry.result.is_proper() || !entry.first_occurrence) return;
        if (!konig(entry.result.graph)) {
          result.holds = false;
          result.failing_minor = entry.spec;
        }
      },
      max_specs);
  return result;
}

std::vector<Hypergraph> connected_components(const Hypergraph& h) {
  const auto& edges = h.edges();
  std::vector<std::size_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges[i].intersects(edges[j])) parent[find(i)] = find(j);

  std::vector<std::vector<VarSet>> groups;
  std::vector<std::size_t> group_of(edges.size(), SIZE_MAX);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::size_t root = find(i);
    if (group_of[root] == SIZE_MAX) {
      group_of[root] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[root]].push_back(edges[i]);
  }
  std::vector<Hypergraph> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.emplace_back(h.n_vertices(), std::move(g));
  return out;
}

VarSet isolated_vertices(const Hypergraph& h) {
  VarSet s;
  for (const auto& e : h.edges())
    if (e.size() == 1) s |= e;
  return s;
}

Hypergraph strip_isolated_vertices(const Hypergraph& h) {
  std::vector<VarSet> edges;
  for (const auto& e : h.edges())
    if (e.size() > 1) edges.push_back(e);
  return Hypergraph(h.n_vertices(), std::move(edges));
}

}  // namespace monideal
