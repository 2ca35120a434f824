#ifndef MONIDEAL_HYPERGRAPH_HPP
#define MONIDEAL_HYPERGRAPH_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/var_set.hpp"

namespace monideal {

/// Simple hypergraph (clutter): non-empty, pairwise incomparable edges over
/// vertices [0, n). A singleton edge {x} marks x as an isolated vertex.
class Hypergraph {
public:
  Hypergraph() = default;
  /// Throws UsageError on an empty edge, an out-of-range vertex, or an edge
  /// strictly containing another. Duplicate edges are merged.
  Hypergraph(std::size_t n_vertices, std::vector<VarSet> edges);

  /// Drops every edge that strictly contains another instead of throwing.
  static Hypergraph from_edges_minimalized(std::size_t n_vertices, std::vector<VarSet> edges);

  std::size_t n_vertices() const { return n_; }
  const std::vector<VarSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Vertices that lie in some edge.
  VarSet covered_vertices() const;

  bool operator==(const Hypergraph&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<VarSet> edges_;
};

struct MinorSpec {
  VarSet deleted;
  VarSet contracted;

  bool is_identity() const { return deleted.empty() && contracted.empty(); }
  bool operator==(const MinorSpec&) const = default;
};

/// Outcome of a deletion/contraction sequence. Proper minors keep the
/// original vertex indexing.
struct MinorResult {
  enum class Kind { Proper, ZeroIdeal, UnitIdeal };
  Kind kind = Kind::Proper;
  Hypergraph graph;

  static MinorResult zero() { return {Kind::ZeroIdeal, {}}; }
  static MinorResult unit() { return {Kind::UnitIdeal, {}}; }
  bool is_proper() const { return kind == Kind::Proper; }
  bool operator==(const MinorResult&) const = default;
};

MonomialIdeal edge_ideal(const Hypergraph& h);
/// Throws UsageError unless the ideal is square-free and proper.
Hypergraph hypergraph_of(const MonomialIdeal& ideal);

/// Deletes first (drop incident edges), then contracts (shrink edges and
/// minimalize). An emptied edge gives the unit ideal, an empty edge set the
/// zero ideal.
MinorResult apply_minor(const Hypergraph& h, const MinorSpec& spec);

struct MinorEntry {
  MinorSpec spec;
  MinorResult result;
  /// False when an earlier spec produced the same proper minor.
  bool first_occurrence = true;
};

/// Visits all 3^n keep/delete/contract assignments in base-3 counting order
/// (vertex 0 fastest; digit 0 keep, 1 delete, 2 contract). Throws
/// ResourceError when 3^n exceeds `max_specs`.
void enumerate_minors(const Hypergraph& h, const std::function<void(const MinorEntry&)>& visit,
                      std::size_t max_specs = std::size_t{1} << 16);
std::vector<MinorEntry> enumerate_minors(const Hypergraph& h, std::size_t max_specs = std::size_t{1} << 16);

/// All inclusion-minimal vertex covers, in canonical order.
std::vector<VarSet> minimal_transversals(const Hypergraph& h);
bool is_vertex_cover(const Hypergraph& h, const VarSet& s);
bool is_minimal_vertex_cover(const Hypergraph& h, const VarSet& s);

/// Minimum vertex cover size.
std::size_t alpha0(const Hypergraph& h);

struct Matching {
  std::size_t size = 0;
  /// Indices into h.edges(), ascending.
  std::vector<std::size_t> edges;
};

/// Maximum matching (pairwise disjoint edges) with a witness.
Matching beta1(const Hypergraph& h);

bool konig(const Hypergraph& h);

struct PackingResult {
  bool holds = true;
  std::optional<MinorSpec> failing_minor;
};

/// König for h and for every proper minor. The witness is the first failing
/// spec in enumeration order (the identity when h itself fails).
PackingResult packing(const Hypergraph& h, std::size_t max_specs = std::size_t{1} << 16);

std::vector<Hypergraph> connected_components(const Hypergraph& h);
/// Vertices whose edge is a singleton.
VarSet isolated_vertices(const Hypergraph& h);

/// Drops the singleton edges, i.e. the isolated-vertex reduction.
Hypergraph strip_isolated_vertices(const Hypergraph& h);

}  // namespace monideal

#endif  // MONIDEAL_HYPERGRAPH_HPP
