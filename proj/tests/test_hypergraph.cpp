#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace testing;

namespace {

Hypergraph graph_of(const std::string& text) { return *parse(text).hypergraph; }

std::vector<Hypergraph> square_free_graphs(std::size_t n = 120) {
  std::vector<Hypergraph> out;
  for (const auto& I : square_free_corpus(n)) out.push_back(hypergraph_of(I));
  return out;
}

}  // namespace

TEST_CASE("edge ideal round trip") {
  Hypergraph tri = graph_of(kTriangle);
  CHECK(edge_ideal(tri) == ideal_of(kTriangle));
  Hypergraph c53 = graph_of("x1 x2 x3 / x2 x3 x4 / x3 x4 x5 / x4 x5 x1 / x5 x1 x2");
  CHECK(edge_ideal(c53) == ideal_of(kFiveCycleDeg3));
  for (const auto& h : square_free_graphs()) CHECK(hypergraph_of(edge_ideal(h)) == h);
  CHECK_THROWS_AS(hypergraph_of(MonomialIdeal(2, {mono({2, 0})})), UsageError);
  CHECK_THROWS_AS(hypergraph_of(MonomialIdeal::unit(2)), UsageError);
}

TEST_CASE("constructor rejects bad edge families") {
  CHECK_THROWS_AS(Hypergraph(2, {VarSet{}}), UsageError);
  CHECK_THROWS_AS(Hypergraph(2, {VarSet{0, 2}}), UsageError);
  CHECK_THROWS_AS(Hypergraph(3, {VarSet{0, 1}, VarSet{0, 1, 2}}), UsageError);
  CHECK(Hypergraph(2, {VarSet{0, 1}, VarSet{0, 1}}).edge_count() == 1);
  CHECK(Hypergraph::from_edges_minimalized(3, {VarSet{0, 1}, VarSet{0, 1, 2}}).edge_count() == 1);
}

TEST_CASE("minors") {
  Hypergraph c53 = graph_of(kFiveCycleDeg3);
  MinorResult del = apply_minor(c53, {VarSet{0}, {}});
  REQUIRE(del.is_proper());
  CHECK(edge_ideal(del.graph) == ideal_of("(x2*x3*x4, x3*x4*x5)"));
  CHECK(del.graph.edges() == std::vector<VarSet>{VarSet{1, 2, 3}, VarSet{2, 3, 4}});

  Hypergraph tri = graph_of(kTriangle);
  MinorResult con = apply_minor(tri, {{}, VarSet{0}});
  REQUIRE(con.is_proper());
  CHECK(con.graph.edges() == std::vector<VarSet>{VarSet{1}, VarSet{2}});

  Hypergraph single(1, {VarSet{0}});
  CHECK(apply_minor(single, {{}, VarSet{0}}).kind == MinorResult::Kind::UnitIdeal);
  CHECK(apply_minor(single, {VarSet{0}, {}}).kind == MinorResult::Kind::ZeroIdeal);
}

TEST_CASE("minor enumeration order and counts") {
  Hypergraph single(1, {VarSet{0}});
  auto specs = enumerate_minors(single);
  REQUIRE(specs.size() == 3);
  CHECK(specs[0].result.is_proper());
  CHECK(specs[0].spec.is_identity());
  CHECK(specs[1].result.kind == MinorResult::Kind::ZeroIdeal);
  CHECK(specs[2].result.kind == MinorResult::Kind::UnitIdeal);

  Hypergraph tri = graph_of(kTriangle);
  auto all = enumerate_minors(tri);
  CHECK(all.size() == 27);
  std::set<std::vector<VarSet>> distinct;
  for (const auto& e : all)
    if (e.result.is_proper() && e.first_occurrence) distinct.insert(e.result.graph.edges());
  // the triangle, three single edges, three {v},{w} pairs, three singletons
  CHECK(distinct.size() == 10);
  CHECK(distinct.count({VarSet{0, 1}}) == 1);
  CHECK(distinct.count({VarSet{1}, VarSet{2}}) == 1);
  CHECK(distinct.count({VarSet{2}}) == 1);
  CHECK_THROWS_AS(enumerate_minors(tri, 26), ResourceError);
}

TEST_CASE("delete and contract commute on disjoint sets") {
  for (const auto& h : square_free_graphs(60)) {
    const std::size_t n = h.n_vertices();
    for (std::size_t code = 0; code < std::size_t{1} << (2 * n); ++code) {
      VarSet del;
      VarSet con;
      for (std::size_t v = 0; v < n; ++v) {
        auto digit = (code >> (2 * v)) & 3U;
        if (digit == 1) del.insert(v);
        if (digit == 2) con.insert(v);
      }
      MinorResult both = apply_minor(h, {del, con});
      // contract first, then delete
      MinorResult c = apply_minor(h, {{}, con});
      MinorResult other = c.is_proper() ? apply_minor(c.graph, {del, {}}) : c;
      REQUIRE(both == other);
    }
  }
}

TEST_CASE("minimal transversals against the subset oracle") {
  CHECK(minimal_transversals(graph_of(kTriangle)) == std::vector<VarSet>{VarSet{0, 1}, VarSet{0, 2}, VarSet{1, 2}});
  auto six = minimal_transversals(graph_of(kSixVar));
  CHECK(std::count(six.begin(), six.end(), VarSet{0, 2, 4}) == 1);
  CHECK(std::count(six.begin(), six.end(), VarSet{1, 3, 5}) == 1);
  CHECK(minimal_transversals(Hypergraph(2, {VarSet{0, 1}})) == std::vector<VarSet>{VarSet{0}, VarSet{1}});
  for (const auto& h : square_free_graphs()) CHECK(minimal_transversals(h) == transversals_oracle(h));
  CHECK(is_minimal_vertex_cover(graph_of(kTriangle), VarSet{0, 1}));
  CHECK_FALSE(is_minimal_vertex_cover(graph_of(kTriangle), VarSet{0, 1, 2}));
  CHECK_FALSE(is_vertex_cover(graph_of(kTriangle), VarSet{0}));
}

TEST_CASE("alpha0 and beta1 against exhaustive search") {
  Hypergraph tri = graph_of(kTriangle);
  CHECK(alpha0(tri) == 2);
  CHECK(beta1(tri).size == 1);
  Hypergraph six = graph_of(kSixVar);
  CHECK(alpha0(six) == 2);
  Matching m = beta1(six);
  CHECK(m.size == 2);
  std::vector<VarSet> witness;
  for (auto i : m.edges) witness.push_back(six.edges()[i]);
  CHECK(witness == std::vector<VarSet>{VarSet{0, 1, 2}, VarSet{3, 4, 5}});
  Hypergraph c53 = graph_of(kFiveCycleDeg3);
  CHECK(alpha0(c53) == 2);
  CHECK(beta1(c53).size == 1);
  for (const auto& h : square_free_graphs()) {
    CHECK(alpha0(h) == alpha0_oracle(h));
    CHECK(beta1(h).size == beta1_oracle(h));
    CHECK(alpha0(h) >= beta1(h).size);
    Matching w = beta1(h);
    VarSet used;
    for (auto i : w.edges) {
      CHECK_FALSE(used.intersects(h.edges()[i]));
      used |= h.edges()[i];
    }
  }
}

TEST_CASE("konig and packing") {
  CHECK(packing(graph_of(kSixVar)).holds);
  CHECK_FALSE(konig(graph_of(kTriangle)));
  PackingResult tri = packing(graph_of(kTriangle));
  CHECK_FALSE(tri.holds);
  REQUIRE(tri.failing_minor);
  CHECK(tri.failing_minor->is_identity());
  CHECK(packing(Hypergraph(2, {VarSet{0, 1}})).holds);
  for (const auto& h : square_free_graphs(60)) {
    if (!packing(h).holds) continue;
    for (const auto& e : enumerate_minors(h))
      if (e.result.is_proper()) CHECK(konig(e.result.graph));
  }
}

TEST_CASE("components and isolated vertices") {
  Hypergraph two(5, {VarSet{0, 1}, VarSet{1, 2}, VarSet{0, 2}, VarSet{3, 4}});
  CHECK(connected_components(two).size() == 2);
  Hypergraph iso(3, {VarSet{0}, VarSet{1, 2}});
  CHECK(isolated_vertices(iso) == VarSet{0});
  CHECK(strip_isolated_vertices(iso).edges() == std::vector<VarSet>{VarSet{1, 2}});
  CHECK(connected_components(graph_of(kTriangle)).size() == 1);
}
