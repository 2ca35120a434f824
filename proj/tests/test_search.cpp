#include <doctest.h>

#include "monideal/search.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("canonical forms") {
  Hypergraph path_a(3, {VarSet{0, 1}, VarSet{1, 2}});
  Hypergraph path_b(3, {VarSet{0, 2}, VarSet{1, 2}});
  CHECK(isomorphic(path_a, path_b));
  CHECK(canonical_form(path_a) == canonical_form(path_b));
  CHECK_FALSE(isomorphic(path_a, *parse(kTriangle).hypergraph));
  CHECK_THROWS_AS(canonical_form(Hypergraph(9, {VarSet{0, 8}})), ResourceError);
}

TEST_CASE("minimally non-packing") {
  CHECK(is_minimally_non_packing(*parse(kTriangle).hypergraph));
  CHECK(is_minimally_non_packing(*parse(cycle_graph(5)).hypergraph));
  CHECK_FALSE(is_minimally_non_packing(*parse(cycle_graph(4)).hypergraph));
  // the triangle is a minor of K4
  CHECK_FALSE(is_minimally_non_packing(*parse("a b\na c\na d\nb c\nb d\nc d\n").hypergraph));
}

TEST_CASE("graph search finds the odd cycles") {
  SearchConfig cfg;
  cfg.d_max = 5;
  SearchOutcome out = search(cfg);
  CHECK(out.complete);
  REQUIRE(out.hits.size() == 2);
  CHECK(isomorphic(out.hits[0].graph, *parse(kTriangle).hypergraph));
  CHECK(isomorphic(out.hits[1].graph, *parse(cycle_graph(5)).hypergraph));
  for (const auto& h : out.hits) CHECK(h.onset_check == CheckStatus::Pass);

  SearchConfig three = cfg;
  three.d_max = 3;
  CHECK(search(three).hits.size() == 1);

  cfg.discard_unmixed = true;
  CHECK(search(cfg).hits.empty());
}

TEST_CASE("dedup leaves one hypergraph per isomorphism class") {
  SearchConfig cfg;
  cfg.d_min = 4;
  cfg.d_max = 4;
  cfg.edge_size_min = 2;
  cfg.edge_size_max = 3;
  cfg.predicate = SearchPredicate::NtfViolation;
  SearchOutcome out = search(cfg);
  for (std::size_t i = 0; i < out.hits.size(); ++i)
    for (std::size_t j = i + 1; j < out.hits.size(); ++j) CHECK_FALSE(isomorphic(out.hits[i].graph, out.hits[j].graph));
  for (const auto& h : out.hits) CHECK(h.onset);

  cfg.dedup = Dedup::None;
  SearchOutcome labeled = search(cfg);
  CHECK(labeled.hits.size() > out.hits.size());
  for (const auto& h : labeled.hits) {
    auto same = std::count_if(out.hits.begin(), out.hits.end(), [&](const SearchHit& o) { return isomorphic(o.graph, h.graph); });
    CHECK(same == 1);
  }
}

TEST_CASE("budgets stop with a resume token") {
  SearchConfig cfg;
  cfg.d_max = 5;
  cfg.max_candidates = 100;
  SearchOutcome first = search(cfg);
  CHECK_FALSE(first.complete);
  REQUIRE(first.resume_token);
  CHECK(first.candidates == 100);
  SearchConfig rest = cfg;
  rest.max_candidates = 0;
  rest.resume = *first.resume_token;
  SearchOutcome second = search(rest);
  CHECK(second.complete);
  CHECK(first.hits.size() + second.hits.size() == 2);

  SearchConfig bad = cfg;
  bad.resume = "d=5;oops";
  CHECK_THROWS_AS(search(bad), UsageError);
  CHECK_THROWS_AS(parse_search_predicate("nope"), UsageError);
}
