// Shared fixtures and brute-force oracles for the test suites.
#ifndef MONIDEAL_TESTS_SUPPORT_HPP
#define MONIDEAL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "monideal/decomposition.hpp"
#include "monideal/hypergraph.hpp"
#include "monideal/ideal.hpp"
#include "monideal/text.hpp"

namespace testing {

using namespace monideal;

inline ParsedInput parse(const std::string& text) { return parse_input(text); }
inline MonomialIdeal ideal_of(const std::string& text) { return parse_input(text).ideal; }

inline Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

/// Primes given as lists of 0-based variable indices.
inline std::vector<MonomialPrime> primes(std::size_t dim, std::vector<std::vector<VarId>> sets) {
  std::vector<MonomialPrime> out;
  for (const auto& s : sets) {
    VarSet v;
    for (auto x : s) v.insert(x);
    out.emplace_back(dim, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline const char* kTriangle = "(x*y, y*z, x*z)";
inline const char* kFiveCycleDeg3 = "(x1*x2*x3, x2*x3*x4, x3*x4*x5, x4*x5*x1, x5*x1*x2)";
inline const char* kSixVar = "(x1*x2*x3, x4*x5*x6, x1*x2*x4, x2*x3*x6, x1*x4*x5, x3*x5*x6)";

inline std::string cycle_graph(std::size_t n) {
  std::string out;
  for (std::size_t i = 1; i <= n; ++i) out += "x" + std::to_string(i) + " x" + std::to_string(i % n + 1) + "\n";
  return out;
}

/// Fixed-seed corpus: d <= 5, at most 6 generators, exponents <= 3.
inline std::vector<MonomialIdeal> random_corpus(std::size_t count = 240, unsigned seed = 20261017U) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<std::size_t> ngens(1, 6);
  std::uniform_int_distribution<int> exp(0, 3);
  std::vector<MonomialIdeal> out;
  while (out.size() < count) {
    std::size_t d = dim(rng);
    std::vector<Monomial> gens;
    std::size_t k = ngens(rng);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Exponent> e(d);
      for (auto& x : e) x = static_cast<Exponent>(exp(rng));
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal I(d, std::move(gens));
    if (I.is_proper()) out.push_back(std::move(I));
  }
  return out;
}

/// Square-free corpus of the same shape (exponents in {0,1}).
inline std::vector<MonomialIdeal> square_free_corpus(std::size_t count = 200, unsigned seed = 7U) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<std::size_t> ngens(1, 6);
  std::bernoulli_distribution bit(0.5);
  std::vector<MonomialIdeal> out;
  while (out.size() < count) {
    std::size_t d = dim(rng);
    std::vector<Monomial> gens;
    std::size_t k = ngens(rng);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Exponent> e(d);
      for (auto& x : e) x = bit(rng) ? 1 : 0;
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal I(d, std::move(gens));
    if (I.is_proper()) out.push_back(std::move(I));
  }
  return out;
}

/// Every monomial with exponents in [0, bound[i]].
inline void for_each_in_box(const std::vector<Exponent>& bound, const std::function<void(const Monomial&)>& f) {
  std::vector<Exponent> e(bound.size(), 0);
  while (true) {
    f(Monomial(e));
    std::size_t i = 0;
    while (i < e.size() && e[i] == bound[i]) e[i++] = 0;
    if (i == e.size()) return;
    ++e[i];
  }
}

inline std::vector<Exponent> uniform_box(std::size_t d, Exponent b) { return std::vector<Exponent>(d, b); }

/// Direct membership: some generator divides m.
inline bool member(const MonomialIdeal& I, const Monomial& m) {
  return std::any_of(I.generators().begin(), I.generators().end(), [&](const Monomial& g) { return divides(g, m); });
}

/// Minimal vertex covers by scanning every subset.
inline std::vector<VarSet> transversals_oracle(const Hypergraph& h) {
  const std::size_t n = h.n_vertices();
  std::vector<VarSet> covers;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    VarSet s;
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1U) s.insert(v);
    if (is_vertex_cover(h, s)) covers.push_back(s);
  }
  std::vector<VarSet> minimal;
  for (const auto& c : covers)
    if (std::none_of(covers.begin(), covers.end(), [&](const VarSet& o) { return o != c && o.subset_of(c); }))
      minimal.push_back(c);
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

inline std::size_t alpha0_oracle(const Hypergraph& h) {
  std::size_t best = h.n_vertices();
  for (const auto& c : transversals_oracle(h)) best = std::min(best, c.size());
  return best;
}

inline std::size_t beta1_oracle(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    VarSet used;
    bool ok = true;
    std::size_t k = 0;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      ok = !used.intersects(h.edges()[i]);
      used |= h.edges()[i];
      ++k;
    }
    if (ok) best = std::max(best, k);
  }
  return best;
}

/// m is in I^(t) iff its exponent sum over every minimal prime reaches t.
inline bool symbolic_member(const std::vector<MonomialPrime>& mins, const Monomial& m, int t) {
  return std::all_of(mins.begin(), mins.end(), [&](const MonomialPrime& p) {
    int s = 0;
    p.vars().for_each([&](VarId v) { s += m[v]; });
    return s >= t;
  });
}

}  // namespace testing

#endif  // MONIDEAL_TESTS_SUPPORT_HPP
