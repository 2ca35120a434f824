// Property checks shared by the unit tests and the acceptance gate. Each
// returns the number of instances examined and the first counterexample.
#ifndef MONIDEAL_TESTS_PROPERTIES_HPP
#define MONIDEAL_TESTS_PROPERTIES_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "monideal/ntf.hpp"
#include "monideal/polarization.hpp"
#include "support.hpp"

namespace testing {

struct PropertyOutcome {
  std::size_t instances = 0;
  std::string failure;

  bool ok() const { return failure.empty(); }
  void fail(const std::string& what) {
    if (failure.empty()) failure = what;
  }
};

/// Copies the ideal into a ring with `extra` more variables, keeping indices.
inline MonomialIdeal widen(const MonomialIdeal& I, std::size_t new_dim, std::size_t offset = 0) {
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<Exponent> e(new_dim, 0);
    for (VarId v = 0; v < g.dim(); ++v) e[v + offset] = g[v];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(new_dim, std::move(gens));
}

inline MonomialPrime widen(const MonomialPrime& P, std::size_t new_dim, std::size_t offset = 0) {
  VarSet s;
  P.vars().for_each([&](VarId v) { s.insert(v + offset); });
  return MonomialPrime(new_dim, s);
}

inline std::set<MonomialPrime> as_set(const std::vector<MonomialPrime>& v) { return {v.begin(), v.end()}; }

/// Ass(R/(K, x)) = {(P, x)} for a fresh variable x.
inline void check_add_variable(const MonomialIdeal& K, PropertyOutcome& out) {
  const std::size_t d = K.ring_dim() + 1;
  const VarId x = K.ring_dim();
  MonomialIdeal wide = add_generator(widen(K, d), Monomial::variable(d, x));
  std::set<MonomialPrime> expected;
  for (const auto& P : associated_primes(K).primes) {
    VarSet s = widen(P, d).vars();
    s.insert(x);
    expected.emplace(d, s);
  }
  ++out.instances;
  if (as_set(associated_primes(wide).primes) != expected) out.fail("add-variable on " + to_string(K));
}

/// Ass(R/(K : M)) ⊆ Ass(R/K).
inline void check_colon_inclusion(const MonomialIdeal& K, const Monomial& M, PropertyOutcome& out) {
  auto big = associated_primes(K).primes;
  ++out.instances;
  for (const auto& P : associated_primes_or_empty(colon(K, M)))
    if (!std::binary_search(big.begin(), big.end(), P))
      out.fail("colon inclusion on " + to_string(K) + " : " + to_string(M));
}

/// Ass(R/I^t) ⊆ Ass(R/(I^t : y)) ∪ Ass(R/(I^t, y)).
inline void check_exact_sequence(const MonomialIdeal& It, VarId y, PropertyOutcome& out) {
  Monomial yv = Monomial::variable(It.ring_dim(), y);
  auto left = associated_primes_or_empty(colon(It, yv));
  auto right = associated_primes_or_empty(add_generator(It, yv));
  ++out.instances;
  for (const auto& P : associated_primes(It).primes)
    if (!std::binary_search(left.begin(), left.end(), P) && !std::binary_search(right.begin(), right.end(), P))
      out.fail("exact sequence on " + to_string(It) + " y=" + std::to_string(y));
}

/// I = I1 + I2 on disjoint variables: Ass(R/I^n) = {P1 + P2 : Pi ∈ Ass(R/Ii^ni), n1 + n2 = n + 1}.
inline void check_disconnected(const MonomialIdeal& I1, const MonomialIdeal& I2, int n, PropertyOutcome& out) {
  const std::size_t d = I1.ring_dim() + I2.ring_dim();
  MonomialIdeal I = sum(widen(I1, d), widen(I2, d, I1.ring_dim()));
  std::set<MonomialPrime> expected;
  for (int n1 = 1; n1 <= n; ++n1) {
    int n2 = n + 1 - n1;
    for (const auto& P1 : associated_primes(power(I1, n1)).primes)
      for (const auto& P2 : associated_primes(power(I2, n2)).primes)
        expected.emplace(d, widen(P1, d).vars() | widen(P2, d, I1.ring_dim()).vars());
  }
  ++out.instances;
  if (as_set(associated_primes(power(I, n)).primes) != expected)
    out.fail("disconnected on " + to_string(I1) + " + " + to_string(I2) + " n=" + std::to_string(n));
}

/// Every minimal prime of the polarization of I^t uses one shadow per base variable.
inline void check_one_shadow_all(const MonomialIdeal& I, int t, PropertyOutcome& out) {
  Polarization pol = polarize_ideal(power(I, t));
  ++out.instances;
  if (!has_shadow_prefix_property(pol.context, pol.ideal)) out.fail("shadow prefix on " + to_string(I));
  if (depolarize_ideal(pol.context, pol.ideal) != power(I, t)) out.fail("depolarize round trip on " + to_string(I));
  for (const auto& Q : minimal_primes(pol.ideal))
    if (!check_one_shadow(pol.context, pol.ideal, Q)) out.fail("one shadow on " + to_string(I) + " t=" + std::to_string(t));
}

/// First-shadow lifts of the minimal primes of I are minimal covers of the polarized I^t.
inline void check_cover_lift(const MonomialIdeal& I, int t, PropertyOutcome& out) {
  Polarization pol = polarize_ideal(power(I, t));
  Hypergraph h = hypergraph_of(pol.ideal);
  ++out.instances;
  for (const auto& P : minimal_primes(I))
    if (!is_minimal_vertex_cover(h, lift_minimal_prime(pol.context, P).vars()))
      out.fail("cover lift on " + to_string(I) + " t=" + std::to_string(t));
}

/// Depolarization maps Min of the polarized I^t into and onto Ass(R/I^t).
inline void check_primes_polarize(const MonomialIdeal& I, int t, PropertyOutcome& out) {
  FaridiReport r = faridi_correspondence(I, t);
  ++out.instances;
  if (!r.into || !r.onto) out.fail("primes polarize on " + to_string(I) + " t=" + std::to_string(t));
}

/// I^t == I^(t) exactly when Ass(R/I^t) == Min(R/I), for t up to the default bound.
inline void check_symbolic_equivalence(const MonomialIdeal& I, PropertyOutcome& out) {
  const int n = default_bound(I);
  const auto mins = minimal_primes(I);
  for (int t = 1; t <= n; ++t) {
    MonomialIdeal It = power(I, t);
    bool equal_powers = It == symbolic_power(I, t);
    bool no_embedded = associated_primes(It).primes == mins;
    ++out.instances;
    if (equal_powers != no_embedded) out.fail("symbolic equivalence on " + to_string(I) + " t=" + std::to_string(t));
  }
}

/// All lemma properties on one square-free ideal.
inline void check_lemmas(const MonomialIdeal& I, PropertyOutcome& out, int max_t = 2) {
  for (int t = 1; t <= max_t; ++t) {
    MonomialIdeal It = power(I, t);
    check_add_variable(It, out);
    for (VarId y = 0; y < I.ring_dim(); ++y) check_exact_sequence(It, y, out);
    for (std::size_t mask = 0; mask < (std::size_t{1} << I.ring_dim()); ++mask) {
      std::vector<Exponent> e(I.ring_dim(), 0);
      for (VarId v = 0; v < I.ring_dim(); ++v) e[v] = (mask >> v) & 1U;
      check_colon_inclusion(It, Monomial(std::move(e)), out);
    }
    check_one_shadow_all(I, t, out);
    check_cover_lift(I, t, out);
    check_primes_polarize(I, t, out);
  }
}

}  // namespace testing

#endif  // MONIDEAL_TESTS_PROPERTIES_HPP
