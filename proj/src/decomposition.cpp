#include "monideal/decomposition.hpp"

#include <algorithm>
#include <string>

#include "monideal/hypergraph.hpp"

namespace monideal {

IrreducibleComponent::IrreducibleComponent(Monomial pure_powers) : powers_(std::move(pure_powers)) {
  if (powers_.is_unit()) throw UsageError("an irreducible component needs at least one pure power");
}

MonomialIdeal IrreducibleComponent::ideal() const {
  std::vector<Monomial> gens;
  for (VarId v = 0; v < powers_.dim(); ++v)
    if (powers_[v] != 0) gens.push_back(Monomial::variable(powers_.dim(), v, powers_[v]));
  return MonomialIdeal(powers_.dim(), std::move(gens));
}

bool IrreducibleComponent::contained_in(const IrreducibleComponent& other) const {
  // Each x_v^{a_v} must be a multiple of some x_v^{b_v} of `other`.
  for (VarId v = 0; v < powers_.dim(); ++v) {
    if (powers_[v] == 0) continue;
    if (other.powers_[v] == 0 || other.powers_[v] > powers_[v]) return false;
  }
  return true;
}

namespace {

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw UsageError("operation undefined for the zero ideal");
  if (ideal.is_unit()) throw UsageError("operation undefined for the unit ideal");
}

class Splitter {
public:
  explicit Splitter(const Budget& budget) : budget_(budget) {}

  void split(const MonomialIdeal& ideal) {
    if (++nodes_ > budget_.max_split_nodes)
      throw ResourceError("irreducible decomposition exceeded " + std::to_string(budget_.max_split_nodes) +
                          " splitting nodes");
    const Monomial* pivot = nullptr;
    for (const auto& g : ideal.generators()) {
      if (!g.is_pure_power()) {
        pivot = &g;
        break;
      }
    }
    if (pivot == nullptr) {
      leaves.emplace_back(pure_part(ideal));
      return;
    }
    // Peel off the variable with the largest exponent.
    VarId var = 0;
    for (VarId v = 1; v < pivot->dim(); ++v)
      if ((*pivot)[v] > (*pivot)[var]) var = v;
    Monomial u = Monomial::variable(pivot->dim(), var, (*pivot)[var]);
    Monomial v = exact_quotient(*pivot, u);
    split(add_generator(ideal, u));
    split(add_generator(ideal, v));
  }

  std::vector<IrreducibleComponent> leaves;

private:
  static Monomial pure_part(const MonomialIdeal& ideal) {
    std::vector<Exponent> e(ideal.ring_dim(), 0);
    for (const auto& g : ideal.generators()) {
      VarId v = g.support().first();
      e[v] = g[v];
    }
    return Monomial(std::move(e));
  }

  const Budget& budget_;
  std::size_t nodes_ = 0;
};

}  // namespace

namespace {

/// Keeps the inclusion-minimal components. For irreducible components, C
/// contains the intersection of the others exactly when C contains one of
/// them, so a pairwise scan suffices.
std::vector<IrreducibleComponent> drop_redundant(std::vector<IrreducibleComponent> comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<IrreducibleComponent> kept;
  kept.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
      redundant = j != i && comps[j].contained_in(comps[i]);
    if (!redundant) kept.push_back(comps[i]);
  }
  return kept;
}

bool component_contains(const Monomial& powers, const Monomial& m) {
  for (VarId v = 0; v < powers.dim(); ++v)
    if (powers[v] != 0 && m[v] >= powers[v]) return true;
  return false;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal, const Budget& budget) {
  require_proper(ideal);
  const std::size_t d = ideal.ring_dim();
  // Frontier of irreducible ideals whose intersection is the ideal generated
  // so far. Adding m to a component C not containing m splits m into its
  // coprime pure powers: C + (m) = ∩_{v | m} (C + x_v^{m_v}).
  std::vector<IrreducibleComponent> frontier;
  bool started = false;
  std::size_t work = 0;
  for (const auto& m : ideal.generators()) {
    std::vector<IrreducibleComponent> next;
    if (!started) {
      for (VarId v = 0; v < d; ++v)
        if (m[v] != 0) next.emplace_back(Monomial::variable(d, v, m[v]));
      started = true;
    } else {
      for (const auto& c : frontier) {
        const Monomial& powers = c.pure_powers();
        if (component_contains(powers, m)) {
          next.push_back(c);
          continue;
        }
        for (VarId v = 0; v < d; ++v) {
          if (m[v] == 0) continue;
          std::vector<Exponent> e(powers.exponents().begin(), powers.exponents().end());
          e[v] = m[v];
          next.emplace_back(Monomial(std::move(e)));
        }
      }
    }
    work += next.size();
    if (work > budget.max_split_nodes)
      throw ResourceError("irreducible decomposition exceeded " + std::to_string(budget.max_split_nodes) +
                          " splitting nodes");
    frontier = drop_redundant(std::move(next));
  }
  return frontier;
}

std::vector<IrreducibleComponent> irreducible_decomposition_by_splitting(const MonomialIdeal& ideal,
                                                                         const Budget& budget) {
  require_proper(ideal);
  Splitter splitter(budget);
  splitter.split(ideal);
  return drop_redundant(std::move(splitter.leaves));
}

AssResult associated_primes(const MonomialIdeal& ideal, const Budget& budget) {
  AssResult result;
  for (const auto& c : irreducible_decomposition(ideal, budget)) result.primes.push_back(c.radical());
  std::sort(result.primes.begin(), result.primes.end());
  result.primes.erase(std::unique(result.primes.begin(), result.primes.end()), result.primes.end());
  return result;
}

std::vector<MonomialPrime> associated_primes_or_empty(const MonomialIdeal& ideal, const Budget& budget) {
  if (ideal.is_unit()) return {};
  return associated_primes(ideal, budget).primes;
}

bool is_prime_witness(const MonomialIdeal& ideal, const Monomial& c, const MonomialPrime& prime) {
  MonomialIdeal q = colon(ideal, c);
  return q == prime.ideal();
}

AssResult ass_witness_oracle(const MonomialIdeal& ideal, const Budget& budget) {
  require_proper(ideal);
  const Monomial box = ideal.lcm_of_generators();
  const std::size_t d = ideal.ring_dim();
  std::size_t volume = 1;
  for (VarId v = 0; v < d; ++v) {
    volume *= std::size_t{box[v]} + 1;
    if (volume > budget.max_box)
      throw ResourceError("witness box exceeds budget of " + std::to_string(budget.max_box) + " monomials");
  }

  AssResult result;
  std::vector<Exponent> c(d, 0);
  for (std::size_t step = 0; step < volume; ++step) {
    Monomial cm(c);
    MonomialIdeal q = colon(ideal, cm);
    bool linear = !q.is_unit() && std::all_of(q.generators().begin(), q.generators().end(),
                                              [](const Monomial& g) { return g.degree() == 1; });
    if (linear) {
      MonomialPrime p(d, q.support());
      result.witnesses.emplace(p, cm);  // keeps the first witness found
    }
    for (VarId v = 0; v < d; ++v) {
      if (++c[v] <= box[v]) break;
      c[v] = 0;
    }
  }
  for (const auto& [p, w] : result.witnesses) result.primes.push_back(p);
  return result;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  require_proper(ideal);
  Hypergraph h = hypergraph_of(radical(ideal));
  std::vector<MonomialPrime> out;
  for (const auto& cover : minimal_transversals(h)) out.emplace_back(ideal.ring_dim(), cover);
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal localize(const MonomialIdeal& ideal, const MonomialPrime& prime) {
  if (prime.ring_dim() != ideal.ring_dim()) throw UsageError("prime and ideal live in different rings");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
    for (VarId v = 0; v < e.size(); ++v)
      if (!prime.contains(v)) e[v] = 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.ring_dim(), std::move(gens));
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int t) {
  if (!ideal.is_square_free()) throw UsageError("symbolic_power requires a square-free ideal");
  require_proper(ideal);
  if (t < 1) throw UsageError("symbolic power exponent must be positive");
  std::vector<MonomialIdeal> parts;
  for (const auto& p : minimal_primes(ideal)) parts.push_back(power(p.ideal(), t));
  return intersect_all(parts, ideal.ring_dim());
}

MonomialIdeal symbolic_power_via_localization(const MonomialIdeal& ideal, int t) {
  require_proper(ideal);
  if (t < 1) throw UsageError("symbolic power exponent must be positive");
  MonomialIdeal pw = power(ideal, t);
  std::vector<MonomialIdeal> parts;
  for (const auto& p : minimal_primes(ideal)) parts.push_back(localize(pw, p));
  return intersect_all(parts, ideal.ring_dim());
}

bool is_unmixed(const MonomialIdeal& ideal, const Budget& budget) {
  auto ass = associated_primes(ideal, budget).primes;
  return std::all_of(ass.begin(), ass.end(),
                     [&](const MonomialPrime& p) { return p.height() == ass.front().height(); });
}

}  // namespace monideal
