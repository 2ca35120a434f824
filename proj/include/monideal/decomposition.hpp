#ifndef MONIDEAL_DECOMPOSITION_HPP
#define MONIDEAL_DECOMPOSITION_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "monideal/errors.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// The irreducible ideal (x_i^{a_i} : a_i > 0). Stored as an exponent vector
/// with zero meaning "variable absent".
class IrreducibleComponent {
public:
  explicit IrreducibleComponent(Monomial pure_powers);

  const Monomial& pure_powers() const { return powers_; }
  MonomialPrime radical() const { return MonomialPrime(powers_.dim(), powers_.support()); }
  MonomialIdeal ideal() const;
  /// this ⊆ other as ideals.
  bool contained_in(const IrreducibleComponent& other) const;

  bool operator==(const IrreducibleComponent&) const = default;
  auto operator<=>(const IrreducibleComponent& o) const { return powers_ <=> o.powers_; }

private:
  Monomial powers_;
};

struct AssResult {
  std::vector<MonomialPrime> primes;
  /// Filled by the witness oracle: (J : c) = P for each entry.
  std::map<MonomialPrime, Monomial> witnesses;
};

/// Irredundant irreducible decomposition, canonical order. Generators are
/// added one at a time; each component not containing the new generator m
/// is split along m's coprime pure powers. Throws UsageError for the zero or
/// unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            const Budget& budget = {});

/// Top-down recursion on a single ideal: a generator u*v with coprime
/// non-unit u, v gives J = (J + u) ∩ (J + v). Exponentially slower than the
/// incremental route on large powers; kept as a second derivation.
std::vector<IrreducibleComponent> irreducible_decomposition_by_splitting(const MonomialIdeal& ideal,
                                                                         const Budget& budget = {});

/// Radicals of the irredundant irreducible components, canonical order.
AssResult associated_primes(const MonomialIdeal& ideal, const Budget& budget = {});

/// Independent check of Ass: scans every divisor c of the generator lcm and
/// keeps P whenever (J : c) = P. Throws ResourceError if the box exceeds
/// budget.max_box.
AssResult ass_witness_oracle(const MonomialIdeal& ideal, const Budget& budget = {});

/// True when (J : c) is exactly the prime P.
bool is_prime_witness(const MonomialIdeal& ideal, const Monomial& c, const MonomialPrime& prime);

/// Minimal transversals of the radical's hypergraph.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);

/// Sets every variable outside P to 1 and minimalizes.
MonomialIdeal localize(const MonomialIdeal& ideal, const MonomialPrime& prime);

/// I^(t) = ∩_{P minimal} P^t. Throws UsageError unless I is square-free and proper.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int t);

/// Definition route for the symbolic power: intersect the localizations of
/// I^t at each minimal prime (the minimal-prime primary components). Works
/// for any proper monomial ideal; used to cross-check symbolic_power.
MonomialIdeal symbolic_power_via_localization(const MonomialIdeal& ideal, int t);

bool is_unmixed(const MonomialIdeal& ideal, const Budget& budget = {});

/// Ass(R/J) with the conventions Ass(R/R) = {} and, for the zero ideal,
/// UsageError. Convenient for colon ideals that may become the unit ideal.
std::vector<MonomialPrime> associated_primes_or_empty(const MonomialIdeal& ideal, const Budget& budget = {});

}  // namespace monideal

#endif  // MONIDEAL_DECOMPOSITION_HPP
