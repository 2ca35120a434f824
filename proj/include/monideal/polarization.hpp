#ifndef MONIDEAL_POLARIZATION_HPP
#define MONIDEAL_POLARIZATION_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "monideal/decomposition.hpp"
#include "monideal/ideal.hpp"
#include "monideal/text.hpp"

namespace monideal {

/// Copy `copy` (1-based) of base variable `base`.
struct ShadowVar {
  VarId base = 0;
  unsigned copy = 1;

  bool operator==(const ShadowVar&) const = default;
  auto operator<=>(const ShadowVar&) const = default;
};

/// Flat indexing of the polarized ring: the shadows of x_i occupy a
/// contiguous block, one slot per copy.
class PolarContext {
public:
  PolarContext() = default;
  PolarContext(std::size_t base_dim, std::vector<unsigned> copies_per_var);

  std::size_t base_dim() const { return base_dim_; }
  std::size_t polar_dim() const { return polar_dim_; }
  const std::vector<unsigned>& copies_per_var() const { return copies_; }

  VarId flat(ShadowVar s) const;
  ShadowVar shadow(VarId flat_index) const;

  /// Names shadows as <base>_<copy>, e.g. x3_2.
  VarNames names(const VarNames& base_names = {}) const;

  bool operator==(const PolarContext&) const = default;

private:
  std::size_t base_dim_ = 0;
  std::size_t polar_dim_ = 0;
  std::vector<unsigned> copies_;
  std::vector<VarId> offset_;
};

struct Polarization {
  PolarContext context;
  MonomialIdeal ideal;
};

/// Replaces each x_i^a in every minimal generator with x_(i,1)...x_(i,a).
/// Copies per variable = its largest exponent among the generators.
/// Throws UsageError for the zero or unit ideal, ResourceError if the
/// polarized ring exceeds the bit-set capacity.
Polarization polarize_ideal(const MonomialIdeal& ideal);

Monomial polarize_monomial(const PolarContext& ctx, const Monomial& m);
MonomialPrime depolarize_prime(const PolarContext& ctx, const MonomialPrime& prime);
MonomialIdeal depolarize_ideal(const PolarContext& ctx, const MonomialIdeal& ideal);

/// Shadow-prefix property: x_(i,j) in a generator forces x_(i,k) for k <= j.
bool has_shadow_prefix_property(const PolarContext& ctx, const MonomialIdeal& polarized);

/// True iff `prime` uses at most one shadow of each base variable. Throws
/// UsageError when `prime` is not a minimal prime of `polarized`.
bool check_one_shadow(const PolarContext& ctx, const MonomialIdeal& polarized, const MonomialPrime& prime);

/// Sends each variable of a minimal prime of I to its first shadow.
MonomialPrime lift_minimal_prime(const PolarContext& ctx, const MonomialPrime& prime);

struct FaridiReport {
  int power = 1;
  Polarization polarization;
  /// Min of the polarization (= Ass, it is square-free).
  std::vector<MonomialPrime> polarized_primes;
  /// Ass(R/I^t) from the decomposition route.
  std::vector<MonomialPrime> base_primes;
  /// base prime -> number of polarized primes depolarizing to it.
  std::map<MonomialPrime, std::size_t> fiber_sizes;
  /// Polarized primes whose depolarization is not in base_primes.
  std::vector<MonomialPrime> stray;
  /// Every depolarization lands in Ass(R/I^t).
  bool into = false;
  /// Every member of Ass(R/I^t) is hit.
  bool onto = false;
};

/// Compares depolarized Min(S_t / polarize(I^t)) with Ass(R/I^t).
FaridiReport faridi_correspondence(const MonomialIdeal& ideal, int t, const Budget& budget = {});

}  // namespace monideal

#endif  // MONIDEAL_POLARIZATION_HPP
