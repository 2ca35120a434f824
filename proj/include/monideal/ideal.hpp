#ifndef MONIDEAL_IDEAL_HPP
#define MONIDEAL_IDEAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "monideal/monomial.hpp"
#include "monideal/var_set.hpp"

namespace monideal {

/// A monomial ideal held by its minimal generating set in canonical order.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  /// Minimalizes `generators`. All must have dimension `ring_dim`.
  MonomialIdeal(std::size_t ring_dim, std::vector<Monomial> generators);

  static MonomialIdeal zero(std::size_t ring_dim) { return MonomialIdeal(ring_dim, {}); }
  static MonomialIdeal unit(std::size_t ring_dim) {
    return MonomialIdeal(ring_dim, {Monomial::unit(ring_dim)});
  }

  std::size_t ring_dim() const { return ring_dim_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_proper() const { return !is_zero() && !is_unit(); }
  bool is_square_free() const;

  /// Union of the generator supports.
  VarSet support() const;
  /// lcm of all generators; the unit monomial for the zero ideal.
  Monomial lcm_of_generators() const;

  bool contains(const Monomial& m) const;
  /// True when every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& o) const {
    return ring_dim_ == o.ring_dim_ && gens_ == o.gens_;
  }

private:
  std::size_t ring_dim_ = 0;
  std::vector<Monomial> gens_;
};

/// A prime generated by a set of variables. Ordered by height, then by the
/// sorted variable list.
class MonomialPrime {
public:
  MonomialPrime() = default;
  MonomialPrime(std::size_t ring_dim, VarSet vars);

  static MonomialPrime maximal(std::size_t ring_dim) {
    return MonomialPrime(ring_dim, VarSet::range(ring_dim));
  }

  std::size_t ring_dim() const { return ring_dim_; }
  const VarSet& vars() const { return vars_; }
  std::size_t height() const { return vars_.size(); }
  bool contains(VarId v) const { return vars_.contains(v); }

  MonomialIdeal ideal() const;

  bool operator==(const MonomialPrime& o) const = default;
  std::strong_ordering operator<=>(const MonomialPrime& o) const {
    if (auto c = ring_dim_ <=> o.ring_dim_; c != 0) return c;
    return vars_ <=> o.vars_;
  }

private:
  std::size_t ring_dim_ = 0;
  VarSet vars_;
};

/// Keeps exactly the divisibility-minimal elements, deduplicated, sorted.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^t for t >= 1; I^0 is the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, int t);
/// (I : m). The unit ideal exactly when m lies in I.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Left fold of pairwise intersections; the unit ideal for an empty list.
MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals, std::size_t ring_dim);
MonomialIdeal radical(const MonomialIdeal& ideal);
/// Sum with the ideal generated by a single monomial.
MonomialIdeal add_generator(const MonomialIdeal& ideal, const Monomial& m);

inline bool equal(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

}  // namespace monideal

#endif  // MONIDEAL_IDEAL_HPP
