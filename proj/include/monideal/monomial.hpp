#ifndef MONIDEAL_MONOMIAL_HPP
#define MONIDEAL_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "monideal/var_set.hpp"

namespace monideal {

using Exponent = std::uint16_t;

/// Exponent vector over a fixed number of variables. The all-zero vector is
/// the unit monomial. Degree and a 64-bit support signature are cached so
/// divisibility can reject most pairs without touching the vector.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t dim);
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial unit(std::size_t dim) { return Monomial(dim); }
  static Monomial variable(std::size_t dim, VarId var, Exponent power = 1);
  /// Square-free monomial with the given support.
  static Monomial from_support(std::size_t dim, const VarSet& support);

  std::size_t dim() const { return exps_.size(); }
  Exponent operator[](VarId i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint32_t degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }
  bool is_square_free() const;
  /// True when the support is a single variable.
  bool is_pure_power() const;
  VarSet support() const;
  Exponent max_exponent() const;

  std::uint64_t signature() const { return signature_; }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  /// Canonical order: ascending total degree, then descending exponent
  /// vector (so x1 sorts ahead of x2 within a degree).
  std::strong_ordering operator<=>(const Monomial& o) const;

  std::size_t hash() const;

private:
  void refresh();

  std::vector<Exponent> exps_;
  std::uint32_t degree_ = 0;
  std::uint64_t signature_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b);
/// a / b; throws UsageError unless b divides a.
Monomial exact_quotient(const Monomial& a, const Monomial& b);
/// a / gcd(a, b): the generator image under the colon by b.
Monomial colon_quotient(const Monomial& a, const Monomial& b);
/// m^k with overflow checking.
Monomial pow(const Monomial& m, unsigned k);
/// Exponents clamped to 1.
Monomial radical(const Monomial& m);

}  // namespace monideal

#endif  // MONIDEAL_MONOMIAL_HPP
