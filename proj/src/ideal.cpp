#include "monideal/ideal.hpp"

#include <algorithm>
#include <string>

namespace monideal {

namespace {

void require_same_ring(std::size_t a, std::size_t b) {
  if (a != b)
    throw UsageError("ring dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  // Ascending degree: only earlier survivors can divide a candidate.
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t ring_dim, std::vector<Monomial> generators)
    : ring_dim_(ring_dim) {
  for (const auto& g : generators)
    if (g.dim() != ring_dim)
      throw UsageError("generator dimension " + std::to_string(g.dim()) +
                       " does not match ring dimension " + std::to_string(ring_dim));
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_square_free() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_square_free(); });
}

VarSet MonomialIdeal::support() const {
  VarSet s;
  for (const auto& g : gens_) s |= g.support();
  return s;
}

Monomial MonomialIdeal::lcm_of_generators() const {
  Monomial l = Monomial::unit(ring_dim_);
  for (const auto& g : gens_) l = lcm(l, g);
  return l;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ring(ring_dim_, m.dim());
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(ring_dim_, other.ring_dim_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialPrime::MonomialPrime(std::size_t ring_dim, VarSet vars) : ring_dim_(ring_dim), vars_(vars) {
  if (vars_.empty()) throw UsageError("a monomial prime needs at least one variable");
  if (vars_.extent() > ring_dim_) throw UsageError("prime variable outside the ring");
}

MonomialIdeal MonomialPrime::ideal() const {
  std::vector<Monomial> gens;
  vars_.for_each([&](VarId v) { gens.push_back(Monomial::variable(ring_dim_, v)); });
  return MonomialIdeal(ring_dim_, std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring_dim(), b.ring_dim());
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring_dim(), std::move(gens));
}

MonomialIdeal add_generator(const MonomialIdeal& ideal, const Monomial& m) {
  require_same_ring(ideal.ring_dim(), m.dim());
  std::vector<Monomial> gens;
  gens.reserve(ideal.size() + 1);
  gens.push_back(m);
  for (const auto& g : ideal.generators())
    if (!divides(m, g)) gens.push_back(g);
  return MonomialIdeal(ideal.ring_dim(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring_dim(), b.ring_dim());
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(mul(f, g));
  return MonomialIdeal(a.ring_dim(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int t) {
  if (t < 0) throw UsageError("power exponent must be non-negative");
  MonomialIdeal result = MonomialIdeal::unit(ideal.ring_dim());
  for (int i = 0; i < t; ++i) result = product(result, ideal);
  return result;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  require_same_ring(ideal.ring_dim(), m.dim());
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(colon_quotient(g, m));
  return MonomialIdeal(ideal.ring_dim(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring_dim(), b.ring_dim());
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(lcm(f, g));
  return MonomialIdeal(a.ring_dim(), std::move(gens));
}

MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals, std::size_t ring_dim) {
  MonomialIdeal acc = MonomialIdeal::unit(ring_dim);
  for (const auto& i : ideals) acc = intersect(acc, i);
  return acc;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(radical(g));
  return MonomialIdeal(ideal.ring_dim(), std::move(gens));
}

}  // namespace monideal
