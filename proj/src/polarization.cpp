#include "monideal/polarization.hpp"

#include <algorithm>
#include <set>

#include "monideal/hypergraph.hpp"

namespace monideal {

PolarContext::PolarContext(std::size_t base_dim, std::vector<unsigned> copies_per_var)
    : base_dim_(base_dim), copies_(std::move(copies_per_var)) {
  if (copies_.size() != base_dim_) throw UsageError("one copy count per base variable is required");
  offset_.reserve(base_dim_);
  for (unsigned c : copies_) {
    offset_.push_back(polar_dim_);
    polar_dim_ += c;
  }
  if (polar_dim_ > VarSet::kCapacity)
    throw ResourceError("polarized ring needs " + std::to_string(polar_dim_) + " variables, capacity is " +
                        std::to_string(VarSet::kCapacity));
}

VarId PolarContext::flat(ShadowVar s) const {
  if (s.base >= base_dim_ || s.copy < 1 || s.copy > copies_[s.base])
    throw UsageError("shadow variable outside the polarized ring");
  return offset_[s.base] + (s.copy - 1);
}

ShadowVar PolarContext::shadow(VarId flat_index) const {
  if (flat_index >= polar_dim_) throw UsageError("flat index outside the polarized ring");
  auto it = std::upper_bound(offset_.begin(), offset_.end(), flat_index);
  // Last block starting at or before flat_index; zero-width blocks never qualify.
  VarId base = static_cast<VarId>(it - offset_.begin()) - 1;
  return {base, static_cast<unsigned>(flat_index - offset_[base] + 1)};
}

VarNames PolarContext::names(const VarNames& base_names) const {
  std::vector<std::string> names;
  names.reserve(polar_dim_);
  for (VarId v = 0; v < polar_dim_; ++v) {
    ShadowVar s = shadow(v);
    names.push_back(base_names.name(s.base) + "_" + std::to_string(s.copy));
  }
  return VarNames(std::move(names));
}

Monomial polarize_monomial(const PolarContext& ctx, const Monomial& m) {
  if (m.dim() != ctx.base_dim()) throw UsageError("monomial does not live in the base ring");
  std::vector<Exponent> e(ctx.polar_dim(), 0);
  for (VarId v = 0; v < m.dim(); ++v)
    for (unsigned k = 1; k <= m[v]; ++k) e[ctx.flat({v, k})] = 1;
  return Monomial(std::move(e));
}

Polarization polarize_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) throw UsageError("polarization needs a proper nonzero ideal");
  std::vector<unsigned> copies(ideal.ring_dim(), 0);
  for (const auto& g : ideal.generators())
    for (VarId v = 0; v < g.dim(); ++v) copies[v] = std::max<unsigned>(copies[v], g[v]);
  Polarization out{PolarContext(ideal.ring_dim(), std::move(copies)), {}};
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(polarize_monomial(out.context, g));
  out.ideal = MonomialIdeal(out.context.polar_dim(), std::move(gens));
  return out;
}

MonomialPrime depolarize_prime(const PolarContext& ctx, const MonomialPrime& prime) {
  if (prime.ring_dim() != ctx.polar_dim()) throw UsageError("prime does not live in the polarized ring");
  VarSet base;
  prime.vars().for_each([&](VarId v) { base.insert(ctx.shadow(v).base); });
  return MonomialPrime(ctx.base_dim(), base);
}

MonomialIdeal depolarize_ideal(const PolarContext& ctx, const MonomialIdeal& ideal) {
  if (ideal.ring_dim() != ctx.polar_dim()) throw UsageError("ideal does not live in the polarized ring");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(ctx.base_dim(), 0);
    for (VarId v = 0; v < g.dim(); ++v)
      if (g[v] != 0) e[ctx.shadow(v).base] += g[v];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ctx.base_dim(), std::move(gens));
}

bool has_shadow_prefix_property(const PolarContext& ctx, const MonomialIdeal& polarized) {
  for (const auto& g : polarized.generators()) {
    for (VarId base = 0; base < ctx.base_dim(); ++base) {
      bool gap = false;
      for (unsigned k = 1; k <= ctx.copies_per_var()[base]; ++k) {
        bool present = g[ctx.flat({base, k})] != 0;
        if (present && gap) return false;
        if (!present) gap = true;
      }
    }
  }
  return true;
}

bool check_one_shadow(const PolarContext& ctx, const MonomialIdeal& polarized, const MonomialPrime& prime) {
  if (!is_minimal_vertex_cover(hypergraph_of(polarized), prime.vars()))
    throw UsageError("check_one_shadow expects a minimal prime of the polarization");
  std::set<VarId> bases;
  bool ok = true;
  prime.vars().for_each([&](VarId v) { ok = bases.insert(ctx.shadow(v).base).second && ok; });
  return ok;
}

MonomialPrime lift_minimal_prime(const PolarContext& ctx, const MonomialPrime& prime) {
  if (prime.ring_dim() != ctx.base_dim()) throw UsageError("prime does not live in the base ring");
  VarSet lifted;
  prime.vars().for_each([&](VarId v) { lifted.insert(ctx.flat({v, 1})); });
  return MonomialPrime(ctx.polar_dim(), lifted);
}

FaridiReport faridi_correspondence(const MonomialIdeal& ideal, int t, const Budget& budget) {
  if (!ideal.is_square_free()) throw UsageError("faridi_correspondence expects a square-free ideal");
  if (t < 1) throw UsageError("power must be positive");
  if (t > budget.max_power) throw ResourceError("power " + std::to_string(t) + " exceeds the max-power budget");
  FaridiReport report;
  report.power = t;
  MonomialIdeal pw = power(ideal, t);
  report.polarization = polarize_ideal(pw);
  report.polarized_primes = minimal_primes(report.polarization.ideal);
  report.base_primes = associated_primes(pw, budget).primes;

  std::set<MonomialPrime> hit;
  for (const auto& q : report.polarized_primes) {
    MonomialPrime p = depolarize_prime(report.polarization.context, q);
    if (std::binary_search(report.base_primes.begin(), report.base_primes.end(), p)) {
      ++report.fiber_sizes[p];
      hit.insert(p);
    } else {
      report.stray.push_back(q);
    }
  }
  report.into = report.stray.empty();
  report.onto = hit.size() == report.base_primes.size();
  return report;
}

}  // namespace monideal
