#include "monideal/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace monideal {

namespace {

constexpr std::uint32_t kMaxExponent = std::numeric_limits<Exponent>::max();

void require_same_dim(const Monomial& a, const Monomial& b) {
  if (a.dim() != b.dim())
    throw UsageError("monomial dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
}

Exponent checked(std::uint32_t e) {
  if (e > kMaxExponent) throw ArithmeticError("exponent overflow: " + std::to_string(e));
  return static_cast<Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::size_t dim) : exps_(dim, 0) {}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) { refresh(); }

Monomial Monomial::variable(std::size_t dim, VarId var, Exponent power) {
  if (var >= dim) throw UsageError("variable index " + std::to_string(var) + " out of range");
  std::vector<Exponent> e(dim, 0);
  e[var] = power;
  return Monomial(std::move(e));
}

Monomial Monomial::from_support(std::size_t dim, const VarSet& support) {
  if (support.extent() > dim) throw UsageError("support exceeds ring dimension");
  std::vector<Exponent> e(dim, 0);
  support.for_each([&](VarId v) { e[v] = 1; });
  return Monomial(std::move(e));
}

void Monomial::refresh() {
  std::uint32_t deg = 0;
  std::uint64_t sig = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    deg += exps_[i];
    if (exps_[i] != 0) sig |= std::uint64_t{1} << (i & 63);
  }
  degree_ = deg;
  signature_ = sig;
}

bool Monomial::is_square_free() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::is_pure_power() const {
  return std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e != 0; }) == 1;
}

VarSet Monomial::support() const {
  VarSet s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) s.insert(i);
  return s;
}

Exponent Monomial::max_exponent() const {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree_ <=> o.degree_; c != 0) return c;
  if (auto c = exps_.size() <=> o.exps_.size(); c != 0) return c;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != o.exps_[i]) return o.exps_[i] <=> exps_[i];
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = exps_.size();
  for (Exponent e : exps_) h = h * 1000003U ^ e;
  return h;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  if (a.degree() > b.degree()) return false;
  if ((a.signature() & ~b.signature()) != 0) return false;
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] > eb[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  std::vector<Exponent> e(a.dim());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  std::vector<Exponent> e(a.dim());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial mul(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  std::vector<Exponent> e(a.dim());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked(std::uint32_t{a[i]} + b[i]);
  return Monomial(std::move(e));
}

Monomial exact_quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw UsageError("exact quotient requires the divisor to divide");
  std::vector<Exponent> e(a.dim());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<Exponent>(a[i] - b[i]);
  return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  std::vector<Exponent> e(a.dim());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] > b[i] ? static_cast<Exponent>(a[i] - b[i]) : 0;
  return Monomial(std::move(e));
}

Monomial pow(const Monomial& m, unsigned k) {
  std::vector<Exponent> e(m.dim());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = checked(static_cast<std::uint32_t>(std::min<std::uint64_t>(std::uint64_t{m[i]} * k, kMaxExponent + 1ULL)));
  return Monomial(std::move(e));
}

Monomial radical(const Monomial& m) {
  std::vector<Exponent> e(m.dim());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i] != 0 ? 1 : 0;
  return Monomial(std::move(e));
}

}  // namespace monideal
