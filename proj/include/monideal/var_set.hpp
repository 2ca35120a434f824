#ifndef MONIDEAL_VAR_SET_HPP
#define MONIDEAL_VAR_SET_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "monideal/errors.hpp"

namespace monideal {

using VarId = std::size_t;

/// Fixed-capacity bit set over variable indices. Four 64-bit words cover the
/// polarized rings we build (d*t up to 256); most instances fit in word 0.
class VarSet {
public:
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kCapacity = kWords * 64;

  VarSet() = default;
  VarSet(std::initializer_list<VarId> vars) {
    for (VarId v : vars) insert(v);
  }

  static VarSet range(std::size_t n) {
    VarSet s;
    for (VarId v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  static void check_index(VarId v) {
    if (v >= kCapacity)
      throw ResourceError("variable index " + std::to_string(v) + " exceeds bit-set capacity " +
                          std::to_string(kCapacity));
  }

  void insert(VarId v) {
    check_index(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(VarId v) {
    if (v < kCapacity) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  bool contains(VarId v) const {
    return v < kCapacity && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member; kCapacity when empty.
  VarId first() const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return kCapacity;
  }

  /// One past the largest member; 0 when empty.
  std::size_t extent() const {
    for (std::size_t i = kWords; i-- > 0;)
      if (words_[i] != 0) return i * 64 + 64 - static_cast<std::size_t>(std::countl_zero(words_[i]));
    return 0;
  }

  bool intersects(const VarSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  bool subset_of(const VarSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  VarSet& operator|=(const VarSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VarSet& operator&=(const VarSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VarSet& operator-=(const VarSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VarSet operator|(VarSet a, const VarSet& b) { return a |= b; }
  friend VarSet operator&(VarSet a, const VarSet& b) { return a &= b; }
  friend VarSet operator-(VarSet a, const VarSet& b) { return a -= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<VarId> members() const {
    std::vector<VarId> out;
    out.reserve(size());
    for_each([&](VarId v) { out.push_back(v); });
    return out;
  }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

  bool operator==(const VarSet&) const = default;

  /// Canonical order: smaller sets first, then lexicographic on the sorted
  /// member list.
  std::strong_ordering operator<=>(const VarSet& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t diff = words_[i] ^ o.words_[i];
      if (diff == 0) continue;
      std::uint64_t low = diff & (~diff + 1);
      // Equal sizes: whoever owns the lowest differing index sorts first.
      return (words_[i] & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }

private:
  std::array<std::uint64_t, kWords> words_{};
};

struct VarSetHash {
  std::size_t operator()(const VarSet& s) const { return s.hash(); }
};

}  // namespace monideal

#endif  // MONIDEAL_VAR_SET_HPP
