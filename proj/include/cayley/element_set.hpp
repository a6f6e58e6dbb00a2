#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cayley {

/// Fixed-universe bitset over element indices 0..n-1.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const noexcept { return n_; }

  bool contains(int i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void insert(int i) noexcept { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(int i) noexcept { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const noexcept {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const noexcept {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& o) const noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int b = 0; b < n_; ++b)
      if (contains(b)) out.push_back(b);
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace cayley
