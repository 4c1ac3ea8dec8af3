#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace turan {

using Vertex = int;

/// Dynamic bitset over vertex indices 0..capacity-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
  VertexSet(int capacity, std::initializer_list<Vertex> members) : VertexSet(capacity) {
    for (Vertex v : members) set(v);
  }

  static VertexSet full(int capacity) {
    VertexSet s(capacity);
    for (Vertex v = 0; v < capacity; ++v) s.set(v);
    return s;
  }

  int capacity() const noexcept { return capacity_; }

  void set(Vertex v) { words_[v >> 6] |= bit(v); }
  void reset(Vertex v) { words_[v >> 6] &= ~bit(v); }
  bool test(Vertex v) const { return (words_[v >> 6] & bit(v)) != 0; }
  bool contains(Vertex v) const { return v >= 0 && v < capacity_ && test(v); }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1.
  Vertex first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  /// Smallest member greater than v, or -1.
  Vertex next(Vertex v) const noexcept {
    ++v;
    if (v >= capacity_) return -1;
    std::size_t i = static_cast<std::size_t>(v) >> 6;
    std::uint64_t w = words_[i] & (~0ULL << (v & 63));
    while (true) {
      if (w) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a.subtract(b); }

  int intersection_count(const VertexSet& o) const noexcept {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static std::uint64_t bit(Vertex v) noexcept { return 1ULL << (v & 63); }

  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace turan
