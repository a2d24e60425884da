#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace twd::detail {

// Fixed-width bitset sized at runtime; word layout matches Graph::row().
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits)
      : bits_(bits), words_((static_cast<std::size_t>(bits) + 63) / 64, 0) {}

  int bits() const noexcept { return bits_; }

  void set(int i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void fill() noexcept {
    for (auto& w : words_) w = ~std::uint64_t{0};
    if (bits_ % 64 != 0 && !words_.empty()) {
      words_.back() = (std::uint64_t{1} << (bits_ % 64)) - 1;
    }
  }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const noexcept {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  void intersect(std::span<const std::uint64_t> row) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= row[i];
  }

  void subtract(std::span<const std::uint64_t> row) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~row[i];
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        f(static_cast<int>(w * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace twd::detail
