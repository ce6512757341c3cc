#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace gtri {

/// Permutation of the vertex labels {0, ..., size-1} of a simplex, size <= 5.
class Perm {
 public:
  static constexpr int kMaxSize = 5;

  Perm() : Perm(0) {}
  explicit Perm(int size) : size_(static_cast<std::uint8_t>(size)) {
    for (int i = 0; i < kMaxSize; ++i) img_[i] = static_cast<std::uint8_t>(i);
  }
  Perm(std::initializer_list<int> images);

  static Perm identity(int size) { return Perm(size); }

  int size() const { return size_; }
  int operator[](int i) const { return img_[i]; }
  void set(int i, int value) { img_[i] = static_cast<std::uint8_t>(value); }

  /// (a * b)[i] == a[b[i]]
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  /// +1 for even, -1 for odd.
  int sign() const;
  bool is_identity() const;
  /// True when the images form a permutation of {0..size-1}.
  bool is_bijection() const;

  /// Image of a label bitmask.
  std::uint8_t apply(std::uint8_t mask) const;
  /// Agreement on the labels in mask only.
  bool agrees_on(std::uint8_t mask, const Perm& other) const;

  std::string str() const;

  friend bool operator==(const Perm& a, const Perm& b) {
    if (a.size_ != b.size_) return false;
    for (int i = 0; i < a.size_; ++i)
      if (a.img_[i] != b.img_[i]) return false;
    return true;
  }
  friend bool operator<(const Perm& a, const Perm& b);

  /// All permutations of {0..n-1} in lexicographic order of image strings.
  static const std::array<Perm, 120>& all5();

 private:
  std::array<std::uint8_t, kMaxSize> img_{};
  std::uint8_t size_ = 0;
};

/// Order-preserving bijection between two label sets of equal size, extended
/// to a permutation of {0..n-1} by sending the complement to the complement
/// in increasing order.
Perm order_preserving(int n, std::uint8_t from_mask, std::uint8_t to_mask);

inline int popcount(std::uint8_t mask) { return __builtin_popcount(mask); }

}  // namespace gtri
