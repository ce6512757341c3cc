#include "gtri/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtri {

Perm::Perm(std::initializer_list<int> images) : Perm(static_cast<int>(images.size())) {
  if (images.size() > kMaxSize) throw std::invalid_argument("Perm: too many labels");
  int i = 0;
  for (int v : images) img_[i++] = static_cast<std::uint8_t>(v);
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm out(size_);
  for (int i = 0; i < size_; ++i) out.img_[i] = img_[rhs.img_[i]];
  return out;
}

Perm Perm::inverse() const {
  if (!is_bijection()) throw std::invalid_argument("Perm::inverse: not a bijection");
  Perm out(size_);
  for (int j = 0; j < size_; ++j)
    for (int i = 0; i < size_; ++i)
      if (img_[i] == j) out.img_[j] = static_cast<std::uint8_t>(i);
  return out;
}

int Perm::sign() const {
  int inversions = 0;
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j)
      if (img_[i] > img_[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size_; ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Perm::is_bijection() const {
  unsigned seen = 0;
  for (int i = 0; i < size_; ++i) {
    if (img_[i] >= size_) return false;
    seen |= 1u << img_[i];
  }
  return seen == (1u << size_) - 1;
}

std::uint8_t Perm::apply(std::uint8_t mask) const {
  std::uint8_t out = 0;
  for (int i = 0; i < size_; ++i)
    if (mask & (1u << i)) out |= static_cast<std::uint8_t>(1u << img_[i]);
  return out;
}

bool Perm::agrees_on(std::uint8_t mask, const Perm& other) const {
  for (int i = 0; i < size_; ++i)
    if ((mask & (1u << i)) && img_[i] != other.img_[i]) return false;
  return true;
}

std::string Perm::str() const {
  std::string s;
  for (int i = 0; i < size_; ++i) s.push_back(static_cast<char>('0' + img_[i]));
  return s;
}

bool operator<(const Perm& a, const Perm& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return std::lexicographical_compare(a.img_.begin(), a.img_.begin() + a.size_,
                                      b.img_.begin(), b.img_.begin() + b.size_);
}

const std::array<Perm, 120>& Perm::all5() {
  static const std::array<Perm, 120> table = [] {
    std::array<Perm, 120> out;
    std::array<int, 5> p{0, 1, 2, 3, 4};
    int k = 0;
    do {
      out[k++] = Perm{p[0], p[1], p[2], p[3], p[4]};
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return table;
}

Perm order_preserving(int n, std::uint8_t from_mask, std::uint8_t to_mask) {
  if (popcount(from_mask) != popcount(to_mask))
    throw std::invalid_argument("order_preserving: label sets differ in size");
  Perm out(n);
  int src = 0, dst = 0;
  auto advance = [n](int pos, std::uint8_t mask, bool inside) {
    while (pos < n && (((mask >> pos) & 1u) != 0) != inside) ++pos;
    return pos;
  };
  for (bool inside : {true, false}) {
    src = advance(0, from_mask, inside);
    dst = advance(0, to_mask, inside);
    while (src < n) {
      out.set(src, dst);
      src = advance(src + 1, from_mask, inside);
      dst = advance(dst + 1, to_mask, inside);
    }
  }
  return out;
}

}  // namespace gtri
