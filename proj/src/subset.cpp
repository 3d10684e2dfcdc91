#include "fracint/subset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fracint {

Subset::Subset(int ground_n) : ground_n_(ground_n) {
  if (ground_n < 1) throw std::invalid_argument("ground set size must be positive");
  words_.assign(static_cast<std::size_t>(word_count(ground_n)), Word{0});
}

Subset Subset::from_elements(int ground_n, std::span<const int> elements) {
  Subset out(ground_n);
  for (int e : elements) {
    if (e < 1 || e > ground_n) {
      throw std::invalid_argument("element " + std::to_string(e) + " outside [1, " +
                                  std::to_string(ground_n) + "]");
    }
    if (out.contains(e)) throw std::invalid_argument("element " + std::to_string(e) + " repeated");
    out.insert(e);
  }
  return out;
}

Subset Subset::from_mask(int ground_n, Word mask) {
  if (ground_n > kWordBits) throw std::invalid_argument("from_mask needs ground_n <= 64");
  Subset out(ground_n);
  if (ground_n < kWordBits && (mask >> ground_n) != 0) {
    throw std::invalid_argument("mask has bits outside the ground set");
  }
  out.words_[0] = mask;
  out.cardinality_ = std::popcount(mask);
  return out;
}

bool Subset::contains(int element) const noexcept {
  if (element < 1 || element > ground_n_) return false;
  const auto bit = static_cast<unsigned>(element - 1);
  return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1U;
}

void Subset::insert(int element) {
  if (element < 1 || element > ground_n_) throw std::invalid_argument("element outside ground set");
  if (contains(element)) return;
  const auto bit = static_cast<unsigned>(element - 1);
  words_[bit / kWordBits] |= Word{1} << (bit % kWordBits);
  ++cardinality_;
}

void Subset::erase(int element) {
  if (!contains(element)) return;
  const auto bit = static_cast<unsigned>(element - 1);
  words_[bit / kWordBits] &= ~(Word{1} << (bit % kWordBits));
  --cardinality_;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality_));
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (Word bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<int>(w) * kWordBits + std::countr_zero(bits) + 1);
    }
  }
  return out;
}

Subset Subset::relabelled(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(ground_n_)) {
    throw std::invalid_argument("relabelling must cover the whole ground set");
  }
  Subset out(ground_n_);
  for (int e : elements()) out.insert(perm[static_cast<std::size_t>(e - 1)]);
  return out;
}

std::string Subset::str() const {
  std::string out;
  for (int e : elements()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

std::strong_ordering operator<=>(const Subset& lhs, const Subset& rhs) noexcept {
  if (auto c = lhs.ground_n_ <=> rhs.ground_n_; c != 0) return c;
  if (auto c = lhs.cardinality_ <=> rhs.cardinality_; c != 0) return c;
  for (std::size_t w = lhs.words_.size(); w-- > 0;) {
    if (auto c = lhs.words_[w] <=> rhs.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

int intersection_size(const Subset& lhs, const Subset& rhs) noexcept {
  const auto a = lhs.words();
  const auto b = rhs.words();
  int count = 0;
  for (std::size_t w = 0; w < std::min(a.size(), b.size()); ++w) count += std::popcount(a[w] & b[w]);
  return count;
}

}  // namespace fracint
