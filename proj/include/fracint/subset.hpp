#ifndef FRACINT_SUBSET_HPP
#define FRACINT_SUBSET_HPP

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fracint {

/// Subset of the ground set [n], stored as a multi-word bitmask.
///
/// Element labels are 1-based; element e lives in bit (e - 1). Cardinality is
/// cached. The default ordering is the canonical one used by Family: by
/// cardinality first, then by the mask read as an unsigned integer.
class Subset {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Subset() = default;
  /// Empty subset of [ground_n]. Throws std::invalid_argument if ground_n < 1.
  explicit Subset(int ground_n);

  /// Throws std::invalid_argument on labels outside [1, ground_n] or repeated labels.
  static Subset from_elements(int ground_n, std::span<const int> elements);
  static Subset from_elements(int ground_n, std::initializer_list<int> elements) {
    return from_elements(ground_n, std::span<const int>(elements.begin(), elements.size()));
  }
  /// Single-word constructor for ground sets of at most 64 elements.
  static Subset from_mask(int ground_n, Word mask);

  int ground_n() const noexcept { return ground_n_; }
  int cardinality() const noexcept { return cardinality_; }
  bool empty() const noexcept { return cardinality_ == 0; }
  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

  bool contains(int element) const noexcept;
  void insert(int element);
  void erase(int element);

  /// Ascending 1-based labels.
  std::vector<int> elements() const;
  /// Image under a relabelling; perm[e - 1] is the new label of element e.
  Subset relabelled(std::span<const int> perm) const;

  /// Space-separated ascending labels, as in the family text format.
  std::string str() const;

  friend bool operator==(const Subset& lhs, const Subset& rhs) noexcept {
    return lhs.ground_n_ == rhs.ground_n_ && lhs.words_ == rhs.words_;
  }
  friend std::strong_ordering operator<=>(const Subset& lhs, const Subset& rhs) noexcept;

 private:
  int ground_n_ = 0;
  int cardinality_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

/// |A ∩ B|. Both sets must share a ground set.
int intersection_size(const Subset& lhs, const Subset& rhs) noexcept;

inline int word_count(int ground_n) noexcept {
  return (ground_n + Subset::kWordBits - 1) / Subset::kWordBits;
}

}  // namespace fracint

#endif  // FRACINT_SUBSET_HPP
