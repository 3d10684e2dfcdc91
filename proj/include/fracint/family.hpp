#ifndef FRACINT_FAMILY_HPP
#define FRACINT_FAMILY_HPP

#include "fracint/fraction.hpp"
#include "fracint/subset.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fracint {

/// Distinct subsets of a common ground set, held in canonical order
/// (cardinality, then mask value). Indices in reports refer to this order.
class Family {
 public:
  Family() = default;
  /// Sorts members canonically. Throws std::invalid_argument on duplicates
  /// or members over a different ground set.
  Family(int ground_n, std::vector<Subset> members);

  int ground_n() const noexcept { return ground_n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Subset>& members() const noexcept { return members_; }
  const Subset& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int ground_n_ = 1;
  std::vector<Subset> members_;
};

/// Raised by the family and matrix text parsers; carries the 1-based line number.
class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, const std::string& message)
      : std::invalid_argument("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Text format: `n=<int>` on the first line, then one set per non-empty line as
/// ascending space-separated 1-based labels. Lines starting with `#` are comments.
Family parse_family(std::istream& in);
Family parse_family(std::string_view text);
void write_family(std::ostream& out, const Family& family);
std::string format_family(const Family& family);

struct IndexPair {
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct PairWitness {
  IndexPair pair;
  Fraction fraction;
};

struct VerificationReport {
  bool valid = true;
  /// Unordered pairs (first < second, 0-based) that fail the property.
  std::vector<IndexPair> violations;
  /// For each passing pair, the smallest fraction of L that certified it.
  std::vector<PairWitness> pair_witnesses;
};

/// The certifying fraction if some a/b in L has b|A∩B| = a|A| or b|A∩B| = a|B|.
/// Throws std::invalid_argument when A == B or the ground sets differ.
std::optional<Fraction> is_fractional_pair(const Subset& a, const Subset& b, const LSet& l);

VerificationReport verify_family(const Family& family, const LSet& l, bool collect_witnesses = true);

/// Pairs in which one member bisects the other. Throws std::invalid_argument
/// naming the first odd-sized member.
VerificationReport verify_avoiding(const Family& family);
bool is_avoiding(const Family& family);

/// Common cardinality, if every member has the same one. Throws on an empty family.
std::optional<int> uniformity(const Family& family);

/// Sorted, deduplicated { floor(a t / b) : a/b in L }.
std::vector<int> induced_classical_L(int t, const LSet& l);

}  // namespace fracint

#endif  // FRACINT_FAMILY_HPP
