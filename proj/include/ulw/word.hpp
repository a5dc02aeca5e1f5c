#ifndef ULW_WORD_HPP
#define ULW_WORD_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulw {

/// Letters are integers 1..n for the ambient degree n.
using Letter = int;

/// Thrown when an operation is asked to exceed a hard capacity guard
/// (factorial-time oracles, isomorphism canonicalization, enumeration).
class capacity_error : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Thrown by refinement-script execution; carries the 1-based step index
/// (0 = before any step, e.g. an empty or incomplete script).
class script_error : public std::runtime_error {
public:
  script_error(std::size_t step, const std::string& msg)
      : std::runtime_error("script step " + std::to_string(step) + ": " + msg),
        step_(step) {}
  std::size_t step() const { return step_; }

private:
  std::size_t step_;
};

/// A finite word over the alphabet {1..degree}. May be empty.
/// The degree travels with the word so cross-degree operations fail loudly.
class Word {
public:
  Word() = default;
  Word(std::vector<Letter> letters, int degree);

  /// Parses the shared text format: for degree <= 9 a digit string
  /// ("212313"), otherwise comma-separated integers ("1,2,10,3").
  /// degree = 0 infers the degree from the maximum letter.
  /// Throws std::invalid_argument with a position diagnostic on bad input.
  static Word parse(std::string_view text, int degree = 0);

  int degree() const { return degree_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  /// Letter at position i of the doubled word ww (i < 2|w|).
  Letter cyclic_at(std::size_t i) const { return letters_[i % letters_.size()]; }

  /// The conjugate starting at 0-based position i.
  Word rotated(std::size_t i) const;
  Word reversed() const;
  /// The cyclic factor of length len starting at 0-based position start.
  Word cyclic_factor(std::size_t start, std::size_t len) const;
  Word prefix(std::size_t len) const;

  /// Bitmask of occurring letters (bit a-1 for letter a) and its popcount.
  std::uint32_t alphabet_mask() const;
  int alphabet_size() const;

  std::string str() const;

  bool operator==(const Word& other) const = default;
  /// Natural ordering: lexicographic by letters (prefixes first), then degree.
  std::strong_ordering operator<=>(const Word& other) const {
    if (auto c = letters_ <=> other.letters_; c != 0) return c;
    return degree_ <=> other.degree_;
  }

private:
  std::vector<Letter> letters_;
  int degree_ = 0;
};

/// A total order on {1..degree}: ranking_[0] is the smallest letter.
class TotalOrder {
public:
  explicit TotalOrder(std::vector<Letter> ranking);
  static TotalOrder natural(int degree);

  int degree() const { return static_cast<int>(ranking_.size()); }
  int rank(Letter a) const { return rank_[static_cast<std::size_t>(a)]; }
  const std::vector<Letter>& ranking() const { return ranking_; }

  /// "2<1<3" for degree <= 9, "2,1,3" otherwise.
  std::string str() const;

  bool operator==(const TotalOrder& other) const { return ranking_ == other.ranking_; }
  std::strong_ordering operator<=>(const TotalOrder& other) const {
    return ranking_ <=> other.ranking_;
  }

private:
  std::vector<Letter> ranking_;
  std::vector<int> rank_;  // indexed by letter, rank_[0] unused
};

/// All n! total orders on {1..degree} in lexicographic ranking order.
std::vector<TotalOrder> all_orders(int degree);

/// A total order on a subset I of {1..degree} with every element of I
/// preceding every letter outside I; letters outside I are incomparable.
/// Size >= degree-1 determines a total order (the missing letter is last).
class PartialAlphabetOrder {
public:
  PartialAlphabetOrder(std::vector<Letter> chain, int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return chain_.size(); }
  const std::vector<Letter>& chain() const { return chain_; }
  std::uint32_t chain_mask() const;

  bool is_total() const { return chain_.size() + 1 >= static_cast<std::size_t>(degree_); }
  /// The determined total order; requires is_total().
  TotalOrder to_total() const;
  /// True when this order is contained in the given total order, i.e. the
  /// ranking of `order` begins with the chain.
  bool prefix_of(const TotalOrder& order) const;

  std::string str() const;

  bool operator==(const PartialAlphabetOrder& other) const = default;

private:
  std::vector<Letter> chain_;
  int degree_ = 0;
};

std::uint64_t factorial(int n);

}  // namespace ulw

#endif  // ULW_WORD_HPP
