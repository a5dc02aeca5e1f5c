#ifndef ULW_CORE_HPP
#define ULW_CORE_HPP

#include <compare>
#include <vector>

#include "ulw/word.hpp"

namespace ulw {

/// Lexicographic comparison induced by `order`; a prefix of the other word
/// compares smaller. All three arguments must share one degree.
std::strong_ordering compare_lex(const Word& u, const Word& v, const TotalOrder& order);

/// The |w| rotations of w, w itself first.
std::vector<Word> conjugates(const Word& w);

/// Possibly-overlapping occurrences of u in w. In cyclic mode occurrences
/// are counted in ww at start positions 1..|w| (requires |u| <= |w|).
std::size_t count_occurrences(const Word& w, const Word& u, bool cyclic);

/// The order defined by u: letters of alp(u) ranked by first occurrence.
PartialAlphabetOrder defined_order(const Word& u);

/// True iff w is strictly smaller than every proper conjugate under `order`.
/// Comparison is against conjugates, not suffixes, so non-primitive words
/// are rejected by their equal rotations.
bool is_lyndon(const Word& w, const TotalOrder& order);

/// All total orders for which w is Lyndon, by brute force over the n! orders.
/// Guarded at degree <= 8.
std::vector<TotalOrder> lyndon_orders(const Word& w);

struct WordPredicates {
  bool primitive = false;
  bool unbordered = false;
  bool cyclically_square_free = false;
};

WordPredicates word_predicates(const Word& w);

/// True iff no word of X is a prefix of another. Rejects the empty word.
bool is_prefix_code(const std::vector<Word>& words);

}  // namespace ulw

#endif  // ULW_CORE_HPP
