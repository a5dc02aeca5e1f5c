#ifndef ULW_ULW_HPP
#define ULW_ULW_HPP

#include <optional>
#include <string>
#include <vector>

#include "ulw/core.hpp"
#include "ulw/word.hpp"

#include "json.hpp"

namespace ulw {

enum class UlwMode { definitional, order_defining, counting };

std::string to_string(UlwMode mode);

/// Failure evidence. For the definitional and order-defining checks the
/// witness is a conjugate (1-based index) together with the Lyndon orders
/// found for it; every other failing conjugate index is listed as well.
/// For the counting check it is a cyclic factor violating the occurrence
/// formula, with its observed and expected counts; conjugate_index is then
/// the first start position of that factor.
struct UlwWitness {
  std::size_t conjugate_index = 0;
  std::optional<Word> conjugate;
  std::vector<TotalOrder> found_orders;
  std::vector<std::size_t> failing_conjugates;
  std::vector<Word> failing_conjugate_words;  // parallel to failing_conjugates
  std::optional<Word> factor;
  std::size_t count = 0;
  std::size_t expected = 0;
  std::string reason;
};

struct UlwReport {
  bool is_ulw = false;
  UlwMode mode = UlwMode::counting;
  int degree = 0;
  std::size_t length = 0;
  std::optional<UlwWitness> witness;

  nlohmann::json to_json() const;
};

/// Checks whether w is a universal Lyndon word.
///   definitional:   |w| = n! and every conjugate is Lyndon for exactly one
///                   order (degree <= 8; uses the factorial-time oracle).
///   order_defining: |w| = n! and every conjugate is Lyndon with respect to
///                   the (total) order it defines.
///   counting:       every letter of the alphabet and every cyclic factor u
///                   satisfies |w|^c_u = (n-|alp(u)|)!, which forces |w| = n!.
/// The three modes agree on every input.
UlwReport is_ulw(const Word& w, UlwMode mode = UlwMode::counting);

/// Convenience: counting-mode boolean.
bool is_ulw_quick(const Word& w);

/// The shortest prefix of the i-th conjugate (1-based) occurring exactly
/// once as a cyclic factor of w; w must be a ULW.
Word shortest_unrepeated_prefix(const Word& w, std::size_t i);

/// MT(w): the minimal total order-defining words of the ULW w, i.e. the
/// shortest unrepeated prefixes of all conjugates. Sorted, size n!.
std::vector<Word> mt(const Word& w);

/// The unique minimal order-defining cyclic factor of the ULW w for the
/// partial alphabet order p: the shortest prefix u with alp(u) = I of any
/// conjugate whose defined order extends p. Returns the empty word for an
/// empty chain.
Word minimal_order_defining_word(const Word& w, const PartialAlphabetOrder& p);

/// All stretches v of w with u a factor of v and alp(v) = alp(u).
/// u must be a non-empty cyclic factor of w. Sorted.
std::vector<Word> stretch_extensions(const Word& w, const Word& u);

/// True iff for every cyclic factor asa with a outside alp(s), every letter
/// b outside alp(s) yields bsb as a cyclic factor. Holds for every ULW.
bool check_stretch_closure(const Word& w);

/// A cyclic word represented by its lexicographically least rotation under
/// the natural order 1<2<...<n.
struct CyclicWord {
  Word canonical;

  bool operator==(const CyclicWord& other) const = default;
  std::strong_ordering operator<=>(const CyclicWord& other) const = default;
};

/// Least rotation; with up_to_isomorphism also minimizes over all n!
/// letter renamings (guarded at degree <= 4).
CyclicWord canonicalize(const Word& w, bool up_to_isomorphism = false);

/// 0-based start index of the least rotation under the natural order.
std::size_t least_rotation_index(const Word& w);

/// True iff every permutation of n-1 distinct letters occurs exactly once
/// as a cyclic factor. w must be a ULW. Degrees 1 and 2 are Jackson by
/// convention (the Jackson graph is defined only for n > 2).
bool is_jackson_type(const Word& w);

/// True iff |w| = n! and the conjugates define pairwise distinct total
/// orders. Every ULW is a universal order word; the converse fails.
bool is_universal_order_word(const Word& w);

Word reverse(const Word& w);

}  // namespace ulw

#endif  // ULW_ULW_HPP
