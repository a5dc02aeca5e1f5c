#ifndef ULW_ENUMERATE_HPP
#define ULW_ENUMERATE_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ulw/ulw.hpp"
#include "ulw/word.hpp"

namespace ulw {

/// The census of universal Lyndon words of one degree. canonical_words
/// holds the least rotation of every labeled cyclic ULW, sorted; the
/// isomorphism-class counts refine the labeled census.
struct UlwCensus {
  int degree = 0;
  std::vector<Word> canonical_words;
  std::size_t labeled_count = 0;
  std::size_t iso_class_count = 0;
  std::size_t jackson_count = 0;      // up to isomorphism
  std::size_t non_jackson_count = 0;  // up to isomorphism
  std::size_t labeled_jackson_count = 0;
  std::size_t labeled_non_jackson_count = 0;
  /// Degrees 1 and 2 are classified Jackson by convention: J(n) exists
  /// only for n > 2.
  bool jackson_by_convention = false;
};

struct EnumerateOptions {
  unsigned threads = 0;         // 0 = hardware concurrency
  std::ostream* progress = nullptr;
};

/// Exhaustive, pruned enumeration of all cyclic ULWs of the given degree.
/// Words are built letter by letter; a prefix dies as soon as any window of
/// length <= n+1 exceeds its (n-|alp|)! budget or a smaller rotation is
/// detectable. Completed candidates are confirmed with the counting check.
/// Guarded at degree <= 4.
UlwCensus enumerate_ulws(int degree, const EnumerateOptions& options = {});

/// Census over an externally supplied word list; every word must pass the
/// counting check (domain error naming the first word that does not).
UlwCensus census_from_words(int degree, const std::vector<Word>& words);

struct IsoClass {
  Word representative;          // canonical up to isomorphism and rotation
  bool jackson = false;
  std::vector<Word> members;    // labeled canonical forms, sorted
};

/// Splits a census into isomorphism classes with Jackson classification.
std::vector<IsoClass> classify_ulws(const UlwCensus& census);

/// JSON-lines output: one record per canonical word, then a summary record.
void census_jsonl(const UlwCensus& census, std::ostream& out);

}  // namespace ulw

#endif  // ULW_ENUMERATE_HPP
