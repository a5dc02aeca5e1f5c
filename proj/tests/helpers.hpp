#ifndef ULW_TESTS_HELPERS_HPP
#define ULW_TESTS_HELPERS_HPP

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "ulw/core.hpp"
#include "ulw/word.hpp"

namespace helpers {

inline ulw::Word W(std::string_view text, int degree = 0) {
  return ulw::Word::parse(text, degree);
}

inline ulw::TotalOrder O(std::vector<ulw::Letter> ranking) {
  return ulw::TotalOrder(std::move(ranking));
}

inline std::vector<std::string> strs(const std::vector<ulw::Word>& words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const ulw::Word& w : words) out.push_back(w.str());
  return out;
}

// Independent least-rotation oracle: materialize every rotation and take
// the natural minimum.
inline ulw::Word least_rotation_brute(const ulw::Word& w) {
  ulw::Word best = w;
  for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, w.rotated(i));
  return best;
}

// Enumerates every word of the given length over {1..degree} and calls fn.
template <typename Fn>
void for_all_words(int degree, std::size_t length, Fn&& fn) {
  std::vector<ulw::Letter> letters(length, 1);
  for (;;) {
    fn(ulw::Word(letters, degree));
    std::size_t i = 0;
    while (i < length && letters[i] == degree) letters[i++] = 1;
    if (i == length) break;
    ++letters[i];
  }
}

}  // namespace helpers

#endif  // ULW_TESTS_HELPERS_HPP
