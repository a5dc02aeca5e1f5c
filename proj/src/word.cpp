#include "ulw/word.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace ulw {

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw std::invalid_argument("bad word \"" + std::string(text) + "\" at position " +
                              std::to_string(pos + 1) + ": " + what);
}

}  // namespace

Word::Word(std::vector<Letter> letters, int degree) : letters_(std::move(letters)), degree_(degree) {
  if (degree_ < 0) throw std::domain_error("negative degree");
  for (Letter a : letters_) {
    if (a < 1 || a > degree_)
      throw std::domain_error("letter " + std::to_string(a) + " outside alphabet {1.." +
                              std::to_string(degree_) + "}");
  }
}

Word Word::parse(std::string_view text, int degree) {
  std::vector<Letter> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc() || value < 1) parse_fail(text, pos, "expected a positive integer");
      letters.push_back(value);
      pos = static_cast<std::size_t>(ptr - text.data());
      if (pos < text.size()) {
        if (text[pos] != ',') parse_fail(text, pos, "expected ','");
        ++pos;
        if (pos == text.size()) parse_fail(text, pos, "trailing ','");
      }
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c < '1' || c > '9') parse_fail(text, i, "expected a digit 1-9");
      letters.push_back(c - '0');
    }
  }
  int inferred = 0;
  for (Letter a : letters) inferred = std::max(inferred, a);
  if (degree == 0) degree = inferred;
  if (inferred > degree)
    throw std::invalid_argument("word \"" + std::string(text) + "\" contains letter " +
                                std::to_string(inferred) + " above degree " + std::to_string(degree));
  return Word(std::move(letters), degree);
}

Word Word::rotated(std::size_t i) const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (std::size_t k = 0; k < letters_.size(); ++k) out.push_back(letters_[(i + k) % letters_.size()]);
  return Word(std::move(out), degree_);
}

Word Word::reversed() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  return Word(std::move(out), degree_);
}

Word Word::cyclic_factor(std::size_t start, std::size_t len) const {
  std::vector<Letter> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(letters_[(start + k) % letters_.size()]);
  return Word(std::move(out), degree_);
}

Word Word::prefix(std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<long>(len)), degree_);
}

std::uint32_t Word::alphabet_mask() const {
  std::uint32_t mask = 0;
  for (Letter a : letters_) mask |= 1u << (a - 1);
  return mask;
}

int Word::alphabet_size() const { return std::popcount(alphabet_mask()); }

std::string Word::str() const {
  std::string out;
  if (degree_ <= 9) {
    for (Letter a : letters_) out += static_cast<char>('0' + a);
  } else {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

TotalOrder::TotalOrder(std::vector<Letter> ranking) : ranking_(std::move(ranking)) {
  int n = static_cast<int>(ranking_.size());
  rank_.assign(static_cast<std::size_t>(n) + 1, -1);
  for (int r = 0; r < n; ++r) {
    Letter a = ranking_[static_cast<std::size_t>(r)];
    if (a < 1 || a > n || rank_[static_cast<std::size_t>(a)] != -1)
      throw std::domain_error("ranking is not a permutation of {1.." + std::to_string(n) + "}");
    rank_[static_cast<std::size_t>(a)] = r;
  }
}

TotalOrder TotalOrder::natural(int degree) {
  std::vector<Letter> ranking(static_cast<std::size_t>(degree));
  std::iota(ranking.begin(), ranking.end(), 1);
  return TotalOrder(std::move(ranking));
}

std::string TotalOrder::str() const {
  std::string out;
  const char* sep = degree() <= 9 ? "<" : ",";
  for (std::size_t i = 0; i < ranking_.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ranking_[i]);
  }
  return out;
}

std::vector<TotalOrder> all_orders(int degree) {
  std::vector<Letter> ranking(static_cast<std::size_t>(degree));
  std::iota(ranking.begin(), ranking.end(), 1);
  std::vector<TotalOrder> out;
  out.reserve(factorial(degree));
  do {
    out.emplace_back(ranking);
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return out;
}

PartialAlphabetOrder::PartialAlphabetOrder(std::vector<Letter> chain, int degree)
    : chain_(std::move(chain)), degree_(degree) {
  std::uint32_t seen = 0;
  for (Letter a : chain_) {
    if (a < 1 || a > degree_)
      throw std::domain_error("letter " + std::to_string(a) + " outside alphabet {1.." +
                              std::to_string(degree_) + "}");
    if (seen & (1u << (a - 1))) throw std::domain_error("chain letters must be distinct");
    seen |= 1u << (a - 1);
  }
}

std::uint32_t PartialAlphabetOrder::chain_mask() const {
  std::uint32_t mask = 0;
  for (Letter a : chain_) mask |= 1u << (a - 1);
  return mask;
}

TotalOrder PartialAlphabetOrder::to_total() const {
  if (!is_total()) throw std::domain_error("partial alphabet order of size " +
                                           std::to_string(chain_.size()) +
                                           " does not determine a total order on {1.." +
                                           std::to_string(degree_) + "}");
  std::vector<Letter> ranking = chain_;
  std::uint32_t mask = chain_mask();
  for (Letter a = 1; a <= degree_; ++a)
    if (!(mask & (1u << (a - 1)))) ranking.push_back(a);
  return TotalOrder(std::move(ranking));
}

bool PartialAlphabetOrder::prefix_of(const TotalOrder& order) const {
  if (order.degree() != degree_) return false;
  for (std::size_t i = 0; i < chain_.size(); ++i)
    if (order.ranking()[i] != chain_[i]) return false;
  return true;
}

std::string PartialAlphabetOrder::str() const {
  std::string out;
  const char* sep = degree_ <= 9 ? "<" : ",";
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(chain_[i]);
  }
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::uint64_t>(k);
  return out;
}

}  // namespace ulw
