#include "ulw/core.hpp"

#include <algorithm>

namespace ulw {

namespace {

void require_same_degree(const Word& u, const Word& v, int degree) {
  if (u.degree() != degree || v.degree() != degree)
    throw std::domain_error("degree mismatch: " + std::to_string(u.degree()) + " vs " +
                            std::to_string(v.degree()) + " vs order degree " + std::to_string(degree));
}

}  // namespace

std::strong_ordering compare_lex(const Word& u, const Word& v, const TotalOrder& order) {
  require_same_degree(u, v, order.degree());
  std::size_t m = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (u.at(i) != v.at(i)) {
      return order.rank(u.at(i)) < order.rank(v.at(i)) ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
    }
  }
  return u.size() <=> v.size();
}

std::vector<Word> conjugates(const Word& w) {
  if (w.empty()) throw std::domain_error("the empty word has no conjugates");
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w.rotated(i));
  return out;
}

std::size_t count_occurrences(const Word& w, const Word& u, bool cyclic) {
  if (u.empty()) throw std::domain_error("occurrence counting requires a non-empty factor");
  if (u.degree() != w.degree()) throw std::domain_error("degree mismatch between word and factor");
  if (cyclic && u.size() > w.size())
    throw std::domain_error("a cyclic factor cannot be longer than the word");
  std::size_t count = 0;
  if (cyclic) {
    for (std::size_t start = 0; start < w.size(); ++start) {
      bool hit = true;
      for (std::size_t k = 0; k < u.size(); ++k) {
        if (w.cyclic_at(start + k) != u.at(k)) {
          hit = false;
          break;
        }
      }
      if (hit) ++count;
    }
  } else {
    if (u.size() > w.size()) return 0;
    for (std::size_t start = 0; start + u.size() <= w.size(); ++start) {
      bool hit = true;
      for (std::size_t k = 0; k < u.size(); ++k) {
        if (w.at(start + k) != u.at(k)) {
          hit = false;
          break;
        }
      }
      if (hit) ++count;
    }
  }
  return count;
}

PartialAlphabetOrder defined_order(const Word& u) {
  std::vector<Letter> chain;
  std::uint32_t seen = 0;
  for (Letter a : u.letters()) {
    if (!(seen & (1u << (a - 1)))) {
      seen |= 1u << (a - 1);
      chain.push_back(a);
    }
  }
  return PartialAlphabetOrder(std::move(chain), u.degree());
}

bool is_lyndon(const Word& w, const TotalOrder& order) {
  if (w.empty()) throw std::domain_error("the empty word is not eligible");
  if (w.degree() != order.degree())
    throw std::domain_error("degree mismatch between word and order");
  for (std::size_t i = 1; i < w.size(); ++i) {
    // compare w with its rotation by i without materializing the rotation
    bool less = false, decided = false;
    for (std::size_t k = 0; k < w.size(); ++k) {
      Letter a = w.at(k);
      Letter b = w.cyclic_at(i + k);
      if (a != b) {
        less = order.rank(a) < order.rank(b);
        decided = true;
        break;
      }
    }
    if (!decided || !less) return false;  // equal rotation or larger
  }
  return true;
}

std::vector<TotalOrder> lyndon_orders(const Word& w) {
  if (w.empty()) throw std::domain_error("the empty word is not eligible");
  if (w.degree() > 8)
    throw capacity_error("lyndon_orders enumerates all n! orders; degree " +
                         std::to_string(w.degree()) + " exceeds the guard of 8");
  std::vector<TotalOrder> out;
  for (const TotalOrder& order : all_orders(w.degree()))
    if (is_lyndon(w, order)) out.push_back(order);
  return out;
}

WordPredicates word_predicates(const Word& w) {
  if (w.empty()) throw std::domain_error("the empty word is not eligible");
  WordPredicates out;

  out.primitive = true;
  for (std::size_t d = 1; d < w.size(); ++d) {
    if (w.size() % d != 0) continue;
    bool periodic = true;
    for (std::size_t k = 0; k < w.size() && periodic; ++k)
      periodic = w.at(k) == w.cyclic_at(k + d);
    if (periodic) {
      out.primitive = false;
      break;
    }
  }

  out.unbordered = true;
  for (std::size_t len = 1; len < w.size(); ++len) {
    bool border = true;
    for (std::size_t k = 0; k < len && border; ++k)
      border = w.at(k) == w.at(w.size() - len + k);
    if (border) {
      out.unbordered = false;
      break;
    }
  }

  out.cyclically_square_free = true;
  for (std::size_t start = 0; start < w.size() && out.cyclically_square_free; ++start) {
    for (std::size_t half = 1; 2 * half <= w.size(); ++half) {
      bool square = true;
      for (std::size_t k = 0; k < half && square; ++k)
        square = w.cyclic_at(start + k) == w.cyclic_at(start + half + k);
      if (square) {
        out.cyclically_square_free = false;
        break;
      }
    }
  }
  return out;
}

bool is_prefix_code(const std::vector<Word>& words) {
  for (const Word& x : words)
    if (x.empty()) throw std::domain_error("a prefix code cannot contain the empty word");
  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // in natural sorted order a prefix immediately precedes its extensions
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const Word& a = sorted[i];
    const Word& b = sorted[i + 1];
    if (a.size() <= b.size()) {
      bool prefix = true;
      for (std::size_t k = 0; k < a.size() && prefix; ++k) prefix = a.at(k) == b.at(k);
      if (prefix && a.size() < b.size()) return false;
    }
  }
  return true;
}

}  // namespace ulw
