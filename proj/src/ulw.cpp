#include "ulw/ulw.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace ulw {

std::string to_string(UlwMode mode) {
  switch (mode) {
    case UlwMode::definitional: return "definitional";
    case UlwMode::order_defining: return "order-defining";
    case UlwMode::counting: return "counting";
  }
  return "?";
}

nlohmann::json UlwReport::to_json() const {
  nlohmann::json j{{"is_ulw", is_ulw},
                   {"mode", to_string(mode)},
                   {"degree", degree},
                   {"length", length}};
  if (!witness) {
    j["witness"] = nullptr;
    return j;
  }
  nlohmann::json w;
  w["reason"] = witness->reason;
  if (witness->conjugate_index) w["conjugate_index"] = witness->conjugate_index;
  if (witness->conjugate) w["conjugate"] = witness->conjugate->str();
  if (!witness->failing_conjugates.empty()) {
    w["failing_conjugates"] = witness->failing_conjugates;
    nlohmann::json words = nlohmann::json::array();
    for (const Word& c : witness->failing_conjugate_words) words.push_back(c.str());
    w["failing_conjugate_words"] = words;
  }
  if (witness->conjugate) {
    nlohmann::json orders = nlohmann::json::array();
    for (const TotalOrder& o : witness->found_orders) orders.push_back(o.str());
    w["lyndon_orders"] = orders;
  }
  if (witness->factor) {
    w["factor"] = witness->factor->str();
    w["count"] = witness->count;
    w["expected"] = witness->expected;
  }
  j["witness"] = w;
  return j;
}

namespace {

UlwReport make_report(const Word& w, UlwMode mode) {
  UlwReport report;
  report.mode = mode;
  report.degree = w.degree();
  report.length = w.size();
  return report;
}

bool check_length(const Word& w, UlwReport& report) {
  std::uint64_t want = factorial(w.degree());
  if (w.size() == want) return true;
  UlwWitness witness;
  witness.reason = "length " + std::to_string(w.size()) + " differs from " +
                   std::to_string(w.degree()) + "! = " + std::to_string(want);
  report.witness = std::move(witness);
  return false;
}

UlwReport check_definitional(const Word& w) {
  UlwReport report = make_report(w, UlwMode::definitional);
  if (w.degree() > 8)
    throw capacity_error("definitional check enumerates all n! orders per conjugate; degree " +
                         std::to_string(w.degree()) + " exceeds the guard of 8");
  if (!check_length(w, report)) return report;

  UlwWitness witness;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word conj = w.rotated(i);
    std::vector<TotalOrder> orders = lyndon_orders(conj);
    if (orders.size() == 1) continue;
    witness.failing_conjugates.push_back(i + 1);
    witness.failing_conjugate_words.push_back(conj);
    if (witness.failing_conjugates.size() == 1) {
      witness.conjugate_index = i + 1;
      witness.conjugate = std::move(conj);
      witness.found_orders = std::move(orders);
      witness.reason = witness.found_orders.empty()
                           ? "conjugate is not a Lyndon word (Lyndon for no order)"
                           : "conjugate is Lyndon for " +
                                 std::to_string(witness.found_orders.size()) + " orders";
    }
  }
  if (witness.failing_conjugates.empty()) {
    report.is_ulw = true;
  } else {
    report.witness = std::move(witness);
  }
  return report;
}

UlwReport check_order_defining(const Word& w) {
  UlwReport report = make_report(w, UlwMode::order_defining);
  if (!check_length(w, report)) return report;

  UlwWitness witness;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word conj = w.rotated(i);
    PartialAlphabetOrder defined = defined_order(conj);
    bool ok = defined.is_total() && is_lyndon(conj, defined.to_total());
    if (ok) continue;
    witness.failing_conjugates.push_back(i + 1);
    witness.failing_conjugate_words.push_back(conj);
    if (witness.failing_conjugates.size() == 1) {
      witness.conjugate_index = i + 1;
      witness.reason = defined.is_total()
                           ? "conjugate is not Lyndon with respect to the order it defines (" +
                                 defined.to_total().str() + ")"
                           : "conjugate defines only a partial order (" + defined.str() + ")";
      witness.conjugate = std::move(conj);
    }
  }
  if (witness.failing_conjugates.empty()) {
    report.is_ulw = true;
  } else {
    report.witness = std::move(witness);
  }
  return report;
}

UlwReport check_counting(const Word& w) {
  UlwReport report = make_report(w, UlwMode::counting);
  const int n = w.degree();

  // Every letter of the alphabet must occur exactly (n-1)! times; this is
  // what forces |w| = n! before any longer factor is inspected.
  std::uint64_t letter_budget = factorial(n - 1);
  for (Letter a = 1; a <= n; ++a) {
    Word u({a}, n);
    std::size_t count = 0;
    for (Letter b : w.letters())
      if (b == a) ++count;
    if (count != letter_budget) {
      UlwWitness witness;
      witness.factor = u;
      witness.count = count;
      witness.expected = letter_budget;
      witness.reason = "letter " + std::to_string(a) + " occurs " + std::to_string(count) +
                       " times, expected (n-1)! = " + std::to_string(letter_budget);
      report.witness = std::move(witness);
      return report;
    }
  }

  // Longer factors by increasing length. Once every factor of some length
  // occurs exactly once, each extends uniquely, so all longer lengths are
  // forced and the scan can stop.
  for (std::size_t len = 2; len <= w.size(); ++len) {
    std::map<std::vector<Letter>, std::pair<std::size_t, std::size_t>> counts;  // -> (count, first start)
    for (std::size_t start = 0; start < w.size(); ++start) {
      std::vector<Letter> window(len);
      for (std::size_t k = 0; k < len; ++k) window[k] = w.cyclic_at(start + k);
      auto [it, fresh] = counts.try_emplace(std::move(window), std::size_t{0}, start);
      ++it->second.first;
    }
    bool all_once = true;
    const std::pair<const std::vector<Letter>, std::pair<std::size_t, std::size_t>>* bad = nullptr;
    for (const auto& entry : counts) {
      Word factor(entry.first, n);
      std::uint64_t expected = factorial(n - factor.alphabet_size());
      if (entry.second.first != expected) {
        if (!bad || entry.second.second < bad->second.second) bad = &entry;
      }
      if (entry.second.first != 1) all_once = false;
    }
    if (bad) {
      Word factor(bad->first, n);
      UlwWitness witness;
      witness.conjugate_index = bad->second.second + 1;
      witness.count = bad->second.first;
      witness.expected = factorial(n - factor.alphabet_size());
      witness.reason = "cyclic factor " + factor.str() + " occurs " +
                       std::to_string(bad->second.first) + " times, expected (n-|alp|)! = " +
                       std::to_string(witness.expected);
      witness.factor = std::move(factor);
      report.witness = std::move(witness);
      return report;
    }
    if (all_once) break;
  }
  report.is_ulw = true;
  return report;
}

}  // namespace

UlwReport is_ulw(const Word& w, UlwMode mode) {
  if (w.empty()) throw std::domain_error("the empty word is not eligible");
  switch (mode) {
    case UlwMode::definitional: return check_definitional(w);
    case UlwMode::order_defining: return check_order_defining(w);
    case UlwMode::counting: return check_counting(w);
  }
  throw std::logic_error("unreachable");
}

bool is_ulw_quick(const Word& w) { return is_ulw(w, UlwMode::counting).is_ulw; }

namespace {

void require_ulw(const Word& w) {
  UlwReport report = is_ulw(w, UlwMode::counting);
  if (!report.is_ulw)
    throw std::domain_error("not a universal Lyndon word: " + report.witness->reason);
}

Word unrepeated_prefix_unchecked(const Word& w, std::size_t i) {
  Word conj = w.rotated(i - 1);
  for (std::size_t len = 1; len <= w.size(); ++len) {
    Word candidate = conj.prefix(len);
    if (count_occurrences(w, candidate, true) == 1) return candidate;
  }
  throw std::logic_error("no unrepeated prefix found");
}

}  // namespace

Word shortest_unrepeated_prefix(const Word& w, std::size_t i) {
  require_ulw(w);
  if (i < 1 || i > w.size()) throw std::domain_error("conjugate index out of range");
  return unrepeated_prefix_unchecked(w, i);
}

std::vector<Word> mt(const Word& w) {
  require_ulw(w);
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t i = 1; i <= w.size(); ++i) out.push_back(unrepeated_prefix_unchecked(w, i));
  std::sort(out.begin(), out.end());
  auto dup = std::unique(out.begin(), out.end());
  if (dup != out.end()) throw std::logic_error("shortest unrepeated prefixes are not distinct");
  return out;
}

Word minimal_order_defining_word(const Word& w, const PartialAlphabetOrder& p) {
  require_ulw(w);
  if (p.degree() != w.degree()) throw std::domain_error("degree mismatch between word and order");
  if (p.size() == 0) return Word({}, w.degree());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word conj = w.rotated(i);
    PartialAlphabetOrder defined = defined_order(conj);
    if (!p.prefix_of(defined.to_total())) continue;
    for (std::size_t len = 1; len <= conj.size(); ++len) {
      Word candidate = conj.prefix(len);
      if (candidate.alphabet_mask() == p.chain_mask()) return candidate;
    }
  }
  throw std::logic_error("no conjugate extends the requested order");
}

std::vector<Word> stretch_extensions(const Word& w, const Word& u) {
  if (u.empty()) throw std::domain_error("stretch extension requires a non-empty factor");
  if (u.degree() != w.degree()) throw std::domain_error("degree mismatch between word and factor");
  if (u.size() > w.size() || count_occurrences(w, u, true) == 0)
    throw std::domain_error("\"" + u.str() + "\" is not a cyclic factor of \"" + w.str() + "\"");

  std::set<Word> out;
  std::uint32_t target = u.alphabet_mask();
  for (std::size_t len = u.size(); len + 2 <= w.size(); ++len) {
    for (std::size_t start = 0; start < w.size(); ++start) {
      Word v = w.cyclic_factor(start, len);
      if (v.alphabet_mask() != target) continue;
      if (count_occurrences(v, u, false) == 0) continue;
      Letter left = w.cyclic_at(start + w.size() - 1);
      Letter right = w.cyclic_at(start + len);
      if ((target & (1u << (left - 1))) || (target & (1u << (right - 1)))) continue;
      out.insert(std::move(v));
    }
  }
  return {out.begin(), out.end()};
}

bool check_stretch_closure(const Word& w) {
  if (w.empty()) return true;
  const int n = w.degree();
  std::set<std::vector<Letter>> seen;
  for (std::size_t len = 2; len <= w.size(); ++len) {
    for (std::size_t start = 0; start < w.size(); ++start) {
      Letter a = w.cyclic_at(start);
      if (w.cyclic_at(start + len - 1) != a) continue;
      std::vector<Letter> middle(len - 2);
      std::uint32_t alp = 0;
      for (std::size_t k = 1; k + 1 < len; ++k) {
        middle[k - 1] = w.cyclic_at(start + k);
        alp |= 1u << (middle[k - 1] - 1);
      }
      if (alp & (1u << (a - 1))) continue;  // a in alp(s): not an asa factor
      if (!seen.insert(middle).second) continue;
      Word s(middle, n);
      for (Letter b = 1; b <= n; ++b) {
        if (alp & (1u << (b - 1))) continue;
        std::vector<Letter> bsb;
        bsb.reserve(len);
        bsb.push_back(b);
        bsb.insert(bsb.end(), middle.begin(), middle.end());
        bsb.push_back(b);
        if (count_occurrences(w, Word(std::move(bsb), n), true) == 0) return false;
      }
    }
  }
  return true;
}

std::size_t least_rotation_index(const Word& w) {
  // Booth's two-candidate scan.
  std::size_t n = w.size();
  if (n == 0) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = w.cyclic_at(i + k);
    Letter b = w.cyclic_at(j + k);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

CyclicWord canonicalize(const Word& w, bool up_to_isomorphism) {
  if (w.empty()) throw std::domain_error("the empty word has no canonical rotation");
  if (!up_to_isomorphism) return CyclicWord{w.rotated(least_rotation_index(w))};
  const int n = w.degree();
  if (n > 4)
    throw capacity_error("isomorphism canonicalization minimizes over n! renamings; degree " +
                         std::to_string(n) + " exceeds the guard of 4");
  std::vector<Letter> renaming(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) renaming[static_cast<std::size_t>(a)] = a + 1;
  std::optional<Word> best;
  do {
    std::vector<Letter> mapped(w.size());
    for (std::size_t k = 0; k < w.size(); ++k)
      mapped[k] = renaming[static_cast<std::size_t>(w.at(k) - 1)];
    Word candidate(std::move(mapped), n);
    candidate = candidate.rotated(least_rotation_index(candidate));
    if (!best || candidate < *best) best = std::move(candidate);
  } while (std::next_permutation(renaming.begin(), renaming.end()));
  return CyclicWord{*best};
}

namespace {

void permutation_words(int n, int len, std::vector<Letter>& acc, std::uint32_t used,
                       std::vector<Word>& out) {
  if (static_cast<int>(acc.size()) == len) {
    out.emplace_back(acc, n);
    return;
  }
  for (Letter a = 1; a <= n; ++a) {
    if (used & (1u << (a - 1))) continue;
    acc.push_back(a);
    permutation_words(n, len, acc, used | (1u << (a - 1)), out);
    acc.pop_back();
  }
}

}  // namespace

bool is_jackson_type(const Word& w) {
  require_ulw(w);
  const int n = w.degree();
  if (n <= 2) return true;  // by convention; J(n) is defined for n > 2
  std::vector<Word> perms;
  std::vector<Letter> acc;
  permutation_words(n, n - 1, acc, 0, perms);
  for (const Word& u : perms)
    if (count_occurrences(w, u, true) != 1) return false;
  return true;
}

bool is_universal_order_word(const Word& w) {
  if (w.empty()) throw std::domain_error("the empty word is not eligible");
  if (w.size() != factorial(w.degree()))
    throw std::domain_error("length " + std::to_string(w.size()) + " differs from " +
                            std::to_string(w.degree()) + "!");
  std::set<std::vector<Letter>> orders;
  for (std::size_t i = 0; i < w.size(); ++i) {
    PartialAlphabetOrder defined = defined_order(w.rotated(i));
    if (!defined.is_total()) return false;
    orders.insert(defined.to_total().ranking());
  }
  return orders.size() == w.size();
}

Word reverse(const Word& w) { return w.reversed(); }

}  // namespace ulw
