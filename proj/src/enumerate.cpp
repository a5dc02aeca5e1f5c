#include "ulw/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace ulw {

namespace {

// Windows of length <= degree+1 are tracked in flat arrays indexed by a
// base-(degree+1) code; budgets come straight from the occurrence formula.
struct BudgetTables {
  int degree;
  std::size_t max_window;
  std::vector<std::vector<std::uint16_t>> budget;  // [len][code]

  explicit BudgetTables(int n) : degree(n), max_window(static_cast<std::size_t>(n) + 1) {
    const std::size_t base = static_cast<std::size_t>(n) + 1;
    budget.resize(max_window + 1);
    std::size_t span = 1;
    for (std::size_t len = 1; len <= max_window; ++len) {
      span *= base;
      budget[len].assign(span, 0);
      for (std::size_t code = 0; code < span; ++code) {
        std::size_t rest = code;
        std::uint32_t alp = 0;
        bool well_formed = true;
        for (std::size_t k = 0; k < len; ++k) {
          std::size_t digit = rest % base;
          rest /= base;
          if (digit == 0) {
            well_formed = false;
            break;
          }
          alp |= 1u << (digit - 1);
        }
        if (well_formed)
          budget[len][code] =
              static_cast<std::uint16_t>(factorial(n - std::popcount(alp)));
      }
    }
  }
};

struct SearchState {
  const BudgetTables* tables;
  int degree;
  std::size_t target_len;
  std::vector<Letter> word;
  std::vector<std::vector<std::uint16_t>> counts;  // [len][code]
  std::vector<std::size_t> one_positions;

  explicit SearchState(const BudgetTables& t, std::size_t target)
      : tables(&t), degree(t.degree), target_len(target) {
    counts.resize(t.max_window + 1);
    for (std::size_t len = 1; len <= t.max_window; ++len)
      counts[len].assign(t.budget[len].size(), 0);
  }

  std::size_t window_code(std::size_t end, std::size_t len) const {
    const std::size_t base = static_cast<std::size_t>(degree) + 1;
    std::size_t code = 0;
    for (std::size_t k = end + 1 - len; k <= end; ++k)
      code = code * base + static_cast<std::size_t>(word[k]);
    return code;
  }

  // Pushes a letter, charging every complete window ending at it. Returns
  // false (with the word unchanged) when a budget is exceeded, a square is
  // completed (ULWs are cyclically square-free), or a rotation smaller
  // than the current prefix becomes visible.
  bool push(Letter a) {
    word.push_back(a);
    const std::size_t end = word.size() - 1;
    if (!suffix_square_free()) {
      word.pop_back();
      return false;
    }
    const std::size_t upto = std::min(word.size(), tables->max_window);
    for (std::size_t len = 1; len <= upto; ++len) {
      std::size_t code = window_code(end, len);
      if (++counts[len][code] > tables->budget[len][code]) {
        for (std::size_t back = 1; back <= len; ++back) --counts[back][window_code(end, back)];
        word.pop_back();
        return false;
      }
    }
    if (a == 1 && end > 0) one_positions.push_back(end);
    if (!prefix_is_least()) {
      pop();
      return false;
    }
    return true;
  }

  // No square may end at the last position.
  bool suffix_square_free() const {
    const std::size_t len = word.size();
    for (std::size_t half = 1; 2 * half <= len; ++half) {
      bool square = true;
      for (std::size_t k = 0; k < half && square; ++k)
        square = word[len - half + k] == word[len - 2 * half + k];
      if (square) return false;
    }
    return true;
  }

  void pop() {
    const std::size_t end = word.size() - 1;
    if (!one_positions.empty() && one_positions.back() == end) one_positions.pop_back();
    const std::size_t upto = std::min(word.size(), tables->max_window);
    for (std::size_t len = 1; len <= upto; ++len) --counts[len][window_code(end, len)];
    word.pop_back();
  }

  // Only rotations starting at an occurrence of letter 1 can undercut a
  // word that starts with 1.
  bool prefix_is_least() const {
    for (std::size_t j : one_positions) {
      for (std::size_t k = 0; j + k < word.size(); ++k) {
        if (word[j + k] != word[k]) {
          if (word[j + k] < word[k]) return false;
          break;
        }
      }
    }
    return true;
  }

  bool leaf_is_canonical() const {
    for (std::size_t j : one_positions) {
      for (std::size_t k = 0; k < word.size(); ++k) {
        Letter rotated = word[(j + k) % word.size()];
        if (rotated != word[k]) {
          if (rotated < word[k]) return false;
          break;
        }
      }
    }
    return true;
  }

  // Charges the seam-crossing windows against the budgets; leaves counts
  // untouched (they are reverted before returning).
  bool wrap_windows_ok() {
    const std::size_t n = word.size();
    bool ok = true;
    std::vector<std::pair<std::size_t, std::size_t>> charged;
    const std::size_t base = static_cast<std::size_t>(degree) + 1;
    for (std::size_t len = 2; len <= std::min(tables->max_window, n) && ok; ++len) {
      for (std::size_t start = n - len + 1; start < n && ok; ++start) {
        std::size_t code = 0;
        for (std::size_t k = 0; k < len; ++k)
          code = code * base + static_cast<std::size_t>(word[(start + k) % n]);
        charged.emplace_back(len, code);
        if (++counts[len][code] > tables->budget[len][code]) ok = false;
      }
    }
    for (auto [len, code] : charged) --counts[len][code];
    return ok;
  }
};

void census_dfs(SearchState& state, std::vector<Word>& found, std::uint64_t& nodes) {
  ++nodes;
  if (state.word.size() == state.target_len) {
    if (state.leaf_is_canonical() && state.wrap_windows_ok()) {
      Word candidate(state.word, state.degree);
      if (is_ulw(candidate, UlwMode::counting).is_ulw) found.push_back(std::move(candidate));
    }
    return;
  }
  for (Letter a = 1; a <= state.degree; ++a) {
    if (!state.push(a)) continue;
    census_dfs(state, found, nodes);
    state.pop();
  }
}

// Frontier of pruned prefixes at a fixed depth, for splitting across workers.
void frontier_dfs(SearchState& state, std::size_t depth, std::vector<std::vector<Letter>>& out) {
  if (state.word.size() == depth) {
    out.push_back(state.word);
    return;
  }
  for (Letter a = 1; a <= state.degree; ++a) {
    if (!state.push(a)) continue;
    frontier_dfs(state, depth, out);
    state.pop();
  }
}

void classify(UlwCensus& census) {
  std::map<Word, std::vector<Word>> classes;
  for (const Word& w : census.canonical_words)
    classes[canonicalize(w, true).canonical].push_back(w);
  census.iso_class_count = classes.size();
  census.jackson_count = census.non_jackson_count = 0;
  census.labeled_jackson_count = census.labeled_non_jackson_count = 0;
  for (const auto& [rep, members] : classes) {
    bool jackson = is_jackson_type(rep);
    if (jackson) {
      ++census.jackson_count;
      census.labeled_jackson_count += members.size();
    } else {
      ++census.non_jackson_count;
      census.labeled_non_jackson_count += members.size();
    }
  }
  census.jackson_by_convention = census.degree <= 2;
}

}  // namespace

UlwCensus enumerate_ulws(int degree, const EnumerateOptions& options) {
  if (degree > 4)
    throw capacity_error("exhaustive enumeration is guarded at degree <= 4");
  if (degree < 1) throw std::domain_error("degree must be positive");

  const std::size_t target = factorial(degree);
  const BudgetTables tables(degree);
  UlwCensus census;
  census.degree = degree;

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;

  // the first letter of a canonical form is always 1
  const std::size_t split_depth = std::min<std::size_t>(target, 8);
  std::vector<std::vector<Letter>> frontier;
  std::uint64_t nodes = 0;
  {
    SearchState state(tables, target);
    bool ok = state.push(1);
    if (!ok) throw std::logic_error("seed letter rejected");
    if (split_depth >= target || threads == 1) {
      census_dfs(state, census.canonical_words, nodes);
    } else {
      frontier_dfs(state, split_depth, frontier);
    }
  }

  if (!frontier.empty()) {
    std::atomic<std::size_t> cursor{0};
    std::mutex merge_mutex;
    std::vector<std::thread> workers;
    std::atomic<std::size_t> done{0};
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        SearchState state(tables, target);
        std::vector<Word> local;
        std::uint64_t local_nodes = 0;
        for (;;) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= frontier.size()) break;
          state = SearchState(tables, target);
          bool alive = true;
          for (Letter a : frontier[i]) {
            if (!state.push(a)) {
              alive = false;
              break;
            }
          }
          if (alive) census_dfs(state, local, local_nodes);
          std::size_t finished = ++done;
          if (options.progress && finished % 64 == 0) {
            std::lock_guard<std::mutex> lock(merge_mutex);
            *options.progress << "progress: " << finished << "/" << frontier.size()
                              << " frontier nodes\n";
          }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        census.canonical_words.insert(census.canonical_words.end(), local.begin(), local.end());
        nodes += local_nodes;
      });
    }
    for (std::thread& worker : workers) worker.join();
  }

  std::sort(census.canonical_words.begin(), census.canonical_words.end());
  census.labeled_count = census.canonical_words.size();
  classify(census);
  return census;
}

UlwCensus census_from_words(int degree, const std::vector<Word>& words) {
  UlwCensus census;
  census.degree = degree;
  std::vector<Word> canonical;
  for (const Word& w : words) {
    if (w.degree() != degree)
      throw std::domain_error("word \"" + w.str() + "\" has degree " +
                              std::to_string(w.degree()) + ", expected " + std::to_string(degree));
    if (!is_ulw(w, UlwMode::counting).is_ulw)
      throw std::domain_error("\"" + w.str() + "\" is not a universal Lyndon word");
    canonical.push_back(canonicalize(w).canonical);
  }
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());
  census.canonical_words = std::move(canonical);
  census.labeled_count = census.canonical_words.size();
  classify(census);
  return census;
}

std::vector<IsoClass> classify_ulws(const UlwCensus& census) {
  std::map<Word, IsoClass> classes;
  for (const Word& w : census.canonical_words) {
    Word rep = canonicalize(w, true).canonical;
    auto [it, fresh] = classes.try_emplace(rep);
    if (fresh) {
      it->second.representative = rep;
      it->second.jackson = is_jackson_type(rep);
    }
    it->second.members.push_back(w);
  }
  std::vector<IsoClass> out;
  out.reserve(classes.size());
  for (auto& [rep, cls] : classes) {
    std::sort(cls.members.begin(), cls.members.end());
    out.push_back(std::move(cls));
  }
  return out;
}

void census_jsonl(const UlwCensus& census, std::ostream& out) {
  std::vector<IsoClass> classes = classify_ulws(census);
  std::map<Word, std::pair<std::size_t, bool>> lookup;
  for (std::size_t id = 0; id < classes.size(); ++id)
    for (const Word& w : classes[id].members) lookup[w] = {id, classes[id].jackson};
  for (const Word& w : census.canonical_words) {
    auto [id, jackson] = lookup[w];
    nlohmann::json record{{"word", w.str()}, {"iso_class_id", id}, {"jackson", jackson}};
    out << record.dump() << '\n';
  }
  nlohmann::json summary{{"summary",
                          {{"degree", census.degree},
                           {"labeled", census.labeled_count},
                           {"iso_classes", census.iso_class_count},
                           {"jackson", census.jackson_count},
                           {"non_jackson", census.non_jackson_count},
                           {"labeled_jackson", census.labeled_jackson_count},
                           {"labeled_non_jackson", census.labeled_non_jackson_count},
                           {"jackson_by_convention", census.jackson_by_convention}}}};
  out << summary.dump() << '\n';
}

}  // namespace ulw
