#include "ulw/lexcode.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "ulw/core.hpp"

namespace ulw {

LexCodeReport validate_lex_code(const std::vector<Word>& words, int degree) {
  if (degree > 8)
    throw capacity_error("lex-code validation enumerates all n! orders; degree " +
                         std::to_string(degree) + " exceeds the guard of 8");
  if (words.empty()) throw std::domain_error("a lex-code cannot be empty");
  for (const Word& x : words)
    if (x.degree() != degree)
      throw std::domain_error("word \"" + x.str() + "\" has degree " +
                              std::to_string(x.degree()) + ", expected " + std::to_string(degree));

  LexCodeReport report;
  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1])
      report.violations.push_back("duplicate word \"" + sorted[i].str() + "\"");

  std::map<Word, std::size_t> minimizer_count;
  for (const TotalOrder& order : all_orders(degree)) {
    const Word* min = &sorted[0];
    for (const Word& x : sorted)
      if (compare_lex(x, *min, order) == std::strong_ordering::less) min = &x;
    report.minimizer_map.emplace_back(order, *min);
    ++minimizer_count[*min];
  }
  for (const Word& x : sorted) {
    std::size_t hits = minimizer_count[x];
    if (hits == 0)
      report.violations.push_back("\"" + x.str() + "\" is the minimum for no order");
    else if (hits > 1)
      report.violations.push_back("\"" + x.str() + "\" is the minimum for " +
                                  std::to_string(hits) + " orders");
  }
  for (const Word& x : sorted) {
    for (std::size_t len = 1; len < x.size(); ++len) {
      Word prefix = x.prefix(len);
      std::size_t extensions = 0;
      for (const Word& y : sorted) {
        if (y.size() < len) continue;
        bool has = true;
        for (std::size_t k = 0; k < len && has; ++k) has = y.at(k) == prefix.at(k);
        if (has) ++extensions;
      }
      if (extensions < 2)
        report.violations.push_back("proper prefix \"" + prefix.str() + "\" of \"" + x.str() +
                                    "\" extends to only " + std::to_string(extensions) +
                                    " member(s)");
    }
  }
  report.valid = report.violations.empty();
  return report;
}

SxDigraph::SxDigraph(int degree, std::vector<Word> vertices)
    : degree_(degree), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t xi = 0; xi < vertices_.size(); ++xi) {
    const Word& x = vertices_[xi];
    for (std::size_t yi = 0; yi < vertices_.size(); ++yi) {
      const Word& y = vertices_[yi];
      if (x.empty()) {
        // the empty word is a prefix of ay for every letter a
        for (Letter a = 1; a <= degree_; ++a)
          edges_.push_back({static_cast<int>(xi), static_cast<int>(yi), a});
        continue;
      }
      if (x.size() > y.size() + 1) continue;
      bool match = true;
      for (std::size_t k = 1; k < x.size() && match; ++k) match = x.at(k) == y.at(k - 1);
      if (match) edges_.push_back({static_cast<int>(xi), static_cast<int>(yi), x.at(0)});
    }
  }
  out_.assign(vertices_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e)
    out_[static_cast<std::size_t>(edges_[e].from)].push_back(static_cast<int>(e));
}

std::string SxDigraph::dot() const {
  std::string out = "digraph sx {\n";
  for (const SxEdge& e : edges_) {
    out += "  \"" + vertices_[static_cast<std::size_t>(e.from)].str() + "\" -> \"" +
           vertices_[static_cast<std::size_t>(e.to)].str() + "\" [label=\"" +
           std::to_string(e.witness) + "\"];\n";
  }
  out += "}\n";
  return out;
}

SxDigraph sx_digraph(const LexCode& code) { return SxDigraph(code.degree, code.words); }

namespace {

void hamiltonian_search(const SxDigraph& g, bool all, std::vector<HamiltonianCycle>& out) {
  const std::size_t k = g.vertices().size();
  std::vector<bool> visited(k, false);
  HamiltonianCycle current;
  current.vertices.push_back(0);
  visited[0] = true;

  auto dfs = [&](auto&& self, int v) -> bool {
    if (current.vertices.size() == k) {
      for (int e : g.out(v)) {
        if (g.edges()[static_cast<std::size_t>(e)].to != 0) continue;
        current.witnesses.push_back(g.edges()[static_cast<std::size_t>(e)].witness);
        out.push_back(current);
        current.witnesses.pop_back();
        if (!all) return true;
      }
      return false;
    }
    for (int e : g.out(v)) {
      const SxEdge& edge = g.edges()[static_cast<std::size_t>(e)];
      if (visited[static_cast<std::size_t>(edge.to)]) continue;
      visited[static_cast<std::size_t>(edge.to)] = true;
      current.vertices.push_back(edge.to);
      current.witnesses.push_back(edge.witness);
      if (self(self, edge.to)) return true;
      current.witnesses.pop_back();
      current.vertices.pop_back();
      visited[static_cast<std::size_t>(edge.to)] = false;
    }
    return false;
  };
  if (k > 0) dfs(dfs, 0);
}

}  // namespace

std::optional<HamiltonianCycle> find_hamiltonian_cycle(const SxDigraph& g) {
  std::vector<HamiltonianCycle> out;
  hamiltonian_search(g, false, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::vector<HamiltonianCycle> all_hamiltonian_cycles(const SxDigraph& g) {
  std::vector<HamiltonianCycle> out;
  hamiltonian_search(g, true, out);
  return out;
}

Word synthesize_ulw(const LexCode& code, const HamiltonianCycle& cycle) {
  const std::size_t k = code.words.size();
  if (cycle.vertices.size() != k || cycle.witnesses.size() != k)
    throw std::domain_error("cycle does not visit every code word exactly once");
  std::vector<bool> seen(k, false);
  for (int v : cycle.vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= k || seen[static_cast<std::size_t>(v)])
      throw std::domain_error("cycle does not visit every code word exactly once");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Word& x = code.words[static_cast<std::size_t>(cycle.vertices[i])];
    const Word& y = code.words[static_cast<std::size_t>(cycle.vertices[(i + 1) % k])];
    Letter a = cycle.witnesses[i];
    // x must be a prefix of a.y
    bool ok = x.empty() || (x.at(0) == a && x.size() <= y.size() + 1);
    for (std::size_t j = 1; ok && j < x.size(); ++j) ok = x.at(j) == y.at(j - 1);
    if (!ok)
      throw std::domain_error("(\"" + x.str() + "\", \"" + y.str() +
                              "\") with witness " + std::to_string(a) + " is not in S_X");
  }
  std::vector<Letter> letters(cycle.witnesses.begin(), cycle.witnesses.end());
  return Word(std::move(letters), code.degree);
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

RefinementScript RefinementScript::parse(std::istream& in, int degree) {
  RefinementScript script;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("script line " + std::to_string(lineno) + ": expected \"x : a1,a2,...\"");
    std::string lhs = trim(line.substr(0, colon));
    std::string rhs = trim(line.substr(colon + 1));
    RefinementStep step;
    step.prefix = lhs == "-" ? Word({}, degree) : Word::parse(lhs, degree);
    std::stringstream ss(rhs);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty())
        throw std::invalid_argument("script line " + std::to_string(lineno) + ": empty letter");
      std::size_t used = 0;
      int a = std::stoi(item, &used);
      if (used != item.size() || a < 1 || a > degree)
        throw std::invalid_argument("script line " + std::to_string(lineno) + ": bad letter \"" +
                                    item + "\"");
      step.gamma.push_back(a);
    }
    if (step.gamma.empty())
      throw std::invalid_argument("script line " + std::to_string(lineno) + ": empty gamma");
    script.steps.push_back(std::move(step));
  }
  return script;
}

RefinementScript RefinementScript::parse_text(const std::string& text, int degree) {
  std::istringstream in(text);
  return parse(in, degree);
}

std::string RefinementScript::str() const {
  std::string out;
  for (const RefinementStep& step : steps) {
    out += step.prefix.empty() ? "-" : step.prefix.str();
    out += " : ";
    for (std::size_t i = 0; i < step.gamma.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(step.gamma[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

struct RefinementNode {
  Word word;
  std::vector<int> cell;  // indices into all_orders(degree)
};

// the min-of-gamma letter under one ranking
Letter min_of_gamma(const TotalOrder& order, std::uint32_t gamma_mask) {
  for (Letter a : order.ranking())
    if (gamma_mask & (1u << (a - 1))) return a;
  return 0;
}

std::map<Letter, std::vector<int>> split_cell(const std::vector<TotalOrder>& orders,
                                              const std::vector<int>& cell,
                                              std::uint32_t gamma_mask) {
  std::map<Letter, std::vector<int>> cells;
  for (int idx : cell)
    cells[min_of_gamma(orders[static_cast<std::size_t>(idx)], gamma_mask)].push_back(idx);
  return cells;
}

}  // namespace

LexCode refine_lex_code(int degree, const RefinementScript& script) {
  if (degree > 8)
    throw capacity_error("refinement tracks all n! orders; degree " + std::to_string(degree) +
                         " exceeds the guard of 8");
  const std::vector<TotalOrder> orders = all_orders(degree);
  std::vector<RefinementNode> state;
  {
    std::vector<int> everything(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) everything[i] = static_cast<int>(i);
    state.push_back({Word({}, degree), std::move(everything)});
  }

  for (std::size_t si = 0; si < script.steps.size(); ++si) {
    const RefinementStep& step = script.steps[si];
    auto it = std::find_if(state.begin(), state.end(),
                           [&](const RefinementNode& node) { return node.word == step.prefix; });
    if (it == state.end())
      throw script_error(si + 1, "\"" + (step.prefix.empty() ? "-" : step.prefix.str()) +
                                     "\" is not a current code word");
    if (it->cell.size() < 2)
      throw script_error(si + 1, "cell of \"" + (step.prefix.empty() ? "-" : step.prefix.str()) +
                                     "\" is already a singleton");
    std::uint32_t gamma_mask = 0;
    for (Letter a : step.gamma) {
      if (a < 1 || a > degree) throw script_error(si + 1, "letter outside the alphabet");
      if (gamma_mask & (1u << (a - 1))) throw script_error(si + 1, "repeated letter in gamma");
      gamma_mask |= 1u << (a - 1);
    }
    auto cells = split_cell(orders, it->cell, gamma_mask);
    Word base = it->word;
    state.erase(it);
    for (auto& [letter, cell] : cells) {
      std::vector<Letter> letters(base.letters().begin(), base.letters().end());
      letters.push_back(letter);
      state.push_back({Word(std::move(letters), degree), std::move(cell)});
    }
  }
  for (const RefinementNode& node : state)
    if (node.cell.size() >= 2)
      throw script_error(script.steps.size(),
                         "script ended with a non-singleton cell at \"" +
                             (node.word.empty() ? "-" : node.word.str()) + "\"");
  LexCode code{degree, {}};
  code.words.reserve(state.size());
  for (const RefinementNode& node : state) code.words.push_back(node.word);
  std::sort(code.words.begin(), code.words.end());
  return code;
}

namespace {

bool linear_square_free(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t half = 1; i + 2 * half <= w.size(); ++half) {
      bool square = true;
      for (std::size_t k = 0; k < half && square; ++k) square = w.at(i + k) == w.at(i + half + k);
      if (square) return false;
    }
  }
  return true;
}

// Longest square-free word over k letters, plus one: members of a
// Hamiltonian lex-code are shortest unrepeated prefixes of a cyclically
// square-free word, so their proper prefixes are square-free over at most
// n-2 letters. Only needed for degree <= 4 where n-2 <= 2.
std::size_t hamiltonian_member_bound(int degree) {
  switch (degree) {
    case 1: return 0;  // the code {eps}
    case 2: return 1;
    case 3: return 2;
    default: return 4;
  }
}

struct SearchContext {
  int degree;
  std::size_t bound;
  const std::vector<TotalOrder>* orders;
  std::vector<LexCode>* results;
};

using Outcome = std::vector<std::pair<Letter, std::vector<int>>>;

void search_dfs(SearchContext& ctx, std::vector<RefinementNode>& state) {
  std::size_t pick = state.size();
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i].cell.size() >= 2 && (pick == state.size() || state[i].word < state[pick].word))
      pick = i;
  }
  if (pick == state.size()) {
    LexCode code{ctx.degree, {}};
    code.words.reserve(state.size());
    for (const RefinementNode& node : state) code.words.push_back(node.word);
    std::sort(code.words.begin(), code.words.end());
    if (!validate_lex_code(code.words, ctx.degree).valid)
      throw std::logic_error("refinement produced an invalid lex-code");
    if (find_hamiltonian_cycle(sx_digraph(code))) ctx.results->push_back(std::move(code));
    return;
  }

  RefinementNode node = state[pick];
  const int n = ctx.degree;
  std::set<Outcome> seen;
  for (std::uint32_t gamma_mask = 1; gamma_mask < (1u << n); ++gamma_mask) {
    auto cells = split_cell(*ctx.orders, node.cell, gamma_mask);
    Outcome outcome(cells.begin(), cells.end());
    if (!seen.insert(outcome).second) continue;

    bool ok = true;
    std::vector<RefinementNode> children;
    for (auto& [letter, cell] : outcome) {
      std::vector<Letter> letters(node.word.letters().begin(), node.word.letters().end());
      letters.push_back(letter);
      Word child(std::move(letters), n);
      int alp = child.alphabet_size();
      // structure forced on members of Hamiltonian codes: a member has
      // exactly n-1 distinct letters, proper prefixes have fewer, and all
      // of them are square-free
      if (cell.size() == 1) {
        ok = alp == n - 1 && child.size() <= ctx.bound && linear_square_free(child);
      } else {
        ok = alp <= n - 2 && child.size() < ctx.bound && linear_square_free(child);
      }
      if (!ok) break;
      children.push_back({std::move(child), std::move(cell)});
    }
    if (!ok) continue;

    std::vector<RefinementNode> next;
    next.reserve(state.size() - 1 + children.size());
    for (std::size_t i = 0; i < state.size(); ++i)
      if (i != pick) next.push_back(state[i]);
    for (RefinementNode& child : children) next.push_back(std::move(child));
    search_dfs(ctx, next);
  }
}

}  // namespace

std::vector<LexCode> search_hamiltonian_lex_codes(int degree, std::size_t max_word_len) {
  if (degree > 4)
    throw capacity_error("lex-code search is guarded at degree <= 4");
  if (degree < 1) throw std::domain_error("degree must be positive");
  const std::vector<TotalOrder> orders = all_orders(degree);
  std::size_t bound = std::min<std::size_t>(max_word_len, factorial(degree));
  bound = std::min(bound, hamiltonian_member_bound(degree));

  std::vector<LexCode> results;
  SearchContext ctx{degree, bound, &orders, &results};
  std::vector<RefinementNode> state;
  {
    std::vector<int> everything(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) everything[i] = static_cast<int>(i);
    state.push_back({Word({}, degree), std::move(everything)});
  }
  search_dfs(ctx, state);
  std::sort(results.begin(), results.end(),
            [](const LexCode& a, const LexCode& b) { return a.words < b.words; });
  return results;
}

}  // namespace ulw
