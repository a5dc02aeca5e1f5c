// Acceptance suite: each criterion prints one PASS/FAIL line; the process
// exits nonzero if any selected criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "ulw/enumerate.hpp"
#include "ulw/jackson.hpp"
#include "ulw/lexcode.hpp"
#include "ulw/ulw.hpp"

using namespace ulw;
using helpers::W;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
};

const UlwCensus& census4() {
  static UlwCensus census = enumerate_ulws(4);
  return census;
}

std::set<Word> canonical_set(const UlwCensus& census) {
  return {census.canonical_words.begin(), census.canonical_words.end()};
}

std::vector<Word> all_census_words() {
  std::vector<Word> words;
  words.push_back(W("1"));
  words.push_back(W("12"));
  for (const Word& w : enumerate_ulws(3).canonical_words) words.push_back(w);
  for (const Word& w : census4().canonical_words) words.push_back(w);
  return words;
}

// ---- criterion 1: census counts -----------------------------------------

Check criterion_census() {
  Check check;
  const std::size_t expected_labeled[] = {1, 1, 3, 492};
  for (int degree = 1; degree <= 4; ++degree) {
    const UlwCensus census = degree == 4 ? census4() : enumerate_ulws(degree);
    std::ostringstream what;
    what << "degree " << degree << " labeled=" << census.labeled_count << " expected "
         << expected_labeled[degree - 1];
    check.expect(census.labeled_count == expected_labeled[degree - 1], what.str());
  }
  const UlwCensus& census = census4();
  check.expect(census.iso_class_count == 41,
               "degree 4 iso=" + std::to_string(census.iso_class_count) + " expected 41");
  check.expect(census.jackson_count == 20,
               "degree 4 jackson=" + std::to_string(census.jackson_count) + " expected 20");
  check.expect(census.non_jackson_count == 21,
               "degree 4 non_jackson=" + std::to_string(census.non_jackson_count) + " expected 21");
  return check;
}

// ---- criterion 2: table fidelity -----------------------------------------

Check criterion_tables() {
  Check check;
  std::set<Word> expected_jackson, expected_non_jackson;
  for (std::string_view text : fixtures::kJacksonTable)
    expected_jackson.insert(canonicalize(W(text), true).canonical);
  for (std::string_view text : fixtures::kNonJacksonTable)
    expected_non_jackson.insert(canonicalize(W(text), true).canonical);
  check.expect(expected_jackson.size() == 20, "table 1 collapses under isomorphism");
  check.expect(expected_non_jackson.size() == 21, "table 2 collapses under isomorphism");

  std::set<Word> got_jackson, got_non_jackson;
  for (const IsoClass& cls : classify_ulws(census4()))
    (cls.jackson ? got_jackson : got_non_jackson).insert(cls.representative);
  check.expect(got_jackson == expected_jackson, "Jackson classes differ from table 1");
  check.expect(got_non_jackson == expected_non_jackson, "non-Jackson classes differ from table 2");
  return check;
}

// ---- criterion 3: counterexample fixtures --------------------------------

Check criterion_counterexamples() {
  Check check;
  Word not_ulw = W(fixtures::kNotUlw);
  UlwReport report = is_ulw(not_ulw, UlwMode::order_defining);
  check.expect(!report.is_ulw, "the distinct-factor word passed verification");
  bool witnessed = false;
  if (report.witness) {
    for (std::size_t i : report.witness->failing_conjugates)
      if (not_ulw.rotated(i - 1).str() == fixtures::kNotUlwWitness) witnessed = true;
  }
  check.expect(witnessed, "witness conjugate not reported");
  check.expect(lyndon_orders(W(fixtures::kNotUlwWitness)).empty(),
               "witness conjugate is Lyndon for some order");

  std::vector<TotalOrder> two = lyndon_orders(W(fixtures::kDoubleOrderConjugate));
  check.expect(two.size() == 2 && two[0] == TotalOrder({3, 1, 2, 4}) &&
                   two[1] == TotalOrder({3, 1, 4, 2}),
               "expected exactly the orders 3<1<2<4 and 3<1<4<2");

  Word order_word = W(fixtures::kOrderWordNotUlw);
  check.expect(is_universal_order_word(order_word), "universal order word rejected");
  check.expect(!is_ulw(order_word, UlwMode::counting).is_ulw,
               "universal order word wrongly accepted as ULW");

  Word non_jackson = W(fixtures::kNonJacksonUlw);
  check.expect(is_ulw(non_jackson, UlwMode::counting).is_ulw, "degree-4 ULW rejected");
  for (std::string_view factor : {"142", "143", "241", "243", "341", "342"})
    check.expect(count_occurrences(non_jackson, W(factor, 4), true) == 0,
                 "factor " + std::string(factor) + " unexpectedly present");
  return check;
}

// ---- criterion 4: mode equivalence ----------------------------------------

Check criterion_mode_equivalence() {
  Check check;
  std::size_t disagreements = 0;
  helpers::for_all_words(3, 6, [&](const Word& w) {
    bool definitional = is_ulw(w, UlwMode::definitional).is_ulw;
    bool order_defining = is_ulw(w, UlwMode::order_defining).is_ulw;
    bool counting = is_ulw(w, UlwMode::counting).is_ulw;
    if (definitional != order_defining || order_defining != counting) ++disagreements;
  });
  check.expect(disagreements == 0,
               std::to_string(disagreements) + " disagreements over the 729 degree-3 words");

  std::size_t word_disagreements = 0;
  for (const Word& w : census4().canonical_words) {
    bool definitional = is_ulw(w, UlwMode::definitional).is_ulw;
    bool order_defining = is_ulw(w, UlwMode::order_defining).is_ulw;
    bool counting = is_ulw(w, UlwMode::counting).is_ulw;
    if (!definitional || !order_defining || !counting) ++word_disagreements;
  }
  check.expect(word_disagreements == 0, std::to_string(word_disagreements) +
                                            " degree-4 census words failed a mode");
  return check;
}

// ---- criterion 5: theorem suites ------------------------------------------

// all flanked cyclic factors (stretches) of w, with their alphabets
std::vector<Word> stretches_of(const Word& w) {
  std::vector<Word> out;
  for (std::size_t len = 1; len + 2 <= w.size(); ++len) {
    std::set<Word> seen;
    for (std::size_t start = 0; start < w.size(); ++start) {
      Word v = w.cyclic_factor(start, len);
      std::uint32_t mask = v.alphabet_mask();
      Letter left = w.cyclic_at(start + w.size() - 1);
      Letter right = w.cyclic_at(start + len);
      if ((mask & (1u << (left - 1))) || (mask & (1u << (right - 1)))) continue;
      if (seen.insert(v).second) out.push_back(v);
    }
  }
  return out;
}

Check criterion_theorems() {
  Check check;
  std::vector<Word> words = all_census_words();
  std::size_t eq_violations = 0, lyndon_violations = 0, stretch_violations = 0,
              closure_violations = 0, squarefree_violations = 0;
  for (const Word& w : words) {
    const int n = w.degree();

    // occurrence formula for every cyclic factor, every length
    for (std::size_t len = 1; len <= w.size(); ++len) {
      std::map<Word, std::size_t> counts;
      for (std::size_t start = 0; start < w.size(); ++start) ++counts[w.cyclic_factor(start, len)];
      for (const auto& [factor, count] : counts)
        if (count != factorial(n - factor.alphabet_size())) ++eq_violations;
    }

    // every conjugate is Lyndon for the order it defines
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word conj = w.rotated(i);
      PartialAlphabetOrder defined = defined_order(conj);
      if (!defined.is_total() || !is_lyndon(conj, defined.to_total())) ++lyndon_violations;
      WordPredicates predicates = word_predicates(conj);
      if (!predicates.primitive || !predicates.unbordered || !predicates.cyclically_square_free)
        ++squarefree_violations;
    }

    // unique stretch extension for every cyclic factor missing a letter,
    // with a unique occurrence inside it
    std::vector<Word> stretches = stretches_of(w);
    std::set<Word> factors;
    for (std::size_t len = 1; len <= w.size(); ++len)
      for (std::size_t start = 0; start < w.size(); ++start)
        factors.insert(w.cyclic_factor(start, len));
    for (const Word& u : factors) {
      if (u.alphabet_size() == n) continue;
      if (u.size() + 2 > w.size()) continue;  // no room for any avb factor
      std::size_t extensions = 0;
      bool unique_occurrence = true;
      for (const Word& v : stretches) {
        if (v.alphabet_mask() != u.alphabet_mask() || v.size() < u.size()) continue;
        std::size_t inside = count_occurrences(v, u, false);
        if (inside > 0) {
          ++extensions;
          unique_occurrence = unique_occurrence && inside == 1;
        }
      }
      if (extensions != 1 || !unique_occurrence) ++stretch_violations;
    }

    if (!check_stretch_closure(w)) ++closure_violations;
  }
  check.expect(eq_violations == 0,
               std::to_string(eq_violations) + " occurrence-formula violations");
  check.expect(lyndon_violations == 0,
               std::to_string(lyndon_violations) + " defined-order Lyndon violations");
  check.expect(stretch_violations == 0,
               std::to_string(stretch_violations) + " stretch-extension violations");
  check.expect(closure_violations == 0,
               std::to_string(closure_violations) + " stretch-closure violations");
  check.expect(squarefree_violations == 0,
               std::to_string(squarefree_violations) + " square-freeness violations");

  // reversal closure of each canonical census
  for (int degree = 1; degree <= 4; ++degree) {
    const UlwCensus census = degree == 4 ? census4() : enumerate_ulws(degree);
    std::set<Word> canonical = canonical_set(census);
    for (const Word& w : canonical)
      check.expect(canonical.count(canonicalize(reverse(w)).canonical) == 1,
                   "census not closed under reversal at degree " + std::to_string(degree));
  }
  return check;
}

// ---- criterion 6: lex-code pipeline ----------------------------------------

Check criterion_lexcode() {
  Check check;
  LexCode non_ham = refine_lex_code(
      3, RefinementScript::parse_text(std::string(fixtures::kNonHamiltonianScript), 3));
  std::vector<std::string> got = helpers::strs(non_ham.words);
  check.expect(got == std::vector<std::string>{"112", "113", "13", "221", "223", "23"},
               "non-Hamiltonian script produced a different code");
  check.expect(!find_hamiltonian_cycle(sx_digraph(non_ham)).has_value(),
               "the non-Hamiltonian example has a Hamiltonian cycle");

  LexCode ham = refine_lex_code(
      3, RefinementScript::parse_text(std::string(fixtures::kHamiltonianScript), 3));
  check.expect(helpers::strs(ham.words) ==
                   std::vector<std::string>{"12", "13", "21", "23", "31", "32"},
               "Hamiltonian script produced a different code");
  auto cycle = find_hamiltonian_cycle(sx_digraph(ham));
  check.expect(cycle.has_value(), "the Hamiltonian example has no cycle");
  if (cycle) {
    Word synthesized = synthesize_ulw(ham, *cycle);
    check.expect(canonicalize(synthesized, true).canonical ==
                     canonicalize(W("212313"), true).canonical,
                 "synthesis is not isomorphic to 212313");
  }

  std::vector<Word> words;
  for (const Word& w : enumerate_ulws(3).canonical_words) words.push_back(w);
  for (const Word& w : census4().canonical_words) words.push_back(w);
  std::size_t invalid = 0, no_cycle = 0, bad_round_trip = 0;
  for (const Word& w : words) {
    LexCode code{w.degree(), mt(w)};
    if (!validate_lex_code(code.words, w.degree()).valid) {
      ++invalid;
      continue;
    }
    if (!find_hamiltonian_cycle(sx_digraph(code))) {
      ++no_cycle;
      continue;
    }
    HamiltonianCycle conjugate_cycle;
    bool found_all = true;
    for (std::size_t i = 1; i <= w.size() && found_all; ++i) {
      Word x = shortest_unrepeated_prefix(w, i);
      auto it = std::find(code.words.begin(), code.words.end(), x);
      if (it == code.words.end()) {
        found_all = false;
        break;
      }
      conjugate_cycle.vertices.push_back(static_cast<int>(it - code.words.begin()));
      conjugate_cycle.witnesses.push_back(x.at(0));
    }
    if (!found_all ||
        canonicalize(synthesize_ulw(code, conjugate_cycle)).canonical !=
            canonicalize(w).canonical)
      ++bad_round_trip;
  }
  check.expect(invalid == 0, std::to_string(invalid) + " MT sets failed lex-code validation");
  check.expect(no_cycle == 0, std::to_string(no_cycle) + " MT digraphs without Hamiltonian cycle");
  check.expect(bad_round_trip == 0, std::to_string(bad_round_trip) + " bad round trips");
  return check;
}

// ---- criterion 7: Jackson pipeline -----------------------------------------

Check criterion_jackson() {
  Check check;
  JacksonGraph graph = build_jackson_graph(4);
  check.expect(graph.vertices().size() == 12, "J(4) vertex count");
  check.expect(graph.edges().size() == 24, "J(4) edge count");

  const std::set<std::string> published = {
      "12/24/1", "12/23/1", "21/13/2", "21/14/2", "23/31/2", "23/34/2", "31/12/3", "31/14/3",
      "32/24/3", "32/21/3", "42/21/4", "42/23/4", "13/32/1", "13/34/1", "24/41/2", "24/43/2",
      "34/41/3", "34/42/3", "41/13/4", "41/12/4", "43/31/4", "43/32/4", "14/42/1", "14/43/1"};
  std::set<std::string> got;
  for (const JacksonEdge& e : graph.edges())
    got.insert(graph.vertices()[static_cast<std::size_t>(e.from)].str() + "/" +
               graph.vertices()[static_cast<std::size_t>(e.to)].str() + "/" +
               std::to_string(e.label));
  check.expect(got == published, "J(4) edge list differs from the published figure");

  std::set<Word> iso;
  std::size_t rejected = 0;
  for (const EdgeCycle& cycle : enumerate_eulerian_cycles(graph)) {
    Word w = word_from_cycle(cycle);
    if (!is_ulw(w, UlwMode::counting).is_ulw || !is_jackson_type(w)) ++rejected;
    iso.insert(canonicalize(w, true).canonical);
  }
  check.expect(rejected == 0, std::to_string(rejected) + " Eulerian words failed verification");

  std::set<Word> table;
  for (std::string_view text : fixtures::kJacksonTable)
    table.insert(canonicalize(W(text), true).canonical);
  check.expect(iso == table, "Eulerian classes differ from table 1");
  return check;
}

// ---- degree-5 smoke test ----------------------------------------------------

Check criterion_smoke() {
  Check check;
  auto start = std::chrono::steady_clock::now();
  Word w = word_from_cycle(find_eulerian_cycle(build_jackson_graph(5)));
  check.expect(w.size() == 120, "J(5) word length " + std::to_string(w.size()));
  check.expect(is_ulw(w, UlwMode::counting).is_ulw, "J(5) word failed the counting check");
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  check.detail << (check.detail.tellp() > 0 ? "; " : "") << elapsed << " ms";
  return check;
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Check()> run;
};

const std::vector<Criterion> kCriteria = {
    {"1", "census reproduction (1, 1, 3, 492 labeled; 41 iso = 20 Jackson + 21 non-Jackson)",
     criterion_census},
    {"2", "table fidelity (tables 1 and 2 equal the census classes)", criterion_tables},
    {"3", "counterexample fixtures", criterion_counterexamples},
    {"4", "mode equivalence (729 degree-3 words + degree-4 census)", criterion_mode_equivalence},
    {"5", "theorem suites on every census word", criterion_theorems},
    {"6", "lex-code pipeline", criterion_lexcode},
    {"7", "Jackson pipeline", criterion_jackson},
    {"smoke", "degree-5 single-witness smoke test", criterion_smoke},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> selected;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) selected.push_back(argv[++i]);
  }

  int failures = 0;
  for (const Criterion& criterion : kCriteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), criterion.id) == selected.end())
      continue;
    Check check = criterion.run();
    std::string label = criterion.id == "smoke" ? "degree-5 smoke" : "criterion " + criterion.id;
    if (check.ok) {
      std::cout << "PASS — " << label << ": " << criterion.title;
      if (check.detail.tellp() > 0) std::cout << " [" << check.detail.str() << "]";
      std::cout << '\n';
    } else {
      ++failures;
      std::cout << "FAIL — " << label << ": " << criterion.title << " [" << check.detail.str()
                << "]\n";
    }
  }
  return failures == 0 ? 0 : 1;
}
