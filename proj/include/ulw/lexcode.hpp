#ifndef ULW_LEXCODE_HPP
#define ULW_LEXCODE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ulw/word.hpp"

namespace ulw {

/// A lex-code of degree n: every member is the lexicographic minimum of the
/// set for exactly one total order, and every proper prefix of a member is
/// a prefix of at least two members. Members are kept sorted.
struct LexCode {
  int degree = 0;
  std::vector<Word> words;

  bool operator==(const LexCode&) const = default;
};

struct LexCodeReport {
  bool valid = false;
  /// Each total order paired with its unique lexicographic minimizer.
  std::vector<std::pair<TotalOrder, Word>> minimizer_map;
  std::vector<std::string> violations;
};

/// Checks Conditions 1-2 over all n! orders. Guarded at degree <= 8.
LexCodeReport validate_lex_code(const std::vector<Word>& words, int degree);

struct SxEdge {
  int from = 0;
  int to = 0;
  Letter witness = 0;  // the letter a with x a prefix of a.y

  bool operator==(const SxEdge&) const = default;
};

/// The digraph of the relation S_X = {(x,y) | exists a: x is a prefix of ay}.
class SxDigraph {
public:
  SxDigraph(int degree, std::vector<Word> vertices);

  int degree() const { return degree_; }
  const std::vector<Word>& vertices() const { return vertices_; }
  const std::vector<SxEdge>& edges() const { return edges_; }
  const std::vector<int>& out(int vertex) const { return out_[static_cast<std::size_t>(vertex)]; }

  std::string dot() const;

private:
  int degree_;
  std::vector<Word> vertices_;
  std::vector<SxEdge> edges_;
  std::vector<std::vector<int>> out_;
};

SxDigraph sx_digraph(const LexCode& code);

/// A Hamiltonian cycle (x_0, ..., x_{k-1}, x_0) given by vertex indices;
/// witnesses[i] is the letter on the edge (x_i, x_{i+1 mod k}).
struct HamiltonianCycle {
  std::vector<int> vertices;
  std::vector<Letter> witnesses;
};

/// First Hamiltonian cycle in backtracking order (vertices and successors
/// tried in sorted order), if one exists.
std::optional<HamiltonianCycle> find_hamiltonian_cycle(const SxDigraph& g);

/// Every Hamiltonian cycle, rooted at vertex 0.
std::vector<HamiltonianCycle> all_hamiltonian_cycles(const SxDigraph& g);

/// The ULW spelled by a Hamiltonian cycle: the concatenation of the edge
/// witness letters a_0 a_1 ... a_{k-1}.
Word synthesize_ulw(const LexCode& code, const HamiltonianCycle& cycle);

/// One refinement step: split the cell of `prefix` by min-of-gamma.
struct RefinementStep {
  Word prefix;
  std::vector<Letter> gamma;
};

/// Script file format: one step per line, "x : a1,a2,..." with "-" for the
/// empty word; '#' starts a comment.
struct RefinementScript {
  std::vector<RefinementStep> steps;

  static RefinementScript parse(std::istream& in, int degree);
  static RefinementScript parse_text(const std::string& text, int degree);
  std::string str() const;
};

/// Executes the partition-refinement construction: start with X = {eps} and
/// C_eps = all n! orders; each step replaces x by {xa : C_xa nonempty}.
/// The script must leave every cell a singleton. Errors carry the step index.
LexCode refine_lex_code(int degree, const RefinementScript& script);

/// All lex-codes reachable by the refinement procedure whose S_X digraph is
/// Hamiltonian, with member length bounded by max_word_len (clamped to n!).
/// Guarded at degree <= 4.
std::vector<LexCode> search_hamiltonian_lex_codes(int degree, std::size_t max_word_len);

}  // namespace ulw

#endif  // ULW_LEXCODE_HPP
