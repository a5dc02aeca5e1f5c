#ifndef ULW_JACKSON_HPP
#define ULW_JACKSON_HPP

#include <string>
#include <vector>

#include "ulw/word.hpp"

namespace ulw {

struct JacksonEdge {
  int from = 0;  // vertex indices
  int to = 0;
  Letter label = 0;

  bool operator==(const JacksonEdge&) const = default;
};

/// The Jackson graph J(n), n > 2: vertices are the permutations of n-2
/// distinct letters of {1..n}; there is an edge u -> v iff the length-(n-3)
/// suffix of u equals the length-(n-3) prefix of v and the first letter of
/// u differs from the last letter of v. The edge label is the first letter
/// of u. Every vertex has indegree = outdegree = 2.
class JacksonGraph {
public:
  explicit JacksonGraph(int degree);

  int degree() const { return degree_; }
  const std::vector<Word>& vertices() const { return vertices_; }
  const std::vector<JacksonEdge>& edges() const { return edges_; }
  /// Edge indices leaving a vertex, sorted by target.
  const std::vector<int>& out(int vertex) const { return out_[static_cast<std::size_t>(vertex)]; }

  std::string dot() const;

private:
  int degree_;
  std::vector<Word> vertices_;
  std::vector<JacksonEdge> edges_;
  std::vector<std::vector<int>> out_;
};

JacksonGraph build_jackson_graph(int degree);

/// A closed walk given by its edge sequence.
struct EdgeCycle {
  int degree = 0;
  std::vector<JacksonEdge> edges;
};

/// One Eulerian cycle by Hierholzer's algorithm. Deterministic: the walk
/// starts at the least vertex and always follows the smallest unused
/// outgoing edge (by target vertex under the natural order).
EdgeCycle find_eulerian_cycle(const JacksonGraph& g);

/// All Eulerian cycles, each rooted at the lexicographically least edge so
/// that every cyclic edge sequence is produced exactly once. Distinct
/// cycles may still spell rotation-equivalent words. Guarded at degree <= 5.
std::vector<EdgeCycle> enumerate_eulerian_cycles(const JacksonGraph& g);

/// The word spelled by concatenating the edge labels of a closed walk.
Word word_from_cycle(const EdgeCycle& c);

}  // namespace ulw

#endif  // ULW_JACKSON_HPP
