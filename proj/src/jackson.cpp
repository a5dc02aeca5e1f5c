#include "ulw/jackson.hpp"

#include <algorithm>
#include <stdexcept>

namespace ulw {

namespace {

void distinct_letter_words(int n, int len, std::vector<Letter>& acc, std::uint32_t used,
                           std::vector<Word>& out) {
  if (static_cast<int>(acc.size()) == len) {
    out.emplace_back(acc, n);
    return;
  }
  for (Letter a = 1; a <= n; ++a) {
    if (used & (1u << (a - 1))) continue;
    acc.push_back(a);
    distinct_letter_words(n, len, acc, used | (1u << (a - 1)), out);
    acc.pop_back();
  }
}

}  // namespace

JacksonGraph::JacksonGraph(int degree) : degree_(degree) {
  if (degree <= 2) throw std::domain_error("the Jackson graph is defined for degree > 2");
  std::vector<Letter> acc;
  distinct_letter_words(degree, degree - 2, acc, 0, vertices_);
  std::sort(vertices_.begin(), vertices_.end());

  const std::size_t affix = static_cast<std::size_t>(degree) - 3;
  for (std::size_t ui = 0; ui < vertices_.size(); ++ui) {
    const Word& u = vertices_[ui];
    for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
      const Word& v = vertices_[vi];
      if (u.at(0) == v.at(v.size() - 1)) continue;
      bool overlap = true;
      for (std::size_t k = 0; k < affix && overlap; ++k)
        overlap = u.at(u.size() - affix + k) == v.at(k);
      if (!overlap) continue;
      edges_.push_back({static_cast<int>(ui), static_cast<int>(vi), u.at(0)});
    }
  }
  out_.assign(vertices_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e)
    out_[static_cast<std::size_t>(edges_[e].from)].push_back(static_cast<int>(e));
  // edges_ is built in (from, to) sorted order, so each out list is sorted by target
}

std::string JacksonGraph::dot() const {
  std::string out = "digraph jackson {\n";
  for (const JacksonEdge& e : edges_) {
    out += "  \"" + vertices_[static_cast<std::size_t>(e.from)].str() + "\" -> \"" +
           vertices_[static_cast<std::size_t>(e.to)].str() + "\" [label=\"" +
           std::to_string(e.label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

JacksonGraph build_jackson_graph(int degree) { return JacksonGraph(degree); }

EdgeCycle find_eulerian_cycle(const JacksonGraph& g) {
  // stack-based Hierholzer over the vertex walk; Jackson graphs have no
  // parallel edges, so consecutive circuit vertices identify the edge
  std::vector<std::size_t> cursor(g.vertices().size(), 0);
  std::vector<bool> used(g.edges().size(), false);
  std::vector<int> stack{0};
  std::vector<int> circuit;
  while (!stack.empty()) {
    int v = stack.back();
    auto& cur = cursor[static_cast<std::size_t>(v)];
    const auto& outs = g.out(v);
    while (cur < outs.size() && used[static_cast<std::size_t>(outs[cur])]) ++cur;
    if (cur == outs.size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      int e = outs[cur];
      used[static_cast<std::size_t>(e)] = true;
      stack.push_back(g.edges()[static_cast<std::size_t>(e)].to);
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  EdgeCycle cycle{g.degree(), {}};
  cycle.edges.reserve(g.edges().size());
  for (std::size_t i = 0; i + 1 < circuit.size(); ++i) {
    for (int e : g.out(circuit[i])) {
      if (g.edges()[static_cast<std::size_t>(e)].to == circuit[i + 1]) {
        cycle.edges.push_back(g.edges()[static_cast<std::size_t>(e)]);
        break;
      }
    }
  }
  return cycle;
}

std::vector<EdgeCycle> enumerate_eulerian_cycles(const JacksonGraph& g) {
  if (g.degree() > 5)
    throw capacity_error("Eulerian cycle enumeration is guarded at degree <= 5");
  std::vector<EdgeCycle> cycles;
  std::vector<bool> used(g.edges().size(), false);
  std::vector<int> path;  // edge indices
  const JacksonEdge anchor = g.edges()[0];

  auto emit = [&] {
    EdgeCycle cycle{g.degree(), {}};
    cycle.edges.reserve(path.size());
    for (int e : path) cycle.edges.push_back(g.edges()[static_cast<std::size_t>(e)]);
    cycles.push_back(std::move(cycle));
  };

  std::vector<int> frame;
  auto dfs = [&](auto&& self, int vertex) -> void {
    if (path.size() == g.edges().size()) {
      if (vertex == anchor.from) emit();
      return;
    }
    for (int e : g.out(vertex)) {
      if (used[static_cast<std::size_t>(e)]) continue;
      used[static_cast<std::size_t>(e)] = true;
      path.push_back(e);
      self(self, g.edges()[static_cast<std::size_t>(e)].to);
      path.pop_back();
      used[static_cast<std::size_t>(e)] = false;
    }
  };

  used[0] = true;
  path.push_back(0);
  dfs(dfs, anchor.to);
  return cycles;
}

Word word_from_cycle(const EdgeCycle& c) {
  if (c.edges.empty()) throw std::domain_error("empty walk");
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const JacksonEdge& e = c.edges[i];
    const JacksonEdge& next = c.edges[(i + 1) % c.edges.size()];
    if (e.to != next.from) throw std::domain_error("edge sequence is not a closed walk");
  }
  std::vector<Letter> letters;
  letters.reserve(c.edges.size());
  for (const JacksonEdge& e : c.edges) letters.push_back(e.label);
  return Word(std::move(letters), c.degree);
}

}  // namespace ulw
