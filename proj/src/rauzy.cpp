#include "rauzylab/rauzy.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "rauzylab/errors.hpp"

namespace rauzylab {

  ////////////////////////////////////////////////////////////////////////
  // Strong connectivity
  ////////////////////////////////////////////////////////////////////////

  std::size_t strongly_connected_components(Digraph const& g) {
    std::size_t const                     N = g.vertex_count;
    std::vector<std::vector<std::size_t>> out(N);
    for (auto const& [tail, head] : g.edges) {
      out.at(tail).push_back(head);
    }
    constexpr std::size_t    unvisited = SIZE_MAX;
    std::vector<std::size_t> index(N, unvisited), low(N, 0);
    std::vector<bool>        on_stack(N, false);
    std::vector<std::size_t> stack;
    std::size_t              next_index = 0, components = 0;

    // Iterative Tarjan: frames are (vertex, position in its adjacency list).
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    for (std::size_t root = 0; root < N; ++root) {
      if (index[root] != unvisited) {
        continue;
      }
      frames.emplace_back(root, 0);
      index[root] = low[root] = next_index++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!frames.empty()) {
        auto& [v, pos] = frames.back();
        if (pos < out[v].size()) {
          std::size_t w = out[v][pos++];
          if (index[w] == unvisited) {
            index[w] = low[w] = next_index++;
            stack.push_back(w);
            on_stack[w] = true;
            frames.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        std::size_t const done = v;
        frames.pop_back();
        if (!frames.empty()) {
          auto const parent = frames.back().first;
          low[parent]       = std::min(low[parent], low[done]);
        }
        if (low[done] == index[done]) {
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
          } while (w != done);
          ++components;
        }
      }
    }
    return components;
  }

  bool strongly_connected(Digraph const& g) {
    return g.vertex_count > 0 && strongly_connected_components(g) == 1;
  }

  bool strongly_connected(RauzyGraph const& g) {
    return strongly_connected(g.shape());
  }

  ////////////////////////////////////////////////////////////////////////
  // RauzyGraph
  ////////////////////////////////////////////////////////////////////////

  RauzyGraph::RauzyGraph(std::size_t n, WordSet vertices, WordSet edge_words)
      : _n(n),
        _vertices(std::move(vertices)),
        _edge_words(std::move(edge_words)),
        _out_degree(_vertices.size(), 0),
        _in_degree(_vertices.size(), 0) {
    _edges.reserve(_edge_words.size());
    for (auto const& w : _edge_words) {
      if (w.size() != n + 1) {
        throw InvariantViolation("edge word \"" + w + "\" of R_"
                                 + std::to_string(n)
                                 + " has the wrong length");
      }
      auto tail = _vertices.index_of(std::string_view(w).substr(0, n));
      auto head = _vertices.index_of(std::string_view(w).substr(1, n));
      if (!tail || !head) {
        throw InvariantViolation("edge \"" + w + "\" of R_" + std::to_string(n)
                                 + " has an endpoint outside the vertex set");
      }
      _edges.push_back({w, *tail, *head});
      ++_out_degree[*tail];
      ++_in_degree[*head];
    }
  }

  Digraph RauzyGraph::shape() const {
    Digraph g;
    g.vertex_count = _vertices.size();
    g.edges.reserve(_edges.size());
    for (auto const& e : _edges) {
      g.edges.emplace_back(e.tail, e.head);
    }
    return g;
  }

  RauzyGraph build_rauzy(LanguageOracle const& oracle, std::size_t n) {
    if (n == 0) {
      throw DomainError("Rauzy graphs are indexed from n = 1");
    }
    return RauzyGraph(n, oracle.factors(n), oracle.factors(n + 1));
  }

  ////////////////////////////////////////////////////////////////////////
  // Projections
  ////////////////////////////////////////////////////////////////////////

  Word project_word(std::string_view u, std::size_t n) {
    if (u.empty()) {
      throw DomainError("cannot project the empty word");
    }
    return n % 2 == 0 ? Word(u.substr(0, u.size() - 1)) : Word(u.substr(1));
  }

  bool ProjectionMap::vertex_surjective() const {
    std::vector<bool> hit(target_vertex_count, false);
    for (auto v : vertex_map) {
      hit.at(v) = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool ProjectionMap::edge_surjective() const {
    std::vector<bool> hit(target_edge_count, false);
    for (auto e : edge_map) {
      hit.at(e) = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  ProjectionMap projection(RauzyGraph const& lower, RauzyGraph const& upper) {
    std::size_t const n = lower.n();
    if (upper.n() != n + 1) {
      throw DomainError("projection needs R_n and R_{n+1}");
    }
    ProjectionMap map;
    map.n                   = n;
    map.parity              = n % 2 == 0 ? Parity::even : Parity::odd;
    map.target_vertex_count = lower.vertex_count();
    map.target_edge_count   = lower.edge_count();
    map.vertex_map.reserve(upper.vertex_count());
    for (auto const& u : upper.vertices()) {
      auto image = lower.vertices().index_of(project_word(u, n));
      if (!image) {
        throw InvariantViolation("vertex \"" + u + "\" of R_"
                                 + std::to_string(n + 1)
                                 + " projects outside R_" + std::to_string(n));
      }
      map.vertex_map.push_back(*image);
    }
    map.edge_map.reserve(upper.edge_count());
    for (auto const& e : upper.edges()) {
      auto image = lower.edge_index(project_word(e.word, n));
      if (!image) {
        throw InvariantViolation("edge \"" + e.word + "\" of R_"
                                 + std::to_string(n + 1)
                                 + " projects outside R_" + std::to_string(n));
      }
      auto const& target = lower.edges()[*image];
      if (target.tail != map.vertex_map[e.tail]
          || target.head != map.vertex_map[e.head]) {
        throw InvariantViolation("edge \"" + e.word
                                 + "\" does not project compatibly");
      }
      map.edge_map.push_back(*image);
    }
    return map;
  }

  ////////////////////////////////////////////////////////////////////////
  // Threads
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> build_thread(std::string_view w,
                                 std::size_t      center,
                                 std::size_t      depth) {
    if (depth == 0) {
      throw DomainError("thread depth must be at least 1");
    }
    // Steps n = 1, ..., depth - 1 grow left for odd n, right for even n.
    std::size_t const left_steps  = depth / 2;
    std::size_t const right_steps = (depth - 1) / 2;
    if (center >= w.size() || center < left_steps
        || center + right_steps >= w.size()) {
      throw DomainError("thread window of depth " + std::to_string(depth)
                        + " does not fit inside the word");
    }
    std::vector<Word> thread;
    thread.reserve(depth);
    std::size_t lo = center, hi = center + 1;
    thread.emplace_back(w.substr(lo, 1));
    for (std::size_t n = 1; n < depth; ++n) {
      if (n % 2 == 0) {
        ++hi;
      } else {
        --lo;
      }
      thread.emplace_back(w.substr(lo, hi - lo));
    }
    return thread;
  }

  bool is_consistent_thread(std::span<Word const> thread) {
    for (std::size_t i = 0; i < thread.size(); ++i) {
      if (thread[i].size() != i + 1) {
        return false;
      }
      if (i + 1 < thread.size()
          && project_word(thread[i + 1], i + 1) != thread[i]) {
        return false;
      }
    }
    return true;
  }

  bool thread_consistency(std::string_view w,
                          std::size_t      center,
                          std::size_t      depth) {
    auto thread = build_thread(w, center, depth);
    return is_consistent_thread(thread);
  }

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  std::string export_dot(RauzyGraph const& g, bool highlight_specials) {
    std::ostringstream out;
    out << "digraph R" << g.n() << " {\n";
    out << "  node [shape=ellipse];\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      out << "  v" << v << " [label=\"" << g.vertices()[v] << "\"";
      if (highlight_specials && g.out_degree(v) >= 2) {
        out << ", style=filled, fillcolor=grey";
      }
      out << "];\n";
    }
    for (auto const& e : g.edges()) {
      out << "  v" << e.tail << " -> v" << e.head << " [label=\"" << e.word
          << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string to_json(RauzyGraph const& g) {
    nlohmann::ordered_json doc;
    doc["n"]        = g.n();
    doc["vertices"] = g.vertices().words();
    doc["edges"]    = nlohmann::ordered_json::array();
    for (auto const& e : g.edges()) {
      doc["edges"].push_back(
          {{"word", e.word}, {"tail", e.tail}, {"head", e.head}});
    }
    return doc.dump();
  }

}  // namespace rauzylab
