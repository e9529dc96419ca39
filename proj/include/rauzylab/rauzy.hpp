// Rauzy graphs, the projections between consecutive ones, and finite
// threads of the inverse system they form.

#ifndef RAUZYLAB_RAUZY_HPP_
#define RAUZYLAB_RAUZY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rauzylab/language.hpp"
#include "rauzylab/word_set.hpp"

namespace rauzylab {

  //! An oriented multigraph on vertices 0, ..., vertex_count - 1. Parallel
  //! edges and loops are allowed.
  struct Digraph {
    std::size_t                                      vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (tail, head)
  };

  //! Number of strongly connected components (Tarjan).
  std::size_t strongly_connected_components(Digraph const& g);

  //! true iff g has at least one vertex and one strongly connected component.
  bool strongly_connected(Digraph const& g);

  struct RauzyEdge {
    Word        word;  // length n + 1
    std::size_t tail;  // index of word[0, n)
    std::size_t head;  // index of word[1, n + 1)
  };

  //! The Rauzy graph R_n: vertices F_n, one edge per word of F_{n+1} from
  //! its length-n prefix to its length-n suffix. Vertices and edges are
  //! indexed in shortlex order of their words.
  class RauzyGraph {
   public:
    //! Throws InvariantViolation if an edge endpoint is not a vertex.
    RauzyGraph(std::size_t n, WordSet vertices, WordSet edge_words);

    [[nodiscard]] std::size_t n() const noexcept {
      return _n;
    }
    [[nodiscard]] WordSet const& vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] std::vector<RauzyEdge> const& edges() const noexcept {
      return _edges;
    }
    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return _vertices.size();
    }
    [[nodiscard]] std::size_t edge_count() const noexcept {
      return _edges.size();
    }
    [[nodiscard]] std::size_t out_degree(std::size_t v) const {
      return _out_degree.at(v);
    }
    [[nodiscard]] std::size_t in_degree(std::size_t v) const {
      return _in_degree.at(v);
    }

    //! Index of the edge labelled w, if any.
    [[nodiscard]] std::optional<std::size_t>
    edge_index(std::string_view w) const {
      return _edge_words.index_of(w);
    }

    [[nodiscard]] Digraph shape() const;

   private:
    std::size_t              _n;
    WordSet                  _vertices;
    WordSet                  _edge_words;
    std::vector<RauzyEdge>   _edges;
    std::vector<std::size_t> _out_degree;
    std::vector<std::size_t> _in_degree;
  };

  //! R_n of the language of oracle. Throws DomainError if n == 0.
  RauzyGraph build_rauzy(LanguageOracle const& oracle, std::size_t n);

  bool strongly_connected(RauzyGraph const& g);

  enum class Parity { even, odd };

  //! The projection R_{n+1} -> R_n on words: drop the last letter when n is
  //! even, the first when n is odd. Applies to vertex words (length n + 1)
  //! and edge words (length n + 2) alike.
  Word project_word(std::string_view u, std::size_t n);

  //! A graph map R_{n+1} -> R_n given by its action on vertex and edge
  //! indices.
  struct ProjectionMap {
    std::size_t              n = 0;
    Parity                   parity = Parity::even;
    std::vector<std::size_t> vertex_map;  // vertex of R_{n+1} -> vertex of R_n
    std::vector<std::size_t> edge_map;    // edge of R_{n+1} -> edge of R_n
    std::size_t              target_vertex_count = 0;
    std::size_t              target_edge_count   = 0;

    [[nodiscard]] bool vertex_surjective() const;
    [[nodiscard]] bool edge_surjective() const;
  };

  //! The projection upper -> lower, where lower = R_n and upper = R_{n+1}.
  //! Throws DomainError if the parameters are not consecutive, and
  //! InvariantViolation if an image is missing from lower or an edge image
  //! does not join the images of its endpoints.
  ProjectionMap projection(RauzyGraph const& lower, RauzyGraph const& upper);

  //! x_1, ..., x_N: nested windows of w around position center, where
  //! x_{n+1} extends x_n by one letter on the right for even n and on the
  //! left for odd n, so that projecting x_{n+1} gives x_n back. Throws
  //! DomainError if the windows do not fit inside w or N == 0.
  std::vector<Word> build_thread(std::string_view w,
                                 std::size_t      center,
                                 std::size_t      depth);

  //! true iff |x_n| = n and x_{n+1} projects to x_n for every n.
  bool is_consistent_thread(std::span<Word const> thread);

  bool thread_consistency(std::string_view w,
                          std::size_t      center,
                          std::size_t      depth);

  //! DOT rendering of g. Vertex labels are words, edge labels are edge
  //! words; with highlight_specials, vertices of out-degree at least 2 are
  //! filled grey. Output depends only on g.
  std::string export_dot(RauzyGraph const& g, bool highlight_specials = true);

  //! {"n": n, "vertices": [...], "edges": [{"word":..,"tail":..,"head":..}]}
  std::string to_json(RauzyGraph const& g);

}  // namespace rauzylab

#endif  // RAUZYLAB_RAUZY_HPP_
