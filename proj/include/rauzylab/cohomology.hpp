// Rational cochain computations on Rauzy graphs and the maps between them.

#ifndef RAUZYLAB_COHOMOLOGY_HPP_
#define RAUZYLAB_COHOMOLOGY_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rauzylab/language.hpp"
#include "rauzylab/rational_matrix.hpp"
#include "rauzylab/rauzy.hpp"

namespace rauzylab {

  //! The coboundary C^0 -> C^1 as an |E| x |V| matrix: the row of an edge
  //! has +1 at its head and -1 at its tail, so loops give zero rows.
  RationalMatrix coboundary_matrix(Digraph const& g);
  RationalMatrix coboundary_matrix(RauzyGraph const& g);

  //! dim C^1 - rank of the coboundary.
  std::size_t h1_rank(Digraph const& g);

  //! As above, and throws InvariantViolation unless the value is
  //! |E| - |V| + 1 = s(n) + 1.
  std::size_t h1_rank(RauzyGraph const& g);

  //! Pullbacks of a graph map X -> Y on 0- and 1-cochains. The vertex matrix
  //! is |V_X| x |V_Y| with a 1 where a vertex of X maps to a vertex of Y;
  //! the edge matrix is the same for edges.
  struct PullbackMatrices {
    RationalMatrix vertices;
    RationalMatrix edges;
  };

  PullbackMatrices pullback_matrices(ProjectionMap const& map);

  //! Everything needed to compare the cochain complexes of a graph map
  //! X -> Y: both coboundaries and both pullbacks.
  struct CochainMap {
    RationalMatrix source_coboundary;  // on Y (the target of the graph map)
    RationalMatrix target_coboundary;  // on X
    PullbackMatrices pullback;
  };

  //! lower is Y, upper is X, map is the graph map X -> Y.
  CochainMap cochain_map(Digraph const&       lower,
                         Digraph const&       upper,
                         ProjectionMap const& map);

  //! true iff both pullback matrices have full column rank.
  bool injective_on_cochains(CochainMap const& f);

  //! true iff coboundary_X * M0 == M1 * coboundary_Y exactly.
  bool commutes(CochainMap const& f);

  struct InducedMap {
    std::size_t rank;
    std::size_t source_h1;
    bool        injective;
  };

  //! The map H^1(Y) -> H^1(X) induced by the pullback, via
  //! rank [M1 | D_X] - rank D_X.
  InducedMap induced_h1_map(CochainMap const& f);

  //! dim H^0 of the quotient complex C(X) / f^*C(Y):
  //! dim {x : D_X x in im M1} - dim im M0.
  std::size_t quotient_h0(CochainMap const& f);

  //! dim H^1 of the quotient complex: |E_X| - rank [D_X | M1].
  std::size_t quotient_h1(CochainMap const& f);

  struct CohomologyReport {
    std::size_t n;
    std::size_t vertices;  // |V(R_n)|
    std::size_t edges;     // |E(R_n)|
    std::size_t h1_rank;
    std::size_t s_plus_1;
    bool        strongly_connected;
    bool        pullback_injective_on_cochains;
    bool        commutes;
    std::size_t induced_map_rank;
    bool        induced_injective;
    std::size_t h0_quotient_dim;
    std::size_t h1_quotient_dim;
    std::size_t upper_h1_rank;  // h1 of R_{n+1}
  };

  //! Cochain data for R_{n+1} -> R_n. Does not throw on failed checks; the
  //! booleans and counts record them.
  CohomologyReport stage_report(LanguageOracle const& oracle, std::size_t n);

  struct DirectLimitReport {
    std::vector<CohomologyReport> stages;
    bool                          all_injective;
    bool                          ranks_nondecreasing;
    std::size_t                   strict_increases;
  };

  //! stage_report for n = 1, ..., N. Throws InvariantViolation naming the
  //! first stage where h1 differs from s(n) + 1, the pullback fails to
  //! commute or is not injective on cochains, or H^0 of the quotient is
  //! nonzero. Throws DomainError if N < 2.
  DirectLimitReport direct_limit_report(LanguageOracle const& oracle,
                                        std::size_t           N);

}  // namespace rauzylab

#endif  // RAUZYLAB_COHOMOLOGY_HPP_
