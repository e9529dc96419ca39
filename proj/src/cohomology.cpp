#include "rauzylab/cohomology.hpp"

#include <string>

#include "rauzylab/complexity.hpp"
#include "rauzylab/errors.hpp"

namespace rauzylab {

  RationalMatrix coboundary_matrix(Digraph const& g) {
    RationalMatrix d(g.edges.size(), g.vertex_count);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto const [tail, head] = g.edges[e];
      d(e, head) += 1;
      d(e, tail) -= 1;
    }
    return d;
  }

  RationalMatrix coboundary_matrix(RauzyGraph const& g) {
    return coboundary_matrix(g.shape());
  }

  std::size_t h1_rank(Digraph const& g) {
    return g.edges.size() - coboundary_matrix(g).rank();
  }

  std::size_t h1_rank(RauzyGraph const& g) {
    auto const rank     = h1_rank(g.shape());
    auto const expected = g.edge_count() - g.vertex_count() + 1;
    if (rank != expected) {
      throw InvariantViolation("H^1(R_" + std::to_string(g.n()) + ") has rank "
                               + std::to_string(rank) + ", expected s(n) + 1 = "
                               + std::to_string(expected));
    }
    return rank;
  }

  PullbackMatrices pullback_matrices(ProjectionMap const& map) {
    PullbackMatrices m{
        RationalMatrix(map.vertex_map.size(), map.target_vertex_count),
        RationalMatrix(map.edge_map.size(), map.target_edge_count)};
    for (std::size_t u = 0; u < map.vertex_map.size(); ++u) {
      m.vertices(u, map.vertex_map[u]) = 1;
    }
    for (std::size_t e = 0; e < map.edge_map.size(); ++e) {
      m.edges(e, map.edge_map[e]) = 1;
    }
    return m;
  }

  CochainMap cochain_map(Digraph const&       lower,
                         Digraph const&       upper,
                         ProjectionMap const& map) {
    return CochainMap{coboundary_matrix(lower),
                      coboundary_matrix(upper),
                      pullback_matrices(map)};
  }

  bool injective_on_cochains(CochainMap const& f) {
    return f.pullback.vertices.rank() == f.pullback.vertices.cols()
           && f.pullback.edges.rank() == f.pullback.edges.cols();
  }

  bool commutes(CochainMap const& f) {
    return f.target_coboundary * f.pullback.vertices
           == f.pullback.edges * f.source_coboundary;
  }

  InducedMap induced_h1_map(CochainMap const& f) {
    auto const& dx = f.target_coboundary;
    auto const& dy = f.source_coboundary;
    InducedMap  result{};
    result.rank      = f.pullback.edges.hcat(dx).rank() - dx.rank();
    result.source_h1 = dy.rows() - dy.rank();
    result.injective = result.rank == result.source_h1;
    return result;
  }

  std::size_t quotient_h0(CochainMap const& f) {
    // dim D^{-1}(W) = dim ker D + dim(im D n W), and
    // dim(U n W) = rank U + rank W - rank [U | W].
    auto const& dx         = f.target_coboundary;
    auto const& m1         = f.pullback.edges;
    auto const  rank_d     = dx.rank();
    auto const  kernel     = dx.cols() - rank_d;
    auto const  meet       = rank_d + m1.rank() - dx.hcat(m1).rank();
    auto const  preimage   = kernel + meet;
    auto const  image_m0   = f.pullback.vertices.rank();
    if (preimage < image_m0) {
      throw InvariantViolation("pulled-back 0-cochains are not cocycles "
                               "modulo pulled-back 1-cochains");
    }
    return preimage - image_m0;
  }

  std::size_t quotient_h1(CochainMap const& f) {
    return f.target_coboundary.rows()
           - f.target_coboundary.hcat(f.pullback.edges).rank();
  }

  CohomologyReport stage_report(LanguageOracle const& oracle, std::size_t n) {
    auto const lower = build_rauzy(oracle, n);
    auto const upper = build_rauzy(oracle, n + 1);
    auto const map   = projection(lower, upper);
    auto const f     = cochain_map(lower.shape(), upper.shape(), map);

    CohomologyReport report{};
    report.n                  = n;
    report.vertices           = lower.vertex_count();
    report.edges              = lower.edge_count();
    report.h1_rank            = f.source_coboundary.rows()
                                - f.source_coboundary.rank();
    report.s_plus_1           = static_cast<std::size_t>(
                          first_difference(oracle, n) + 1);
    report.strongly_connected = strongly_connected(lower);
    report.pullback_injective_on_cochains = injective_on_cochains(f);
    report.commutes                       = commutes(f);
    auto const induced                    = induced_h1_map(f);
    report.induced_map_rank               = induced.rank;
    report.induced_injective = induced.injective && induced.rank == report.h1_rank;
    report.h0_quotient_dim   = quotient_h0(f);
    report.h1_quotient_dim   = quotient_h1(f);
    report.upper_h1_rank     = f.target_coboundary.rows()
                           - f.target_coboundary.rank();
    return report;
  }

  DirectLimitReport direct_limit_report(LanguageOracle const& oracle,
                                        std::size_t           N) {
    if (N < 2) {
      throw DomainError("the direct limit report needs at least two stages");
    }
    DirectLimitReport result{};
    result.all_injective       = true;
    result.ranks_nondecreasing = true;
    for (std::size_t n = 1; n <= N; ++n) {
      auto report = stage_report(oracle, n);
      auto fail   = [n](std::string const& what) {
        throw InvariantViolation("stage " + std::to_string(n) + ": " + what);
      };
      if (report.h1_rank != report.s_plus_1) {
        fail("h1 rank " + std::to_string(report.h1_rank) + " != s(n) + 1 = "
             + std::to_string(report.s_plus_1));
      }
      if (!report.pullback_injective_on_cochains) {
        fail("pullback is not injective on cochains");
      }
      if (!report.commutes) {
        fail("pullback does not commute with the coboundary");
      }
      if (report.h0_quotient_dim != 0) {
        fail("H^0 of the quotient complex is nonzero");
      }
      result.all_injective = result.all_injective && report.induced_injective;
      if (!result.stages.empty()) {
        auto const previous = result.stages.back().h1_rank;
        if (report.h1_rank < previous) {
          result.ranks_nondecreasing = false;
        } else if (report.h1_rank > previous) {
          ++result.strict_increases;
        }
      }
      result.stages.push_back(report);
    }
    return result;
  }

}  // namespace rauzylab
