// Brute-force reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#ifndef RAUZYLAB_TESTS_ORACLES_HPP_
#define RAUZYLAB_TESTS_ORACLES_HPP_

#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace oracle {

  using Words = std::set<std::string>;

  // A_1 = {b}, A_2 = {a}, A_k = A_{k-1}A_{k-2} u A_{k-2}A_{k-1}, by plain
  // set arithmetic.
  inline std::vector<Words> generations(std::size_t up_to) {
    std::vector<Words> A(up_to + 1);
    if (up_to >= 1) {
      A[1] = {"b"};
    }
    if (up_to >= 2) {
      A[2] = {"a"};
    }
    for (std::size_t k = 3; k <= up_to; ++k) {
      for (auto const& u : A[k - 1]) {
        for (auto const& v : A[k - 2]) {
          A[k].insert(u + v);
          A[k].insert(v + u);
        }
      }
    }
    return A;
  }

  inline Words factors(Words const& s, std::size_t m) {
    Words out;
    for (auto const& w : s) {
      for (std::size_t i = 0; i + m <= w.size(); ++i) {
        out.insert(w.substr(i, m));
      }
    }
    return out;
  }

  // Union of F(A_k, m) over k <= 8. By the generation identity at n = 7,
  // F(A_8, 13) already holds every legal word of length 13, hence (factors
  // of factors) every legal word of length <= 13.
  inline Words fibonacci_language(std::size_t m) {
    static auto const A   = generations(8);
    Words             out;
    for (auto const& gen : A) {
      auto f = factors(gen, m);
      out.insert(f.begin(), f.end());
    }
    return out;
  }

  // Every choice of one image per letter, concatenated.
  inline Words product(std::string const&                             w,
                       std::map<char, std::vector<std::string>> const& images) {
    Words out = {""};
    for (char x : w) {
      Words next;
      for (auto const& prefix : out) {
        for (auto const& image : images.at(x)) {
          next.insert(prefix + image);
        }
      }
      out = std::move(next);
    }
    return out;
  }

  // Strong connectivity by forward and backward reachability from vertex 0.
  inline bool strongly_connected(
      std::size_t                                             vertex_count,
      std::vector<std::pair<std::size_t, std::size_t>> const& edges) {
    if (vertex_count == 0) {
      return false;
    }
    auto reach = [&](bool forward) {
      std::vector<bool>       seen(vertex_count, false);
      std::queue<std::size_t> todo;
      todo.push(0);
      seen[0] = true;
      while (!todo.empty()) {
        auto v = todo.front();
        todo.pop();
        for (auto const& [t, h] : edges) {
          auto from = forward ? t : h, to = forward ? h : t;
          if (from == v && !seen[to]) {
            seen[to] = true;
            todo.push(to);
          }
        }
      }
      for (bool b : seen) {
        if (!b) {
          return false;
        }
      }
      return true;
    };
    return reach(true) && reach(false);
  }

}  // namespace oracle

#endif  // RAUZYLAB_TESTS_ORACLES_HPP_
