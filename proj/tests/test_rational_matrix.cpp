#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "rauzylab/rational_matrix.hpp"

using namespace rauzylab;

namespace {

  RationalMatrix random_matrix(std::mt19937& rng,
                               std::size_t   rows,
                               std::size_t   cols,
                               bool          fractions) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (rng() % 3 == 0) {
          continue;
        }
        long num = static_cast<long>(rng() % 7) - 3;
        long den = fractions ? 1 + static_cast<long>(rng() % 5) : 1;
        m(i, j)  = Rational(num, den);
        m(i, j).canonicalize();
      }
    }
    return m;
  }

  // A matrix of prescribed rank r as a product of rows x r and r x cols.
  RationalMatrix low_rank(std::mt19937& rng,
                          std::size_t   rows,
                          std::size_t   cols,
                          std::size_t   r) {
    auto a = random_matrix(rng, rows, r, true);
    auto b = random_matrix(rng, r, cols, false);
    return a * b;
  }

  std::size_t pivot_count(RationalMatrix const& r) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      for (std::size_t j = 0; j < r.cols(); ++j) {
        if (r(i, j) != 0) {
          ++count;
          break;
        }
      }
    }
    return count;
  }

}  // namespace

TEST_CASE("construction") {
  auto const id = RationalMatrix::identity(3);
  CHECK(id.rank() == 3);
  CHECK(id.nonzero_count() == 3);
  auto const m = RationalMatrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  CHECK(m.at(2, 1) == 6);
  CHECK_THROWS_AS((void) m.at(3, 0), std::out_of_range);
  CHECK_THROWS_AS(RationalMatrix::from_rows({{1, 2}, {3}}),
                  std::invalid_argument);
  CHECK(m.transpose().transpose() == m);
  CHECK(m.transpose()(1, 2) == 6);
  CHECK(RationalMatrix(0, 4).rank() == 0);
  CHECK(RationalMatrix(3, 0).rank() == 0);
}

TEST_CASE("small ranks") {
  CHECK(RationalMatrix::from_rows({{1, 2}, {2, 4}}).rank() == 1);
  CHECK(RationalMatrix::from_rows({{0, 0}, {0, 0}}).rank() == 0);
  CHECK(RationalMatrix::from_rows({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}).rank()
        == 2);
  CHECK(RationalMatrix::from_rows({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}})
            .rank_bareiss()
        == 2);
}

TEST_CASE("three rank routes agree on random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    auto const  m    = random_matrix(rng, rows, cols, trial % 2 == 1);
    auto const  r    = m.rank();
    CHECK(r == m.rank_bareiss());
    CHECK(r == pivot_count(m.rref()));
    CHECK(r == m.transpose().rank());
  }
}

TEST_CASE("prescribed ranks") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r    = 1 + rng() % 4;
    auto const  m    = low_rank(rng, 8, 7, r);
    auto const  rank = m.rank();
    CHECK(rank <= r);
    CHECK(rank == m.rank_bareiss());
  }
  // Generic full-rank factors give exactly rank r.
  auto const a = RationalMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}, {2, 3}});
  auto const b = RationalMatrix::from_rows({{1, 2, 3, 4, 5}, {0, 1, 0, 1, 7}});
  CHECK((a * b).rank() == 2);
}

TEST_CASE("rank is invariant under permutations") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto const               m = random_matrix(rng, 7, 6, true);
    std::vector<std::size_t> rows(7), cols(6);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    auto const p = m.permuted(rows, cols);
    CHECK(p(0, 0) == m(rows[0], cols[0]));
    CHECK(p.rank() == m.rank());
  }
}

TEST_CASE("rref") {
  auto const r = RationalMatrix::from_rows({{2, 4, 2}, {1, 3, 2}}).rref();
  CHECK(r == RationalMatrix::from_rows({{1, 0, -1}, {0, 1, 1}}));
}

TEST_CASE("kernel basis") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
    auto const  m    = random_matrix(rng, rows, cols, true);
    auto const  ker  = m.kernel_basis();
    CHECK(ker.size() == cols - m.rank());
    for (auto const& k : ker) {
      auto const image = m.apply(k);
      CHECK(std::all_of(image.begin(), image.end(),
                        [](Rational const& x) { return x == 0; }));
    }
    if (!ker.empty()) {
      RationalMatrix basis(cols, ker.size());
      for (std::size_t j = 0; j < ker.size(); ++j) {
        for (std::size_t i = 0; i < cols; ++i) {
          basis(i, j) = ker[j][i];
        }
      }
      CHECK(basis.rank() == ker.size());
    }
  }
}

TEST_CASE("column space membership") {
  auto const m = RationalMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}});
  std::vector<Rational> in{Rational(1, 2), 3, Rational(7, 2)};
  std::vector<Rational> out{1, 0, 0};
  CHECK(m.in_column_space(in));
  CHECK_FALSE(m.in_column_space(out));

  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    auto const            a = random_matrix(rng, 6, 3, true);
    std::vector<Rational> x{Rational(rng() % 5), Rational(1, 3), -2};
    CHECK(a.in_column_space(a.apply(x)));
  }
}

TEST_CASE("products and concatenation") {
  auto const a = RationalMatrix::from_rows({{1, 2}, {3, 4}});
  auto const b = RationalMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == RationalMatrix::from_rows({{2, 1}, {4, 3}}));
  CHECK(a * RationalMatrix::identity(2) == a);
  CHECK_THROWS_AS(a * RationalMatrix(3, 1), std::invalid_argument);

  auto const h = a.hcat(b);
  CHECK(h.cols() == 4);
  CHECK(h(1, 3) == 0);
  CHECK(h(0, 3) == 1);
  CHECK(h.rank() == 2);
  CHECK_THROWS_AS((void) a.hcat(RationalMatrix(3, 1)), std::invalid_argument);

  std::vector<Rational> x{1, -1};
  auto const            y = a.apply(x);
  CHECK(y == std::vector<Rational>{-1, -1});
  CHECK_FALSE(a.to_string().empty());
}
