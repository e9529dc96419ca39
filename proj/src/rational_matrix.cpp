#include "rauzylab/rational_matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rauzylab {

  namespace {

    using SparseRow = std::vector<std::pair<std::size_t, mpz_class>>;

    // Divide by the gcd of the entries and make the leading entry positive.
    void make_primitive(SparseRow& row) {
      mpz_class g = 0;
      for (auto const& [col, value] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
        if (g == 1) {
          break;
        }
      }
      if (row.front().second < 0) {
        g = -g;
      }
      if (g != 1) {
        for (auto& [col, value] : row) {
          mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), g.get_mpz_t());
        }
      }
    }

    // a * row - b * pivot, dropping zeros. Both rows share their leading
    // column, chosen so that it cancels.
    SparseRow combine(SparseRow const& row,
                      mpz_class const& a,
                      SparseRow const& pivot,
                      mpz_class const& b) {
      SparseRow   out;
      std::size_t i = 0, j = 0;
      out.reserve(row.size() + pivot.size());
      while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size()
            || (i < row.size() && row[i].first < pivot[j].first)) {
          out.emplace_back(row[i].first, a * row[i].second);
          ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
          out.emplace_back(pivot[j].first, -b * pivot[j].second);
          ++j;
        } else {
          mpz_class value = a * row[i].second - b * pivot[j].second;
          if (value != 0) {
            out.emplace_back(row[i].first, std::move(value));
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

    // Row i of m times the lcm of its denominators.
    std::vector<mpz_class> integer_row(RationalMatrix const& m, std::size_t i) {
      mpz_class scale = 1;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        mpz_lcm(scale.get_mpz_t(),
                scale.get_mpz_t(),
                m(i, j).get_den_mpz_t());
      }
      std::vector<mpz_class> out(m.cols());
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out[j] = m(i, j).get_num() * (scale / m(i, j).get_den());
      }
      return out;
    }

  }  // namespace

  RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _entries(rows * cols) {}

  RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  RationalMatrix
  RationalMatrix::from_rows(std::vector<std::vector<long>> const& rows) {
    std::size_t const cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix    m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw std::invalid_argument("rows of unequal length");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  Rational const& RationalMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= _rows || j >= _cols) {
      throw std::out_of_range("matrix index out of range");
    }
    return (*this)(i, j);
  }

  std::size_t RationalMatrix::nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(_entries.begin(), _entries.end(), [](auto const& q) {
          return q != 0;
        }));
  }

  std::size_t RationalMatrix::rank() const {
    // Rows bucketed by leading column.
    std::map<std::size_t, std::vector<SparseRow>> buckets;
    for (std::size_t i = 0; i < _rows; ++i) {
      auto      dense = integer_row(*this, i);
      SparseRow row;
      for (std::size_t j = 0; j < _cols; ++j) {
        if (dense[j] != 0) {
          row.emplace_back(j, std::move(dense[j]));
        }
      }
      if (!row.empty()) {
        make_primitive(row);
        buckets[row.front().first].push_back(std::move(row));
      }
    }
    std::size_t result = 0;
    while (!buckets.empty()) {
      auto rows = std::move(buckets.begin()->second);
      buckets.erase(buckets.begin());
      auto shortest = std::min_element(
          rows.begin(), rows.end(), [](auto const& x, auto const& y) {
            return x.size() < y.size();
          });
      std::iter_swap(rows.begin(), shortest);
      SparseRow const& pivot = rows.front();
      ++result;
      for (auto it = rows.begin() + 1; it != rows.end(); ++it) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(),
                pivot.front().second.get_mpz_t(),
                it->front().second.get_mpz_t());
        mpz_class a   = pivot.front().second / g;
        mpz_class b   = it->front().second / g;
        SparseRow row = combine(*it, a, pivot, b);
        if (!row.empty()) {
          make_primitive(row);
          buckets[row.front().first].push_back(std::move(row));
        }
      }
    }
    return result;
  }

  std::size_t RationalMatrix::rank_bareiss() const {
    std::vector<std::vector<mpz_class>> a;
    a.reserve(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      a.push_back(integer_row(*this, i));
    }
    mpz_class   previous = 1;
    std::size_t r        = 0;
    for (std::size_t c = 0; c < _cols && r < _rows; ++c) {
      std::size_t p = r;
      while (p < _rows && a[p][c] == 0) {
        ++p;
      }
      if (p == _rows) {
        continue;
      }
      std::swap(a[p], a[r]);
      for (std::size_t i = r + 1; i < _rows; ++i) {
        for (std::size_t j = c + 1; j < _cols; ++j) {
          a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / previous;
        }
        a[i][c] = 0;
      }
      previous = a[r][c];
      ++r;
    }
    return r;
  }

  RationalMatrix RationalMatrix::rref() const {
    RationalMatrix m = *this;
    std::size_t    r = 0;
    for (std::size_t c = 0; c < _cols && r < _rows; ++c) {
      std::size_t p = r;
      while (p < _rows && m(p, c) == 0) {
        ++p;
      }
      if (p == _rows) {
        continue;
      }
      for (std::size_t j = 0; j < _cols; ++j) {
        std::swap(m(p, j), m(r, j));
      }
      Rational const inv = 1 / m(r, c);
      for (std::size_t j = c; j < _cols; ++j) {
        m(r, j) *= inv;
      }
      for (std::size_t i = 0; i < _rows; ++i) {
        if (i == r || m(i, c) == 0) {
          continue;
        }
        Rational const factor = m(i, c);
        for (std::size_t j = c; j < _cols; ++j) {
          m(i, j) -= factor * m(r, j);
        }
      }
      ++r;
    }
    return m;
  }

  std::vector<std::vector<Rational>> RationalMatrix::kernel_basis() const {
    RationalMatrix           m = rref();
    std::vector<std::size_t> pivot_cols;
    std::vector<bool>        is_pivot(_cols, false);
    for (std::size_t i = 0, c = 0; i < _rows; ++i) {
      while (c < _cols && m(i, c) == 0) {
        ++c;
      }
      if (c == _cols) {
        break;
      }
      pivot_cols.push_back(c);
      is_pivot[c] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < _cols; ++free) {
      if (is_pivot[free]) {
        continue;
      }
      std::vector<Rational> x(_cols);
      x[free] = 1;
      for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        x[pivot_cols[i]] = -m(i, free);
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

  bool RationalMatrix::in_column_space(std::span<Rational const> v) const {
    if (v.size() != _rows) {
      throw std::invalid_argument("vector length does not match row count");
    }
    RationalMatrix column(_rows, 1);
    for (std::size_t i = 0; i < _rows; ++i) {
      column(i, 0) = v[i];
    }
    return hcat(column).rank() == rank();
  }

  std::vector<Rational>
  RationalMatrix::apply(std::span<Rational const> x) const {
    if (x.size() != _cols) {
      throw std::invalid_argument("vector length does not match column count");
    }
    std::vector<Rational> y(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if ((*this)(i, j) != 0) {
          y[i] += (*this)(i, j) * x[j];
        }
      }
    }
    return y;
  }

  RationalMatrix RationalMatrix::hcat(RationalMatrix const& other) const {
    if (other._rows != _rows) {
      throw std::invalid_argument("hcat needs equal row counts");
    }
    RationalMatrix m(_rows, _cols + other._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        m(i, j) = (*this)(i, j);
      }
      for (std::size_t j = 0; j < other._cols; ++j) {
        m(i, _cols + j) = other(i, j);
      }
    }
    return m;
  }

  RationalMatrix
  RationalMatrix::permuted(std::span<std::size_t const> row_order,
                           std::span<std::size_t const> col_order) const {
    if (row_order.size() != _rows || col_order.size() != _cols) {
      throw std::invalid_argument("permutation size mismatch");
    }
    RationalMatrix m(_rows, _cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        m(i, j) = at(row_order[i], col_order[j]);
      }
    }
    return m;
  }

  RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix m(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        m(j, i) = (*this)(i, j);
      }
    }
    return m;
  }

  RationalMatrix operator*(RationalMatrix const& a, RationalMatrix const& b) {
    if (a._cols != b._rows) {
      throw std::invalid_argument("matrix product dimension mismatch");
    }
    // Rows of b as lists of nonzero positions; both factors are sparse in
    // every use here.
    std::vector<std::vector<std::size_t>> b_nonzero(b._rows);
    for (std::size_t k = 0; k < b._rows; ++k) {
      for (std::size_t j = 0; j < b._cols; ++j) {
        if (b(k, j) != 0) {
          b_nonzero[k].push_back(j);
        }
      }
    }
    RationalMatrix c(a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j : b_nonzero[k]) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  bool operator==(RationalMatrix const& a, RationalMatrix const& b) {
    return a._rows == b._rows && a._cols == b._cols && a._entries == b._entries;
  }

  std::string RationalMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < _rows; ++i) {
      out << "[";
      for (std::size_t j = 0; j < _cols; ++j) {
        out << (j == 0 ? "" : " ") << (*this)(i, j);
      }
      out << "]\n";
    }
    return out.str();
  }

}  // namespace rauzylab
