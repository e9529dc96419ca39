// Exact rational matrices.

#ifndef RAUZYLAB_RATIONAL_MATRIX_HPP_
#define RAUZYLAB_RATIONAL_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rauzylab {

  using Rational = mpq_class;

  //! A dense matrix of arbitrary-precision rationals. Every operation is
  //! exact; there are no tolerances anywhere.
  class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);

    //! Build from rows of integers; all rows must have equal length.
    static RationalMatrix
    from_rows(std::vector<std::vector<long>> const& rows);

    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }

    [[nodiscard]] Rational& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _cols + j];
    }
    [[nodiscard]] Rational const& operator()(std::size_t i,
                                             std::size_t j) const {
      return _entries[i * _cols + j];
    }

    //! Bounds-checked access; throws std::out_of_range.
    [[nodiscard]] Rational const& at(std::size_t i, std::size_t j) const;

    [[nodiscard]] std::size_t nonzero_count() const;

    //! Rank over Q.
    //!
    //! Rows are scaled to primitive integer vectors and reduced by
    //! fraction-free elimination, one leading column at a time, keeping only
    //! nonzero entries and dividing every updated row by its content. This
    //! is the workhorse for large sparse matrices.
    [[nodiscard]] std::size_t rank() const;

    //! Rank over Q by dense Bareiss elimination on the integer matrix
    //! obtained by clearing denominators row by row. Independent of rank();
    //! cubic with big integers, so meant for small matrices.
    [[nodiscard]] std::size_t rank_bareiss() const;

    //! Reduced row echelon form over Q (dense).
    [[nodiscard]] RationalMatrix rref() const;

    //! A basis of {x : Ax = 0}, one vector per free column of the RREF.
    [[nodiscard]] std::vector<std::vector<Rational>> kernel_basis() const;

    //! true iff v is a linear combination of the columns.
    [[nodiscard]] bool in_column_space(std::span<Rational const> v) const;

    [[nodiscard]] std::vector<Rational>
    apply(std::span<Rational const> x) const;

    //! [this | other]; throws std::invalid_argument on a row mismatch.
    [[nodiscard]] RationalMatrix hcat(RationalMatrix const& other) const;

    //! Rows and columns reordered: result(i, j) = (*this)(rows[i], cols[j]).
    [[nodiscard]] RationalMatrix
    permuted(std::span<std::size_t const> row_order,
             std::span<std::size_t const> col_order) const;

    [[nodiscard]] RationalMatrix transpose() const;

    friend RationalMatrix operator*(RationalMatrix const& a,
                                    RationalMatrix const& b);
    friend bool           operator==(RationalMatrix const& a,
                           RationalMatrix const& b);

    [[nodiscard]] std::string to_string() const;

   private:
    std::size_t           _rows = 0;
    std::size_t           _cols = 0;
    std::vector<Rational> _entries;
  };

}  // namespace rauzylab

#endif  // RAUZYLAB_RATIONAL_MATRIX_HPP_
