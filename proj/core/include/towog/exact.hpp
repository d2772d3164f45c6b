#ifndef TOWOG_EXACT_HPP
#define TOWOG_EXACT_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

#include "towog/error.hpp"

namespace towog {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

/// Matrix-vector product over the integers. Vector length must equal cols().
std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);

/// Exact determinant by fraction-free (Bareiss) elimination with sign-tracked
/// row swaps. Throws errc::not_square.
Int determinant(const IntMatrix& m);

/// Exact rank over the rationals (fraction-free elimination, first-nonzero
/// pivoting in column order).
std::size_t rank(const IntMatrix& m);

/// Basis of the right null space over Q, parameterized from the reduced row
/// echelon form: one vector per free column, entry 1 at that column. Empty
/// iff the matrix has full column rank.
std::vector<std::vector<Rat>> null_space_basis(const IntMatrix& m);

/// Scales a nonzero rational vector to the unique primitive integer vector on
/// its line whose first nonzero entry is positive. Throws errc::zero_vector.
std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v);

/// All nonzero integer vectors u with m*u = 0 and |u|_inf <= bound, found by
/// enumerating the free coordinates of the RREF kernel parameterization and
/// solving for the pivot coordinates. bound must be >= 1.
std::vector<std::vector<Int>> bounded_integer_kernel(const IntMatrix& m, long bound);

}  // namespace towog

#endif
