#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace modunits {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// An element of Q/Z, stored as its representative in [0, 1).
///
/// Used for exponents of roots of unity: the value x stands for e^{2 pi i x}.
class QmodZ {
 public:
  QmodZ() = default;
  explicit QmodZ(const Rational& value);
  QmodZ(long num, long den);

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  // Order of the element in Q/Z (the reduced denominator).
  Integer order() const { return value_.get_den(); }

  QmodZ operator+(const QmodZ& other) const;
  QmodZ operator-(const QmodZ& other) const;
  QmodZ operator-() const;
  QmodZ operator*(const Integer& k) const;
  QmodZ& operator+=(const QmodZ& other);
  bool operator==(const QmodZ& other) const { return value_ == other.value_; }

  std::string to_string() const;

 private:
  Rational value_ = 0;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  std::vector<std::vector<Integer>> to_rows() const;
  IntMatrix transpose() const;

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& other) const = default;

  // Fraction-free (Bareiss) determinant; the matrix must be square.
  Integer determinant() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += k * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& k);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& k);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// P * A * Q = D with P, Q unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithDecomposition {
  IntMatrix P;
  IntMatrix D;
  IntMatrix Q;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

/// Finite abelian group Z/d_1 x ... x Z/d_k in invariant-factor form:
/// 1 < d_1 | d_2 | ... | d_k. The empty list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Accepts any list of cyclic orders (>= 1, in any order) and normalizes it.
  static AbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);
  static AbelianGroup cyclic(const Integer& order) { return from_cyclic_orders({order}); }
  static AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }
  bool operator==(const AbelianGroup& other) const = default;

  // "Z/2 x Z/10", or "0" for the trivial group.
  std::string to_string() const;

 private:
  std::vector<Integer> factors_;
};

/// Rows of the result form a basis of the lattice spanned by the rows of
/// `generators` (row-style Hermite normal form, zero rows dropped).
IntMatrix hermite_row_basis(const IntMatrix& generators);

/// Basis (as rows) of { x in Z^rows : x * A = 0 }.
IntMatrix integer_left_kernel(const IntMatrix& A);

/// Integer coefficients c with c * basis = v, or nullopt if v is not in the
/// integer span. The rows of `basis` must be linearly independent.
std::optional<std::vector<Integer>> express_in_basis(const IntMatrix& basis,
                                                     std::span<const Integer> v);

/// Structure of span(ambient) / span(sub). Both are given as row lists.
/// Throws std::invalid_argument if the ambient rows are dependent, a sub row is
/// outside the ambient lattice, or the ranks differ.
AbelianGroup quotient_structure(const IntMatrix& ambient_basis, const IntMatrix& sub_basis);

/// |det M / sum(c)| where M stacks v_1..v_n and v_extra = (c_1..c_{n+1}).
/// Equals the index (L_0 : span(v_1..v_n)) in the sum-zero lattice L_0 of Z^{n+1}.
Integer bordered_lattice_index(const IntMatrix& vectors, std::span<const Integer> v_extra);

/// Dense rational matrix, only what the snake-lemma bookkeeping needs.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  // Inverse of a square nonsingular matrix; throws std::invalid_argument if singular.
  RationalMatrix inverse() const;
  // Least common multiple of all entry denominators.
  Integer common_denominator() const;
  // Entries times `scale`, which must clear all denominators.
  IntMatrix scaled_to_integer(const Integer& scale) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace modunits
