#include "modunits/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modunits {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// ---------------------------------------------------------------- QmodZ

namespace {

Rational reduce_mod_one(Rational r) {
  r.canonicalize();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational out = r - Rational(fl);
  out.canonicalize();
  return out;
}

}  // namespace

QmodZ::QmodZ(const Rational& value) : value_(reduce_mod_one(value)) {}

QmodZ::QmodZ(long num, long den) : value_(reduce_mod_one(make_rational(num, den))) {}

QmodZ QmodZ::operator+(const QmodZ& other) const { return QmodZ(value_ + other.value_); }
QmodZ QmodZ::operator-(const QmodZ& other) const { return QmodZ(value_ - other.value_); }
QmodZ QmodZ::operator-() const { return QmodZ(-value_); }
QmodZ QmodZ::operator*(const Integer& k) const { return QmodZ(value_ * Rational(k)); }

QmodZ& QmodZ::operator+=(const QmodZ& other) {
  value_ = reduce_mod_one(value_ + other.value_);
  return *this;
}

std::string QmodZ::to_string() const { return modunits::to_string(value_); }

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += k * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += k * (*this)(i, source);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

// ---------------------------------------------------------------- Smith normal form

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  IntMatrix D = A;
  IntMatrix P = IntMatrix::identity(m);
  IntMatrix Q = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Pivot: nonzero entry of least absolute value in the trailing block.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (D(i, j) == 0) continue;
          if (pi == m || abs(D(i, j)) < abs(D(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) return {P, D, Q};

      D.swap_rows(t, pi);
      P.swap_rows(t, pi);
      D.swap_cols(t, pj);
      Q.swap_cols(t, pj);

      bool cleared = true;
      const Integer pivot = D(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / pivot;  // truncating, leaves |remainder| < |pivot|
        D.add_row_multiple(i, t, -q);
        P.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / pivot;
        D.add_col_multiple(j, t, -q);
        Q.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Divisibility chain: fold an offending row into the pivot row and retry.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % pivot != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      D.add_row_multiple(t, bad_row, 1);
      P.add_row_multiple(t, bad_row, 1);
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < m; ++j) P(t, j) = -P(t, j);
    }
  }
  return {P, D, Q};
}

// ---------------------------------------------------------------- AbelianGroup

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) throw std::invalid_argument("cyclic factor orders must be >= 1");
    diag(i, i) = orders[i];
  }
  AbelianGroup g;
  for (const auto& d : smith_normal_form(diag).diagonal())
    if (d > 1) g.factors_.push_back(d);
  return g;
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> all = a.factors_;
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return from_cyclic_orders(all);
}

Integer AbelianGroup::order() const {
  Integer o = 1;
  for (const auto& f : factors_) o *= f;
  return o;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? " x Z/" : "Z/") + factors_[i].get_str();
  return s;
}

// ---------------------------------------------------------------- lattices

IntMatrix hermite_row_basis(const IntMatrix& generators) {
  IntMatrix H = generators;
  const std::size_t m = H.rows();
  const std::size_t n = H.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (H(i, col) == 0) continue;
      Integer g, u, v;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), H(r, col).get_mpz_t(), H(i, col).get_mpz_t());
      const Integer a = H(r, col) / g;
      const Integer b = H(i, col) / g;
      // [u v; -b a] has determinant 1.
      for (std::size_t j = 0; j < n; ++j) {
        Integer top = u * H(r, j) + v * H(i, j);
        Integer bottom = -b * H(r, j) + a * H(i, j);
        H(r, j) = top;
        H(i, j) = bottom;
      }
    }
    if (H(r, col) == 0) continue;
    if (H(r, col) < 0)
      for (std::size_t j = 0; j < n; ++j) H(r, j) = -H(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, col).get_mpz_t(), H(r, col).get_mpz_t());
      H.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = H(i, j);
  return out;
}

IntMatrix integer_left_kernel(const IntMatrix& A) {
  const auto snf = smith_normal_form(A);
  const std::size_t r = snf.rank();
  IntMatrix K(A.rows() - r, A.rows());
  for (std::size_t i = r; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.rows(); ++j) K(i - r, j) = snf.P(i, j);
  return K;
}

namespace {

// Solves x * basis = v given the Smith form of `basis` (full row rank).
std::optional<std::vector<Integer>> solve_with_smith(const SmithDecomposition& snf,
                                                     std::span<const Integer> v) {
  const std::size_t k = snf.D.rows();
  const std::size_t n = snf.D.cols();
  // x A = v  <=>  (x P^{-1}) D = v Q
  std::vector<Integer> t(n, Integer(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) t[j] += v[l] * snf.Q(l, j);
  std::vector<Integer> y(k);
  for (std::size_t j = 0; j < n; ++j) {
    if (j < k) {
      if (t[j] % snf.D(j, j) != 0) return std::nullopt;
      y[j] = t[j] / snf.D(j, j);
    } else if (t[j] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> x(k, Integer(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) x[j] += y[i] * snf.P(i, j);
  return x;
}

SmithDecomposition full_row_rank_smith(const IntMatrix& basis) {
  auto snf = smith_normal_form(basis);
  if (snf.rank() != basis.rows())
    throw std::invalid_argument("basis rows are linearly dependent");
  return snf;
}

}  // namespace

std::optional<std::vector<Integer>> express_in_basis(const IntMatrix& basis,
                                                     std::span<const Integer> v) {
  if (v.size() != basis.cols()) throw std::invalid_argument("express_in_basis: dimension mismatch");
  return solve_with_smith(full_row_rank_smith(basis), v);
}

AbelianGroup quotient_structure(const IntMatrix& ambient_basis, const IntMatrix& sub_basis) {
  if (ambient_basis.cols() != sub_basis.cols())
    throw std::invalid_argument("quotient_structure: ambient and sub vectors differ in length");
  const auto snf = full_row_rank_smith(ambient_basis);
  const std::size_t k = ambient_basis.rows();
  IntMatrix coords(sub_basis.rows(), k);
  for (std::size_t i = 0; i < sub_basis.rows(); ++i) {
    const auto row = sub_basis.row(i);
    auto x = solve_with_smith(snf, row);
    if (!x) throw std::invalid_argument("quotient_structure: sub vector " + std::to_string(i) +
                                        " is not in the ambient lattice");
    for (std::size_t j = 0; j < k; ++j) coords(i, j) = (*x)[j];
  }
  const auto q = smith_normal_form(coords);
  if (q.rank() != k)
    throw std::invalid_argument("quotient_structure: sublattice has smaller rank (infinite quotient)");
  return AbelianGroup::from_cyclic_orders(q.diagonal());
}

Integer bordered_lattice_index(const IntMatrix& vectors, std::span<const Integer> v_extra) {
  const std::size_t n = vectors.rows();
  if (vectors.cols() != n + 1 || v_extra.size() != n + 1)
    throw std::invalid_argument("bordered_lattice_index: expected n vectors in Z^{n+1}");
  for (std::size_t i = 0; i < n; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j <= n; ++j) s += vectors(i, j);
    if (s != 0) throw std::invalid_argument("bordered_lattice_index: vector outside the sum-zero lattice");
  }
  Integer sum = 0;
  for (const auto& c : v_extra) sum += c;
  if (sum == 0) throw std::invalid_argument("bordered_lattice_index: v_extra has coordinate sum 0");
  IntMatrix M(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= n; ++j) M(i, j) = vectors(i, j);
  for (std::size_t j = 0; j <= n; ++j) M(n, j) = v_extra[j];
  const Integer det = M.determinant();
  if (det % sum != 0) throw std::logic_error("bordered_lattice_index: determinant not divisible by the coordinate sum");
  return abs(det / sum);
}

// ---------------------------------------------------------------- RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rational(m(i, j));
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("RationalMatrix: dimension mismatch in product");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
  return out;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw std::invalid_argument("inverse of a singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
    const Rational scale = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= scale;
      inv(c, j) /= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Integer RationalMatrix::common_denominator() const {
  Integer l = 1;
  for (const auto& x : data_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

IntMatrix RationalMatrix::scaled_to_integer(const Integer& scale) const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Rational v = (*this)(i, j) * Rational(scale);
      v.canonicalize();
      if (v.get_den() != 1) throw std::invalid_argument("scaled_to_integer: scale does not clear denominators");
      out(i, j) = v.get_num();
    }
  return out;
}

}  // namespace modunits
