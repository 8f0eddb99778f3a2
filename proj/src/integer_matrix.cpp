#include "liechar/integer_matrix.hpp"

#include <sstream>
#include <utility>

#include "liechar/errors.hpp"

namespace liechar {

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw InvalidArgument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw InvalidArgument("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  std::vector<Integer> a = data_;
  auto at = [&](int i, int j) -> Integer& { return a[static_cast<std::size_t>(i) * n + j]; };
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = v;
      }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

IntegerMatrix IntegerMatrix::unimodular_inverse() const {
  if (rows_ != cols_) throw InvalidArgument("inverse of non-square matrix");
  int n = rows_;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = (*this)(i, j);
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int r = c;
    while (r < n && sgn(a[r][c]) == 0) ++r;
    if (r == n) throw InvalidArgument("singular matrix");
    std::swap(a[r], a[c]);
    Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntegerMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a[i][n + j].get_den() != 1) throw InvalidArgument("matrix is not unimodular");
      inv(i, j) = a[i][n + j].get_num();
    }
  return inv;
}

std::vector<Integer> IntegerMatrix::apply(const std::vector<Integer>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InvalidArgument("dimension mismatch");
  std::vector<Integer> r(rows_, Integer(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("dimension mismatch in matrix product");
  IntegerMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("dimension mismatch");
  IntegerMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("dimension mismatch");
  IntegerMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

namespace {

struct Reducer {
  IntegerMatrix a, u, v;
  int m, n;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (int c = 0; c < m; ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
    for (int r = 0; r < n; ++r) std::swap(v(r, i), v(r, j));
  }
  // row_i += f * row_j
  void add_row(int i, int j, const Integer& f) {
    for (int c = 0; c < n; ++c) a(i, c) += f * a(j, c);
    for (int c = 0; c < m; ++c) u(i, c) += f * u(j, c);
  }
  void add_col(int i, int j, const Integer& f) {
    for (int r = 0; r < m; ++r) a(r, i) += f * a(r, j);
    for (int r = 0; r < n; ++r) v(r, i) += f * v(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < n; ++c) a(i, c) = -a(i, c);
    for (int c = 0; c < m; ++c) u(i, c) = -u(i, c);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& mat) {
  Reducer r{mat, IntegerMatrix::identity(mat.rows()), IntegerMatrix::identity(mat.cols()), mat.rows(), mat.cols()};
  int m = r.m, n = r.n;
  int k = std::min(m, n);
  for (int t = 0; t < k; ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (r.a(i, j) != 0 && (pi < 0 || abs(r.a(i, j)) < abs(r.a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      r.swap_rows(t, pi);
      r.swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (r.a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), r.a(i, t).get_mpz_t(), r.a(t, t).get_mpz_t());
        r.add_row(i, t, -q);
        if (r.a(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (r.a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), r.a(t, j).get_mpz_t(), r.a(t, t).get_mpz_t());
        r.add_col(j, t, -q);
        if (r.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (r.a(i, j) % r.a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      r.add_row(t, bad, Integer(1));
    }
    if (r.a(t, t) < 0) r.negate_row(t);
  }
  SmithForm out;
  out.diagonal.resize(k);
  for (int t = 0; t < k; ++t) out.diagonal[t] = r.a(t, t);
  out.left = std::move(r.u);
  out.right = std::move(r.v);
  out.D = std::move(r.a);
  return out;
}

}  // namespace liechar
