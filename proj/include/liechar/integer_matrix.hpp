#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "liechar/rational.hpp"

namespace liechar {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Integer& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntegerMatrix transpose() const;
  Integer determinant() const;
  // Exact inverse of a unimodular matrix; throws otherwise.
  IntegerMatrix unimodular_inverse() const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;
  std::string to_string() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  std::vector<Integer> diagonal;  // length min(rows, cols)
  IntegerMatrix left;             // U
  IntegerMatrix right;            // V, with U * M * V = D
  IntegerMatrix D;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

}  // namespace liechar
