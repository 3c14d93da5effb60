#ifndef REFLEKTA_MATRIX_HPP
#define REFLEKTA_MATRIX_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "reflekta/errors.hpp"
#include "reflekta/rational.hpp"

namespace reflekta {

// Dense matrix over exact rationals.  Row-major.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(int n);
  static QMatrix diagonal(std::span<const Rational> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator+(const QMatrix& other) const;
  QMatrix operator*(const Rational& c) const;
  QMatrix transpose() const;

  bool operator==(const QMatrix& other) const = default;
  bool is_symmetric() const;

  // Exact Gaussian elimination.
  Rational determinant() const;
  int rank() const;
  QMatrix inverse() const;  // throws SingularMatrix

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

// Entrywise lexicographic order, for use as a set key.
bool matrix_less(const QMatrix& a, const QMatrix& b);

struct QMatrixLess {
  bool operator()(const QMatrix& a, const QMatrix& b) const { return matrix_less(a, b); }
};

}  // namespace reflekta

#endif
