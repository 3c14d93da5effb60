#include "reflekta/matrix.hpp"

#include <sstream>
#include <utility>

namespace reflekta {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
  for (const auto& row : rows) {
    if (cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_) throw Error("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Rational> entries) {
  QMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix product shape mismatch");
  QMatrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r.at(i, j) += a * other.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix sum shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += other.data_[i];
  return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
  QMatrix r = *this;
  for (auto& v : r.data_) v *= c;
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Rational QMatrix::determinant() const {
  if (!is_square()) throw Error("determinant of a non-square matrix");
  QMatrix work = *this;
  Rational det = 1;
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r)
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(col, j));
      det = -det;
    }
    det *= work.at(col, col);
    for (int r = col + 1; r < rows_; ++r) {
      if (work.at(r, col) == 0) continue;
      Rational f = work.at(r, col) / work.at(col, col);
      for (int j = col; j < cols_; ++j) work.at(r, j) -= f * work.at(col, j);
    }
  }
  return det;
}

int QMatrix::rank() const {
  QMatrix work = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(rank, j));
    for (int r = rank + 1; r < rows_; ++r) {
      if (work.at(r, col) == 0) continue;
      Rational f = work.at(r, col) / work.at(rank, col);
      for (int j = col; j < cols_; ++j) work.at(r, j) -= f * work.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

QMatrix QMatrix::inverse() const {
  if (!is_square()) throw Error("inverse of a non-square matrix");
  int n = rows_;
  QMatrix work = *this;
  QMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularMatrix("matrix is singular");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rational p = work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      Rational f = work.at(r, col);
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::string QMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < rows_; ++i) {
    if (i) out << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << reflekta::to_string(at(i, j));
    }
  }
  out << ']';
  return out.str();
}

bool matrix_less(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      int c = cmp(a.at(i, j), b.at(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

}  // namespace reflekta
