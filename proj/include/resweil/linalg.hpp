#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "resweil/field.hpp"
#include "resweil/unipoly.hpp"

namespace resweil {

using Vec = std::vector<FieldElement>;

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const Field& f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);

  Vec apply(const Vec& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}.
std::vector<Vec> kernel(const Matrix& m);
/// Some x with m x = b, if any.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

bool is_zero_vec(const Field& f, const Vec& v);

/// Minimal polynomial of `apply` on the cyclic subspace generated by
/// `start`: the first monic relation among start, L start, L^2 start, ...
UniPoly krylov_minimal_polynomial(const Field& f, const Vec& start, const std::function<Vec(const Vec&)>& apply);

}  // namespace resweil
