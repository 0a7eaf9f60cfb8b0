#include "resweil/linalg.hpp"

#include "resweil/error.hpp"

namespace resweil {

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Vec Matrix::apply(const Vec& v) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    FieldElement acc{};
    for (std::size_t c = 0; c < cols_; ++c) {
      if (field_.is_zero(v[c])) continue;
      acc = field_.add(acc, field_.mul(at(r, c), v[c]));
    }
    out[r] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  const Field& f = a.field_;
  Matrix out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& x = a.at(i, k);
      if (f.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
    }
  return out;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    const FieldElement inv = f.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = f.mul(m.at(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m.at(r, col))) continue;
      const FieldElement factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::vector<Vec> kernel(const Matrix& input) {
  Matrix m = input;
  const Field& f = m.field();
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  const Field& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

bool is_zero_vec(const Field& f, const Vec& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

UniPoly krylov_minimal_polynomial(const Field& f, const Vec& start, const std::function<Vec(const Vec&)>& apply) {
  struct Row {
    Vec vec;
    Vec combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  Vec current = start;
  for (std::size_t k = 0; k <= start.size(); ++k) {
    Vec w = current;
    Vec combo(k + 1);
    combo[k] = f.one();
    for (const auto& row : rows) {
      const FieldElement c = w[row.pivot];
      if (f.is_zero(c)) continue;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = f.sub(w[i], f.mul(c, row.vec[i]));
      for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] = f.sub(combo[i], f.mul(c, row.combo[i]));
    }
    std::size_t pivot = 0;
    while (pivot < w.size() && f.is_zero(w[pivot])) ++pivot;
    if (pivot == w.size()) return UniPoly(f, combo);
    const FieldElement inv = f.inv(w[pivot]);
    for (auto& x : w) x = f.mul(x, inv);
    for (auto& x : combo) x = f.mul(x, inv);
    // Keep earlier rows reduced at the new pivot.
    for (auto& row : rows) {
      const FieldElement c = row.vec[pivot];
      if (f.is_zero(c)) continue;
      for (std::size_t i = 0; i < w.size(); ++i) row.vec[i] = f.sub(row.vec[i], f.mul(c, w[i]));
      row.combo.resize(combo.size());
      for (std::size_t i = 0; i < combo.size(); ++i) row.combo[i] = f.sub(row.combo[i], f.mul(c, combo[i]));
    }
    rows.push_back({std::move(w), std::move(combo), pivot});
    current = apply(current);
  }
  throw Error(ErrorKind::Internal, "Krylov sequence did not become dependent");
}

}  // namespace resweil
