#include "hv/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "hv/errors.hpp"

namespace hv {

int rref(RatMatrix& m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    Rational inv = m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rank(RatMatrix m) { return rref(m); }

int rank_int(const std::vector<IntVector>& rows) {
  RatMatrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    RatVector r(row.size());
    for (size_t j = 0; j < row.size(); ++j) r[j] = Rational(row[j]);
    m.push_back(std::move(r));
  }
  return rank(std::move(m));
}

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  IntVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = numerator(v[i]) * (l / denominator(v[i]));
  Integer g = 0;
  for (const auto& z : out) g = boost::multiprecision::gcd(g, z);
  if (g == 0) return out;  // zero vector
  for (auto& z : out) z /= g;
  for (const auto& z : out) {
    if (z == 0) continue;
    if (z < 0)
      for (auto& w : out) w = -w;
    break;
  }
  return out;
}

std::vector<IntVector> kernel_basis(const RatMatrix& rows, int cols) {
  RatMatrix m = rows;
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols) throw internal_error("kernel_basis: ragged input");
  int rk = rref(m);

  // Identify pivot columns of the echelon form.
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  {
    int r = 0;
    for (int c = 0; c < cols && r < rk; ++c) {
      if (m[r][c] == 1) {
        bool unit = true;
        for (int i = 0; i < static_cast<int>(m.size()); ++i)
          if (i != r && m[i][c] != 0) unit = false;
        if (unit) {
          pivot_col.push_back(c);
          is_pivot[c] = true;
          ++r;
          continue;
        }
      }
    }
  }

  std::vector<IntVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols, Rational(0));
    v[f] = 1;
    for (int r = 0; r < rk; ++r) v[pivot_col[r]] = -m[r][f];
    basis.push_back(clear_denominators(v));
  }
  return basis;
}

std::optional<RatVector> solve_square(const std::vector<IntVector>& rows, const RatVector& rhs) {
  const size_t n = rows.size();
  if (rhs.size() != n) throw internal_error("solve_square: size mismatch");
  RatMatrix m(n, RatVector(n + 1));
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw internal_error("solve_square: not square");
    for (size_t j = 0; j < n; ++j) m[i][j] = Rational(rows[i][j]);
    m[i][n] = rhs[i];
  }
  rref(m);
  RatVector x(n, Rational(0));
  size_t pivots = 0;
  for (size_t i = 0; i < n; ++i) {
    size_t lead = n + 1;
    for (size_t j = 0; j <= n; ++j)
      if (m[i][j] != 0) {
        lead = j;
        break;
      }
    if (lead == n) return std::nullopt;  // 0 = nonzero
    if (lead == n + 1) continue;         // zero row
    x[lead] = m[i][n];
    ++pivots;
  }
  if (pivots < n) return std::nullopt;  // singular
  return x;
}

IntVector make_primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& z : v) g = boost::multiprecision::gcd(g, z);
  if (g == 0) throw internal_error("make_primitive: zero vector");
  IntVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

Integer det_integer(std::vector<IntVector> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw internal_error("det_integer: not square");
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_unimodular(const std::vector<IntVector>& rows) {
  Integer d = det_integer(rows);
  return d == 1 || d == -1;
}

bool in_span(const std::vector<IntVector>& span, const IntVector& target) {
  std::vector<IntVector> with = span;
  with.push_back(target);
  return rank_int(span) == rank_int(with);
}

}  // namespace hv
