#include "mdm/linalg.hpp"

#include <string>

#include "mdm/errors.hpp"

namespace mdm {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // mpz division truncates toward zero
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// row_i -= q * row_j
void subtract_row(IntMatrix& m, std::size_t i, std::size_t j, const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(j, c);
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<ZVec>& rs, std::size_t ncols) {
  IntMatrix m(rs.size(), ncols);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].size() != ncols)
      throw DimensionMismatch("from_rows: row " + std::to_string(i) + " has length " +
                              std::to_string(rs[i].size()) + ", expected " + std::to_string(ncols));
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rs[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<ZVec>& cs, std::size_t nrows) {
  IntMatrix m(nrows, cs.size());
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j].size() != nrows)
      throw DimensionMismatch("from_cols: column " + std::to_string(j) + " has length " +
                              std::to_string(cs[j].size()) + ", expected " + std::to_string(nrows));
    for (std::size_t i = 0; i < nrows; ++i) m.at(i, j) = cs[j][i];
  }
  return m;
}

ZVec IntMatrix::row(std::size_t i) const {
  ZVec v(cols);
  for (std::size_t j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

ZVec IntMatrix::col(std::size_t j) const {
  ZVec v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

std::vector<ZVec> IntMatrix::row_list() const {
  std::vector<ZVec> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw DimensionMismatch("mul: inner dimensions disagree");
  IntMatrix m(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return m;
}

ZVec mul(const IntMatrix& a, const ZVec& x) {
  if (a.cols != x.size()) throw DimensionMismatch("mul: matrix-vector sizes disagree");
  ZVec y(a.rows, Int(0));
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

QVec mul(const IntMatrix& a, const QVec& x) {
  if (a.cols != x.size()) throw DimensionMismatch("mul: matrix-vector sizes disagree");
  QVec y(a.rows, Rat(0));
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) y[i] += Rat(a.at(i, j)) * x[j];
  return y;
}

HnfResult hermite_normal_form(const IntMatrix& a) {
  if (a.rows == 0 || a.cols == 0) throw EmptyInput("hermite_normal_form: zero-sized matrix");
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows);
  std::size_t piv = 0;
  for (std::size_t c = 0; c < a.cols && piv < a.rows; ++c) {
    // gcd reduction of column c among rows piv..end
    for (;;) {
      std::size_t best = npos;
      for (std::size_t j = piv; j < h.rows; ++j) {
        if (h.at(j, c) == 0) continue;
        if (best == npos || abs(h.at(j, c)) < abs(h.at(best, c))) best = j;
      }
      if (best == npos) break;
      swap_rows(h, piv, best);
      swap_rows(u, piv, best);
      bool clean = true;
      for (std::size_t j = piv + 1; j < h.rows; ++j) {
        if (h.at(j, c) == 0) continue;
        Int q = h.at(j, c) / h.at(piv, c);
        subtract_row(h, j, piv, q);
        subtract_row(u, j, piv, q);
        if (h.at(j, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(piv, c) == 0) continue;
    if (h.at(piv, c) < 0) {
      negate_row(h, piv);
      negate_row(u, piv);
    }
    for (std::size_t j = 0; j < piv; ++j) {
      Int q = floor_div(h.at(j, c), h.at(piv, c));
      subtract_row(h, j, piv, q);
      subtract_row(u, j, piv, q);
    }
    ++piv;
  }
  return {h, u};
}

bool is_row_hnf(const IntMatrix& h) {
  std::size_t last_pivot = npos;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows; ++i) {
    std::size_t p = npos;
    for (std::size_t j = 0; j < h.cols; ++j)
      if (h.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p == npos) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;                       // nonzero row under a zero row
    if (last_pivot != npos && p <= last_pivot) return false;  // not strictly staircase
    if (h.at(i, p) <= 0) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (h.at(j, p) < 0 || h.at(j, p) >= h.at(i, p)) return false;
    last_pivot = p;
  }
  return true;
}

std::size_t rank(const IntMatrix& a) {
  if (a.rows == 0 || a.cols == 0) return 0;
  IntMatrix h = hermite_normal_form(a).h;
  std::size_t r = 0;
  for (std::size_t i = 0; i < h.rows; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < h.cols; ++j)
      if (h.at(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++r;
  }
  return r;
}

Rat det(const IntMatrix& a) {
  if (a.rows != a.cols) throw DimensionMismatch("det: matrix not square");
  std::size_t n = a.rows;
  if (n == 0) return 1;
  std::vector<QVec> m(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a.at(i, j));
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = npos;
    for (std::size_t i = c; i < n; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p == npos) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

IntMatrix span_kernel(const IntMatrix& a) {
  if (a.cols == 0) return IntMatrix(0, 0);
  if (a.rows == 0) return IntMatrix::identity(a.cols);
  IntMatrix t = a.transposed();  // n x r
  HnfResult hr = hermite_normal_form(t);
  std::size_t k = 0;
  for (std::size_t i = 0; i < hr.h.rows; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < hr.h.cols; ++j)
      if (hr.h.at(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++k;
  }
  std::size_t n = a.cols;
  if (k == n) return IntMatrix(0, n);
  IntMatrix kernel(n - k, n);
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) kernel.at(i - k, j) = hr.u.at(i, j);
  return hermite_normal_form(kernel).h;  // canonical basis of the same lattice
}

IntMatrix span_basis(const IntMatrix& a) { return span_kernel(span_kernel(a)); }

IntMatrix integer_kernel_basis(const IntMatrix& a) {
  if (a.rows == 0 || a.cols == 0) throw EmptyInput("integer_kernel_basis: zero-sized matrix");
  if (rank(a) < a.rows)
    throw RankDeficient("integer_kernel_basis: matrix has row rank below " + std::to_string(a.rows));
  return span_kernel(a);
}

std::optional<QVec> rational_solve(const IntMatrix& a, const QVec& b) {
  if (b.size() != a.rows) throw DimensionMismatch("rational_solve: rhs length disagrees with rows");
  std::size_t n = a.cols;
  std::vector<QVec> m(a.rows, QVec(n + 1));
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a.at(i, j));
    m[i][n] = b[i];
  }
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < a.rows; ++c) {
    std::size_t p = npos;
    for (std::size_t i = r; i < a.rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p == npos) continue;
    std::swap(m[p], m[r]);
    Rat inv = m[r][c];
    for (std::size_t j = c; j <= n; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  for (std::size_t i = r; i < a.rows; ++i)
    if (m[i][n] != 0) return std::nullopt;
  QVec x(n, Rat(0));
  for (auto [pr, pc] : pivots) x[pc] = m[pr][n];
  return x;
}

std::optional<ZVec> integral_solve(const IntMatrix& a, const ZVec& c) {
  if (c.size() != a.rows) throw DimensionMismatch("integral_solve: rhs length disagrees with rows");
  if (a.cols == 0) {
    for (const auto& z : c)
      if (z != 0) return std::nullopt;
    return ZVec{};
  }
  IntMatrix t = a.transposed();  // n x r
  HnfResult hr = hermite_normal_form(t);
  std::size_t n = a.cols;
  // a x = c with x = u^T y becomes h^T y = c; h is in echelon form, so the
  // pivot coordinates determine y front to back.
  ZVec y(n, Int(0));
  ZVec residual = c;
  std::size_t solved = 0;
  for (std::size_t i = 0; i < hr.h.rows; ++i) {
    std::size_t p = npos;
    for (std::size_t j = 0; j < hr.h.cols; ++j)
      if (hr.h.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p == npos) break;
    if (residual[p] % hr.h.at(i, p) != 0) return std::nullopt;
    y[i] = residual[p] / hr.h.at(i, p);
    if (y[i] != 0)
      for (std::size_t q = 0; q < hr.h.cols; ++q) residual[q] -= y[i] * hr.h.at(i, q);
    ++solved;
  }
  (void)solved;
  for (const auto& z : residual)
    if (z != 0) return std::nullopt;
  ZVec x = mul(hr.u.transposed(), y);
  return x;
}

}  // namespace mdm
