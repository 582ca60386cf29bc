#include "monpure/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace monpure {

IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row dimension mismatch");
    m.set_row(i, rows[i]);
  }
  return m;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
}

// row[i] -= q * row[j]
void row_axpy(IntMatrix& m, std::size_t i, std::size_t j, const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < m.cols; ++k) m.at(i, k) -= q * m.at(j, k);
}

// Row echelon by gcd elimination; operates on m and mirrors every operation
// on the optional transform u (kept unimodular). Returns pivot row count.
std::size_t echelonize(IntMatrix& m, IntMatrix* u) {
  std::size_t piv = 0;
  for (std::size_t col = 0; col < m.cols && piv < m.rows; ++col) {
    // eliminate below piv in this column until at most one nonzero remains
    while (true) {
      std::size_t best = m.rows;
      for (std::size_t i = piv; i < m.rows; ++i) {
        if (m.at(i, col) == 0) continue;
        if (best == m.rows ||
            cmp(abs(m.at(i, col)), abs(m.at(best, col))) < 0)
          best = i;
      }
      if (best == m.rows) break;  // column clear
      swap_rows(m, piv, best);
      if (u) swap_rows(*u, piv, best);
      bool again = false;
      for (std::size_t i = piv + 1; i < m.rows; ++i) {
        if (m.at(i, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(),
                   m.at(piv, col).get_mpz_t());
        row_axpy(m, i, piv, q);
        if (u) row_axpy(*u, i, piv, q);
        if (m.at(i, col) != 0) again = true;
      }
      if (!again) break;
    }
    if (m.at(piv, col) != 0) {
      if (m.at(piv, col) < 0) {
        for (std::size_t k = 0; k < m.cols; ++k) m.at(piv, k) = -m.at(piv, k);
        if (u)
          for (std::size_t k = 0; k < u->cols; ++k)
            u->at(piv, k) = -u->at(piv, k);
      }
      ++piv;
    }
  }
  return piv;
}

void reduce_above_pivots(IntMatrix& m, std::size_t piv_rows) {
  for (std::size_t i = 0; i < piv_rows; ++i) {
    std::size_t col = 0;
    while (col < m.cols && m.at(i, col) == 0) ++col;
    if (col == m.cols) continue;
    for (std::size_t j = 0; j < i; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(j, col).get_mpz_t(),
                 m.at(i, col).get_mpz_t());
      row_axpy(m, j, i, q);
    }
  }
}

}  // namespace

IntMatrix hnf(const IntMatrix& input) {
  IntMatrix m = input;
  std::size_t piv = echelonize(m, nullptr);
  reduce_above_pivots(m, piv);
  IntMatrix out(piv, m.cols);
  for (std::size_t i = 0; i < piv; ++i) out.set_row(i, m.row(i));
  return out;
}

IntMatrix left_kernel(const IntMatrix& input) {
  IntMatrix m = input;
  IntMatrix u(m.rows, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) u.at(i, i) = 1;
  std::size_t piv = echelonize(m, &u);
  IntMatrix out(m.rows - piv, m.rows);
  for (std::size_t i = piv; i < m.rows; ++i) out.set_row(i - piv, u.row(i));
  return hnf(out);
}

IntMatrix right_kernel(const IntMatrix& m) {
  IntMatrix t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return left_kernel(t);
}

std::vector<Int> smith_divisors(IntMatrix m) {
  std::vector<Int> divisors;
  std::size_t top = 0;
  while (true) {
    // locate smallest-abs nonzero entry in the remaining block
    std::size_t bi = m.rows, bj = m.cols;
    for (std::size_t i = top; i < m.rows; ++i)
      for (std::size_t j = top; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (bi == m.rows || cmp(abs(m.at(i, j)), abs(m.at(bi, bj))) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi == m.rows) break;
    swap_rows(m, top, bi);
    for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, top), m.at(i, bj));

    bool clean = true;
    for (std::size_t i = top + 1; i < m.rows; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, top).get_mpz_t(), m.at(top, top).get_mpz_t());
      row_axpy(m, i, top, q);
      if (m.at(i, top) != 0) clean = false;
    }
    for (std::size_t j = top + 1; j < m.cols; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(top, j).get_mpz_t(), m.at(top, top).get_mpz_t());
      if (q != 0)
        for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, top);
      if (m.at(top, j) != 0) clean = false;
    }
    if (!clean) continue;  // rerun with the reduced block

    // divisibility fixup: pivot must divide the rest of the block
    bool divides_all = true;
    for (std::size_t i = top + 1; i < m.rows && divides_all; ++i)
      for (std::size_t j = top + 1; j < m.cols && divides_all; ++j)
        if (m.at(i, j) % m.at(top, top) != 0) {
          // fold row i into row top and restart the block
          for (std::size_t k = 0; k < m.cols; ++k) m.at(top, k) += m.at(i, k);
          divides_all = false;
        }
    if (!divides_all) continue;

    divisors.push_back(abs(m.at(top, top)));
    ++top;
    if (top >= m.rows || top >= m.cols) break;
  }
  return divisors;
}

std::size_t rank(IntMatrix m) { return echelonize(m, nullptr); }

Int det(const IntMatrix& input) {
  if (input.rows != input.cols) throw InputError("det needs a square matrix");
  std::size_t n = input.rows;
  if (n == 0) return 1;
  // fraction-free Bareiss
  IntMatrix m = input;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap_i = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap_i = i;
          break;
        }
      if (swap_i == n) return 0;
      swap_rows(m, k, swap_i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = t / prev;
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::optional<std::vector<Rat>> solve_square(const IntMatrix& A,
                                             const std::vector<Rat>& b) {
  std::size_t n = A.rows;
  if (A.cols != n || b.size() != n) throw InputError("solve_square shape");
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(A.at(i, j));
    m[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[col], m[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[col][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

std::size_t rational_rank(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace monpure
