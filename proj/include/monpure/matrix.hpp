#pragma once

#include "monpure/vec.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace monpure {

/// Dense row-major matrix over Z.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }
  void set_row(std::size_t i, const IntVector& v) {
    for (std::size_t j = 0; j < cols; ++j) at(i, j) = v[j];
  }
};

IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

/// Canonical row-style Hermite normal form: zero rows dropped, pivots
/// positive, entries above each pivot reduced into [0, pivot). Two generating
/// sets of the same lattice always produce identical output.
IntMatrix hnf(const IntMatrix& m);

/// Basis of the left kernel lattice {x in Z^rows : x * m = 0}.
IntMatrix left_kernel(const IntMatrix& m);
/// Basis of {x in Z^cols : m * x = 0}.
IntMatrix right_kernel(const IntMatrix& m);

/// Elementary divisors d_1 | d_2 | ... (positive, nonzero ones only) from the
/// Smith normal form.
std::vector<Int> smith_divisors(IntMatrix m);

std::size_t rank(IntMatrix m);
Int det(const IntMatrix& m);  // square required

/// Solve A x = b exactly over Q; empty when A is singular. A must be square.
std::optional<std::vector<Rat>> solve_square(const IntMatrix& A,
                                             const std::vector<Rat>& b);

/// Rank of a rational matrix (rows given as vectors of Rat).
std::size_t rational_rank(std::vector<std::vector<Rat>> rows);

}  // namespace monpure
