#include "monpure/lattice.hpp"

#include <algorithm>
#include <set>

namespace monpure {

Lattice hnf_basis(std::size_t ambient_dim, const std::vector<IntVector>& vectors) {
  for (const IntVector& v : vectors)
    if (v.size() != ambient_dim) throw InputError("hnf_basis: dimension mismatch");
  Lattice L;
  L.ambient_dim = ambient_dim;
  L.basis = hnf(from_rows(vectors, ambient_dim));
  return L;
}

namespace {

// Back-substitution against the HNF staircase. Returns false when v is not an
// integer combination; coords (if requested) receive the combination.
bool hnf_reduce(const Lattice& L, IntVector v, std::vector<Int>* coords) {
  if (v.size() != L.ambient_dim) throw InputError("lattice: dimension mismatch");
  if (coords) coords->assign(L.rank(), 0);
  for (std::size_t i = 0; i < L.rank(); ++i) {
    std::size_t col = 0;
    while (col < L.ambient_dim && L.basis.at(i, col) == 0) ++col;
    // entries left of the pivot must already be zero
    for (std::size_t j = 0; j < col; ++j)
      if (v[j] != 0) return false;
    if (col == L.ambient_dim) continue;
    if (v[col] % L.basis.at(i, col) != 0) return false;
    Int c = v[col] / L.basis.at(i, col);
    if (coords) (*coords)[i] = c;
    if (c != 0)
      for (std::size_t j = col; j < L.ambient_dim; ++j)
        v[j] -= c * L.basis.at(i, j);
  }
  return is_zero(v);
}

}  // namespace

bool lattice_contains(const Lattice& L, const IntVector& v) {
  return hnf_reduce(L, v, nullptr);
}

std::optional<std::vector<Int>> lattice_coords(const Lattice& L, const IntVector& v) {
  std::vector<Int> coords;
  if (!hnf_reduce(L, v, &coords)) return std::nullopt;
  return coords;
}

std::optional<std::vector<Rat>> span_coords(const Lattice& L,
                                            const std::vector<Rat>& v) {
  if (v.size() != L.ambient_dim) throw InputError("lattice: dimension mismatch");
  std::vector<Rat> rest = v, coords(L.rank());
  for (std::size_t i = 0; i < L.rank(); ++i) {
    std::size_t col = 0;
    while (col < L.ambient_dim && L.basis.at(i, col) == 0) ++col;
    for (std::size_t j = 0; j < col; ++j)
      if (rest[j] != 0) return std::nullopt;
    if (col == L.ambient_dim) continue;
    Rat c = rest[col] / Rat(L.basis.at(i, col));
    coords[i] = c;
    for (std::size_t j = col; j < L.ambient_dim; ++j)
      rest[j] -= c * Rat(L.basis.at(i, j));
  }
  for (const Rat& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

namespace {

IntMatrix coords_matrix_checked(const Lattice& L_big, const Lattice& L_small) {
  IntMatrix m(L_small.rank(), L_big.rank());
  for (std::size_t i = 0; i < L_small.rank(); ++i) {
    auto c = lattice_coords(L_big, L_small.basis.row(i));
    if (!c) throw InputError("lattice containment violated: smaller lattice not inside larger");
    for (std::size_t j = 0; j < L_big.rank(); ++j) m.at(i, j) = (*c)[j];
  }
  return m;
}

}  // namespace

LatticeIndex lattice_index(const Lattice& L_big, const Lattice& L_small) {
  IntMatrix m = coords_matrix_checked(L_big, L_small);
  if (L_small.rank() != L_big.rank()) return {false, 0};
  Int d = abs(det(m));
  if (d == 0) return {false, 0};  // unreachable: HNF rows are independent
  return {true, d};
}

std::vector<Int> torsion_primes_of_quotient(const Lattice& L_big,
                                            const Lattice& L_small) {
  IntMatrix m = coords_matrix_checked(L_big, L_small);
  std::set<Int> primes;
  for (const Int& d : smith_divisors(m))
    for (const Int& p : prime_factors(d)) primes.insert(p);
  return {primes.begin(), primes.end()};
}

Lattice intersect_with_span(const Lattice& L, const std::vector<IntVector>& span_rows) {
  std::vector<IntVector> nonzero;
  for (const IntVector& v : span_rows)
    if (!is_zero(v)) nonzero.push_back(v);
  if (nonzero.empty()) return hnf_basis(L.ambient_dim, {});
  // normals cutting out span_Q(rows): right kernel of the row matrix
  IntMatrix normals = right_kernel(from_rows(nonzero, L.ambient_dim));
  if (normals.rows == 0) return L;  // rows already span everything
  // integer combinations of L's basis that vanish on every normal
  IntMatrix pairing(L.rank(), normals.rows);
  for (std::size_t i = 0; i < L.rank(); ++i)
    for (std::size_t k = 0; k < normals.rows; ++k) {
      Int s = 0;
      for (std::size_t j = 0; j < L.ambient_dim; ++j)
        s += L.basis.at(i, j) * normals.at(k, j);
      pairing.at(i, k) = s;
    }
  IntMatrix combos = left_kernel(pairing);
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < combos.rows; ++i) {
    IntVector v(L.ambient_dim, 0);
    for (std::size_t j = 0; j < L.rank(); ++j)
      if (combos.at(i, j) != 0)
        v = add(v, scale(combos.at(i, j), L.basis.row(j)));
    gens.push_back(v);
  }
  return hnf_basis(L.ambient_dim, gens);
}

}  // namespace monpure
