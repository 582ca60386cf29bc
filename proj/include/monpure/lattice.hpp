#pragma once

#include "monpure/matrix.hpp"

#include <optional>
#include <vector>

namespace monpure {

/// Subgroup of Z^q held as a canonical row-HNF basis, so equal lattices have
/// identical bases and equality is structural.
struct Lattice {
  std::size_t ambient_dim = 0;
  IntMatrix basis;  // canonical HNF, rank() rows

  std::size_t rank() const { return basis.rows; }
  bool operator==(const Lattice& other) const {
    return ambient_dim == other.ambient_dim && basis.a == other.basis.a &&
           basis.rows == other.basis.rows;
  }
};

Lattice hnf_basis(std::size_t ambient_dim, const std::vector<IntVector>& vectors);

bool lattice_contains(const Lattice& L, const IntVector& v);

/// Integer coordinates of v in the HNF basis; empty when v is outside L.
std::optional<std::vector<Int>> lattice_coords(const Lattice& L, const IntVector& v);

/// Rational coordinates of a rational point in span_Q(L); empty when outside.
std::optional<std::vector<Rat>> span_coords(const Lattice& L,
                                            const std::vector<Rat>& v);

struct LatticeIndex {
  bool finite = true;
  Int value = 1;  // meaningful when finite
};

/// [L_big : L_small]; requires L_small subset of L_big (containment error
/// otherwise). Infinite when the ranks differ.
LatticeIndex lattice_index(const Lattice& L_big, const Lattice& L_small);

/// Primes with p-torsion in L_big/L_small: primes dividing some elementary
/// divisor of the coordinate matrix of L_small in L_big's basis.
std::vector<Int> torsion_primes_of_quotient(const Lattice& L_big,
                                            const Lattice& L_small);

/// L intersected with the rational span of the given vectors.
Lattice intersect_with_span(const Lattice& L, const std::vector<IntVector>& span_rows);

}  // namespace monpure
