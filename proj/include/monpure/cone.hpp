#pragma once

#include "monpure/monoid.hpp"

#include <optional>
#include <vector>

namespace monpure {

/// Inner facet normal of C(M). `direction` is a primitive integer vector;
/// `value_index` g is the positive generator of {<z,direction> : z in ZM}, so
/// the paper's ZM-primitive functional is <x,direction>/g.
struct FacetNormal {
  IntVector direction;
  Int value_index{1};
};

struct Cone {
  std::size_t ambient_dim = 0;
  std::vector<FacetNormal> normals;
};

/// Face of C(M): indices of tight normals, indices of the generators lying on
/// the face, and the rank of Z(M cap F).
struct FaceDescriptor {
  std::vector<std::size_t> tight_normals;
  std::vector<std::size_t> generator_indices;
  std::size_t dim = 0;

  bool operator==(const FaceDescriptor& o) const {
    return generator_indices == o.generator_indices;
  }
};

Cone supporting_hyperplanes(const AffineMonoid& M);

/// All faces of C(M) including {0} and C(M) itself, sorted by (dim, indices).
std::vector<FaceDescriptor> face_lattice(const AffineMonoid& M, const Cone& cone);

/// Cone plus face lattice, computed once per monoid.
struct ConeData {
  Cone cone;
  std::vector<FaceDescriptor> faces;

  const FaceDescriptor& full_face(const AffineMonoid& M) const;
};

ConeData analyze_cone(const AffineMonoid& M);

Int eval_normal(const FacetNormal& n, const IntVector& x);
Rat eval_normal(const FacetNormal& n, const RatVector& x);
/// The ZM-primitive functional <x, direction>/g.
Rat eval_scaled(const FacetNormal& n, const RatVector& x);

/// Smallest face whose point set contains all the given monoid elements.
const FaceDescriptor& minimal_face_containing(const AffineMonoid& M,
                                              const ConeData& geom,
                                              const std::vector<IntVector>& points);

/// Z(M cap F), the group generated by the face's generators.
Lattice face_group(const AffineMonoid& M, const FaceDescriptor& face);
/// ZM cap QF, the ambient group cut to the face's span.
Lattice face_span_group(const AffineMonoid& M, const FaceDescriptor& face);

struct HilbertResult {
  bool decided = false;
  std::vector<IntVector> basis;  // sorted, meaningful when decided
};

/// Minimal generating set of the saturation of M cap F inside its own lattice
/// Z(M cap F): candidates are enumerated in the degree window bounded by the
/// sum of the primitive extreme-ray generators, then reduced to irreducibles.
/// Exceeding `budget` enumeration steps yields undecided, never a wrong
/// answer.
HilbertResult hilbert_basis_saturation(const AffineMonoid& M, const ConeData& geom,
                                       const FaceDescriptor& face,
                                       const Int& budget);

/// One inequality <x, normal> <= bound (strict when flagged).
struct PolytopeRow {
  IntVector normal;
  Rat bound;
  bool strict = false;
};

/// H-polytope inside span(carrier); strictness affects membership only, never
/// volume.
struct Polytope {
  std::size_t ambient_dim = 0;
  std::vector<PolytopeRow> rows;
  Lattice carrier;
};

/// Delta = {x : 0 <= <x,v_i>/g_i < 1} for the ZM-primitive facet functionals;
/// requires M normal (caller-certified) and throws if unbounded.
Polytope delta_region(const AffineMonoid& M, const ConeData& geom);

bool polytope_bounded(const Polytope& P);

/// Vertices of the closure, in carrier-basis coordinates.
std::vector<std::vector<Rat>> polytope_vertices(const Polytope& P, const Lattice& L);

/// Exact volume of the closure of P, normalized so fundamental domains of L
/// have volume one. P must lie in span(L).
Rat relative_volume(const Polytope& P, const Lattice& L);
Rat relative_volume(const Polytope& P);

/// Maximum of the coordinate-sum functional over the closure of P.
Rat polytope_max_degree(const Polytope& P, const Lattice& L);

}  // namespace monpure
