#include "monpure/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace monpure {

namespace {

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector primitive(IntVector v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

// coordinates of every generator in the HNF basis of ZM (always integral)
IntMatrix generator_coords(const AffineMonoid& M) {
  IntMatrix A(M.num_generators(), M.rank());
  for (std::size_t i = 0; i < M.num_generators(); ++i) {
    auto c = lattice_coords(M.group(), M.generators()[i]);
    for (std::size_t j = 0; j < M.rank(); ++j) A.at(i, j) = (*c)[j];
  }
  return A;
}

// next k-subset of {0..n-1} in lexicographic order
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  std::size_t k = s.size();
  for (std::size_t i = k; i-- > 0;) {
    if (s[i] + 1 <= n - (k - i)) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Int eval_normal(const FacetNormal& n, const IntVector& x) {
  return dot(n.direction, x);
}

Rat eval_normal(const FacetNormal& n, const RatVector& x) {
  return make_rat(dot(n.direction, x.num), x.den);
}

Rat eval_scaled(const FacetNormal& n, const RatVector& x) {
  return make_rat(dot(n.direction, x.num), x.den * n.value_index);
}

Cone supporting_hyperplanes(const AffineMonoid& M) {
  const std::size_t u = M.num_generators();
  const std::size_t r = M.rank();
  const std::size_t q = M.ambient_dim();
  IntMatrix A = generator_coords(M);

  // facets of the full-dimensional pointed cone spanned by the coordinate
  // vectors: each is supported on r-1 independent generators
  std::vector<IntVector> ws;
  std::vector<std::size_t> subset(r - 1);
  for (std::size_t i = 0; i < r - 1; ++i) subset[i] = i;
  bool more = (r - 1 <= u);
  while (more) {
    IntMatrix sub(r - 1, r);
    for (std::size_t i = 0; i < r - 1; ++i) sub.set_row(i, A.row(subset[i]));
    IntMatrix ker = right_kernel(sub);
    if (ker.rows == 1) {
      IntVector w = primitive(ker.row(0));
      bool nonneg = true, nonpos = true;
      for (std::size_t j = 0; j < u; ++j) {
        int c = cmp(dot(A.row(j), w), Int(0));
        if (c < 0) nonneg = false;
        if (c > 0) nonpos = false;
      }
      if (nonneg || nonpos) {
        if (nonpos && !nonneg)
          for (Int& x : w) x = -x;
        if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
      }
    }
    if (r == 1) break;  // only the empty subset
    more = next_subset(subset, u);
  }

  // lift each dual vector w to an ambient integer normal v with B v = lambda w
  const IntMatrix& B = M.group().basis;
  IntMatrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram.at(i, j) = dot(B.row(i), B.row(j));

  Cone cone;
  cone.ambient_dim = q;
  for (const IntVector& w : ws) {
    std::vector<Rat> rhs(r);
    for (std::size_t i = 0; i < r; ++i) rhs[i] = Rat(w[i]);
    auto y = solve_square(gram, rhs);
    std::vector<Rat> v(q, Rat(0));
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t i = 0; i < r; ++i) v[j] += (*y)[i] * Rat(B.at(i, j));
    Int denom = 1;
    for (const Rat& c : v) denom = lcm(denom, Int(c.get_den()));
    IntVector vi(q);
    for (std::size_t j = 0; j < q; ++j) vi[j] = Int(v[j].get_num()) * (denom / Int(v[j].get_den()));
    vi = primitive(vi);
    FacetNormal n;
    n.direction = vi;
    Int g = 0;
    for (std::size_t i = 0; i < r; ++i) g = gcd(g, dot(B.row(i), vi));
    n.value_index = g;
    cone.normals.push_back(n);
  }
  std::sort(cone.normals.begin(), cone.normals.end(),
            [](const FacetNormal& a, const FacetNormal& b) {
              return lex_compare(a.direction, b.direction) < 0;
            });
  return cone;
}

std::vector<FaceDescriptor> face_lattice(const AffineMonoid& M, const Cone& cone) {
  const std::size_t u = M.num_generators();
  const std::size_t s = cone.normals.size();
  // tightness table: vanish[j][i] = generator j vanishes on normal i
  std::vector<std::vector<bool>> vanish(u, std::vector<bool>(s));
  for (std::size_t j = 0; j < u; ++j)
    for (std::size_t i = 0; i < s; ++i)
      vanish[j][i] = eval_normal(cone.normals[i], M.generators()[j]) == 0;

  std::set<std::vector<std::size_t>> signatures;
  for (std::size_t mask = 0; mask < (std::size_t(1) << s); ++mask) {
    std::vector<std::size_t> sig;
    for (std::size_t j = 0; j < u; ++j) {
      bool on_face = true;
      for (std::size_t i = 0; i < s && on_face; ++i)
        if ((mask >> i) & 1) on_face = vanish[j][i];
      if (on_face) sig.push_back(j);
    }
    signatures.insert(sig);
  }

  std::vector<FaceDescriptor> faces;
  for (const auto& sig : signatures) {
    FaceDescriptor f;
    f.generator_indices = sig;
    for (std::size_t i = 0; i < s; ++i) {
      bool tight = true;
      for (std::size_t j : sig)
        if (!vanish[j][i]) {
          tight = false;
          break;
        }
      if (tight) f.tight_normals.push_back(i);
    }
    std::vector<IntVector> gens;
    for (std::size_t j : sig) gens.push_back(M.generators()[j]);
    f.dim = hnf_basis(M.ambient_dim(), gens).rank();
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.generator_indices < b.generator_indices;
  });
  return faces;
}

const FaceDescriptor& ConeData::full_face(const AffineMonoid& M) const {
  for (const FaceDescriptor& f : faces)
    if (f.generator_indices.size() == M.num_generators()) return f;
  throw std::logic_error("face lattice is missing the full cone");
}

ConeData analyze_cone(const AffineMonoid& M) {
  ConeData d;
  d.cone = supporting_hyperplanes(M);
  d.faces = face_lattice(M, d.cone);
  return d;
}

const FaceDescriptor& minimal_face_containing(const AffineMonoid& M,
                                              const ConeData& geom,
                                              const std::vector<IntVector>& points) {
  const std::size_t s = geom.cone.normals.size();
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < s; ++i) {
    bool all_zero = true;
    for (const IntVector& p : points)
      if (eval_normal(geom.cone.normals[i], p) != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) tight.push_back(i);
  }
  std::vector<std::size_t> sig;
  for (std::size_t j = 0; j < M.num_generators(); ++j) {
    bool on_face = true;
    for (std::size_t i : tight)
      if (eval_normal(geom.cone.normals[i], M.generators()[j]) != 0) {
        on_face = false;
        break;
      }
    if (on_face) sig.push_back(j);
  }
  for (const FaceDescriptor& f : geom.faces)
    if (f.generator_indices == sig) return f;
  throw std::logic_error("minimal face not present in face lattice");
}

Lattice face_group(const AffineMonoid& M, const FaceDescriptor& face) {
  std::vector<IntVector> gens;
  for (std::size_t j : face.generator_indices) gens.push_back(M.generators()[j]);
  return hnf_basis(M.ambient_dim(), gens);
}

Lattice face_span_group(const AffineMonoid& M, const FaceDescriptor& face) {
  std::vector<IntVector> gens;
  for (std::size_t j : face.generator_indices) gens.push_back(M.generators()[j]);
  return intersect_with_span(M.group(), gens);
}

namespace {

// number of x in Z^q_{>=0} with |x| <= B, i.e. C(B+q, q)
Int box_point_count(const Int& B, std::size_t q) {
  Int num = 1, den = 1;
  for (std::size_t i = 1; i <= q; ++i) {
    num *= B + Int(i);
    den *= Int(i);
  }
  return num / den;
}

}  // namespace

HilbertResult hilbert_basis_saturation(const AffineMonoid& M, const ConeData& geom,
                                       const FaceDescriptor& face,
                                       const Int& budget) {
  HilbertResult res;
  if (face.generator_indices.empty()) {
    res.decided = true;
    return res;
  }
  Lattice L = face_group(M, face);

  // degree bound: sum of the primitive extreme-ray generators of the face
  Int B = 0;
  for (const FaceDescriptor& ray : geom.faces) {
    if (ray.dim != 1) continue;
    if (!std::includes(face.generator_indices.begin(), face.generator_indices.end(),
                       ray.generator_indices.begin(), ray.generator_indices.end()))
      continue;
    const IntVector& g = M.generators()[ray.generator_indices.front()];
    auto coords = lattice_coords(L, g);
    Int gc = 0;
    for (const Int& c : *coords) gc = gcd(gc, c);
    B += degree(g) / gc;
  }

  if (box_point_count(B, M.ambient_dim()) > budget) return res;  // undecided

  // saturation window: lattice points of the face-cone with degree <= B
  std::set<IntVector> window;
  IntVector x(M.ambient_dim(), 0);
  auto enumerate = [&](auto&& self, std::size_t pos, const Int& used) -> void {
    if (pos == M.ambient_dim()) {
      if (is_zero(x) || !lattice_contains(L, x)) return;
      for (const FacetNormal& n : geom.cone.normals)
        if (eval_normal(n, x) < 0) return;
      window.insert(x);
      return;
    }
    for (Int c = 0; c <= B - used; ++c) {
      x[pos] = c;
      self(self, pos + 1, used + c);
    }
    x[pos] = 0;
  };
  enumerate(enumerate, 0, Int(0));

  for (const IntVector& cand : window) {
    bool reducible = false;
    for (const IntVector& y : window) {
      if (y == cand) continue;
      IntVector diff = sub(cand, y);
      if (!is_nonnegative(diff)) continue;
      if (window.count(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) res.basis.push_back(cand);
  }
  res.decided = true;
  return res;
}

Polytope delta_region(const AffineMonoid& M, const ConeData& geom) {
  Polytope P;
  P.ambient_dim = M.ambient_dim();
  P.carrier = M.group();
  for (const FacetNormal& n : geom.cone.normals) {
    IntVector neg(n.direction.size());
    for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -n.direction[j];
    P.rows.push_back({neg, Rat(0), false});             // <x,v> >= 0
    P.rows.push_back({n.direction, Rat(n.value_index), true});  // <x,v>/g < 1
  }
  if (!polytope_bounded(P))
    throw InputError("delta region unbounded: cone is not pointed");
  return P;
}

namespace {

struct MappedRow {
  std::vector<Rat> a;
  Rat b;
};

// rows restricted to span(L), in L-basis coordinates; nullopt when some row
// is infeasible on the whole span (empty polytope)
std::optional<std::vector<MappedRow>> map_rows(const Polytope& P, const Lattice& L) {
  std::vector<MappedRow> out;
  for (const PolytopeRow& row : P.rows) {
    MappedRow m;
    m.b = row.bound;
    m.a.resize(L.rank());
    bool zero = true;
    for (std::size_t k = 0; k < L.rank(); ++k) {
      Int s = 0;
      for (std::size_t j = 0; j < L.ambient_dim; ++j)
        s += L.basis.at(k, j) * row.normal[j];
      m.a[k] = Rat(s);
      if (s != 0) zero = false;
    }
    if (zero) {
      if (m.b < 0) return std::nullopt;
      continue;
    }
    out.push_back(std::move(m));
  }
  return out;
}

Rat eval_row(const MappedRow& row, const std::vector<Rat>& c) {
  Rat s(0);
  for (std::size_t k = 0; k < row.a.size(); ++k) s += row.a[k] * c[k];
  return s;
}

bool rows_bounded(const std::vector<MappedRow>& rows, std::size_t r) {
  if (r == 0) return true;
  std::vector<std::vector<Rat>> mat;
  for (const MappedRow& m : rows) mat.push_back(m.a);
  if (rational_rank(mat) < r) return false;  // lineality in the recession cone
  if (r == 1) {
    bool has_pos = false, has_neg = false;
    for (const MappedRow& m : rows) {
      if (m.a[0] > 0) has_pos = true;
      if (m.a[0] < 0) has_neg = true;
    }
    return has_pos && has_neg;
  }
  // extreme rays of {c : <c,a_i> <= 0} are tight on r-1 independent rows
  std::vector<std::size_t> subset(r - 1);
  for (std::size_t i = 0; i < r - 1; ++i) subset[i] = i;
  if (rows.size() < r - 1) return false;
  do {
    IntMatrix sub(r - 1, r);
    bool integral = true;
    for (std::size_t i = 0; i < r - 1 && integral; ++i)
      for (std::size_t k = 0; k < r; ++k) {
        const Rat& v = rows[subset[i]].a[k];
        sub.at(i, k) = Int(v.get_num());  // rows are integral by construction
        if (v.get_den() != 1) integral = false;
      }
    if (!integral) throw std::logic_error("mapped rows must be integral");
    IntMatrix ker = right_kernel(sub);
    if (ker.rows == 1) {
      for (int sign = 0; sign < 2; ++sign) {
        IntVector w = ker.row(0);
        if (sign)
          for (Int& x : w) x = -x;
        bool recession = true;
        for (const MappedRow& m : rows) {
          Rat s(0);
          for (std::size_t k = 0; k < r; ++k) s += m.a[k] * Rat(w[k]);
          if (s > 0) {
            recession = false;
            break;
          }
        }
        if (recession) return false;
      }
    }
  } while (next_subset(subset, rows.size()));
  return true;
}

std::vector<std::vector<Rat>> enumerate_vertices(const std::vector<MappedRow>& rows,
                                                 std::size_t r) {
  std::vector<std::vector<Rat>> verts;
  if (r == 0) return verts;
  if (rows.size() < r) return verts;
  std::vector<std::size_t> subset(r);
  for (std::size_t i = 0; i < r; ++i) subset[i] = i;
  do {
    // solve the r x r equality system with exact arithmetic
    IntMatrix A(r, r);
    std::vector<Rat> b(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) A.at(i, k) = Int(rows[subset[i]].a[k].get_num());
      b[i] = rows[subset[i]].b;
    }
    auto c = solve_square(A, b);
    if (c) {
      bool feasible = true;
      for (const MappedRow& m : rows)
        if (eval_row(m, *c) > m.b) {
          feasible = false;
          break;
        }
      if (feasible && std::find(verts.begin(), verts.end(), *c) == verts.end())
        verts.push_back(*c);
    }
  } while (next_subset(subset, rows.size()));
  std::sort(verts.begin(), verts.end());
  return verts;
}

std::size_t affine_dim(const std::vector<std::vector<Rat>>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<Rat>> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rat> d(pts[0].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(d));
  }
  return rational_rank(std::move(diffs));
}

std::vector<std::vector<std::size_t>> triangulate(
    const std::vector<std::size_t>& vs, const std::vector<MappedRow>& rows,
    const std::vector<std::vector<Rat>>& pts, std::size_t d) {
  if (d == 0) return {{vs[0]}};
  if (vs.size() == d + 1) return {vs};
  std::size_t apex = vs[0];
  for (std::size_t v : vs)
    if (pts[v] < pts[apex]) apex = v;

  std::vector<std::vector<std::size_t>> out;
  std::set<std::vector<std::size_t>> seen;
  for (const MappedRow& row : rows) {
    if (eval_row(row, pts[apex]) == row.b) continue;
    std::vector<std::size_t> W;
    for (std::size_t v : vs)
      if (eval_row(row, pts[v]) == row.b) W.push_back(v);
    if (W.size() < d) continue;
    std::vector<std::vector<Rat>> wpts;
    for (std::size_t v : W) wpts.push_back(pts[v]);
    if (affine_dim(wpts) != d - 1) continue;
    if (!seen.insert(W).second) continue;
    for (auto& s : triangulate(W, rows, pts, d - 1)) {
      std::vector<std::size_t> simplex{apex};
      simplex.insert(simplex.end(), s.begin(), s.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

Rat rational_abs_det(std::vector<std::vector<Rat>> m) {
  std::size_t n = m.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != col) std::swap(m[p], m[col]);
    det *= m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return abs(det);
}

void require_span_containment(const Polytope& P, const Lattice& L) {
  for (std::size_t i = 0; i < P.carrier.rank(); ++i) {
    std::vector<Rat> row(P.carrier.ambient_dim);
    for (std::size_t j = 0; j < P.carrier.ambient_dim; ++j)
      row[j] = Rat(P.carrier.basis.at(i, j));
    if (!span_coords(L, row))
      throw InputError("polytope does not lie in the span of the lattice");
  }
}

}  // namespace

bool polytope_bounded(const Polytope& P) {
  auto rows = map_rows(P, P.carrier);
  if (!rows) return true;  // empty
  return rows_bounded(*rows, P.carrier.rank());
}

std::vector<std::vector<Rat>> polytope_vertices(const Polytope& P, const Lattice& L) {
  auto rows = map_rows(P, L);
  if (!rows) return {};
  return enumerate_vertices(*rows, L.rank());
}

Rat relative_volume(const Polytope& P, const Lattice& L) {
  require_span_containment(P, L);
  std::size_t r = L.rank();
  auto rows = map_rows(P, L);
  if (!rows) return Rat(0);
  if (r == 0) {
    // zero-dimensional carrier: nonempty closure counts as a single cell
    for (const MappedRow& m : *rows)
      if (m.b < 0) return Rat(0);
    return Rat(1);
  }
  if (!rows_bounded(*rows, r)) throw InputError("relative_volume: polytope unbounded");
  auto verts = enumerate_vertices(*rows, r);
  if (verts.size() < r + 1 || affine_dim(verts) < r) return Rat(0);

  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Rat vol(0);
  Int factorial = 1;
  for (std::size_t i = 2; i <= r; ++i) factorial *= Int(i);
  for (const auto& simplex : triangulate(all, *rows, verts, r)) {
    std::vector<std::vector<Rat>> edges;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
      std::vector<Rat> e(r);
      for (std::size_t k = 0; k < r; ++k)
        e[k] = verts[simplex[i]][k] - verts[simplex[0]][k];
      edges.push_back(std::move(e));
    }
    vol += rational_abs_det(std::move(edges)) / Rat(factorial);
  }
  return vol;
}

Rat relative_volume(const Polytope& P) { return relative_volume(P, P.carrier); }

Rat polytope_max_degree(const Polytope& P, const Lattice& L) {
  auto verts = polytope_vertices(P, L);
  if (verts.empty()) throw InputError("polytope_max_degree: empty polytope");
  std::vector<Rat> degvec(L.rank());
  for (std::size_t k = 0; k < L.rank(); ++k) degvec[k] = Rat(degree(L.basis.row(k)));
  Rat best;
  bool first = true;
  for (const auto& v : verts) {
    Rat d(0);
    for (std::size_t k = 0; k < L.rank(); ++k) d += degvec[k] * v[k];
    if (first || d > best) {
      best = d;
      first = false;
    }
  }
  return best;
}

}  // namespace monpure
