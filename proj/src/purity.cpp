#include "monpure/purity.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace monpure {

namespace {

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int pow_count(const Int& m, std::size_t u) {
  Int t = 1;
  for (std::size_t i = 0; i < u; ++i) t *= m;
  return t;
}

}  // namespace

PurityEngine::PurityEngine(AffineMonoid monoid, Budgets budgets)
    : M_(std::move(monoid)), geom_(analyze_cone(M_)), budgets_(std::move(budgets)) {}

bool PurityEngine::is_pure_translation(const Int& m, const RatVector& alpha,
                                       IntVector* witness) const {
  if (m < 1) throw InputError("is_pure_translation: m must be >= 1");
  IntVector m_alpha;
  try {
    m_alpha = alpha.numerator_for_den(m);
  } catch (const InputError&) {
    throw InputError("alpha not in (1/m)M: not even in (1/m)Z^q");
  }
  if (!M_.member(m_alpha)) throw InputError("alpha not in (1/m)M");
  return pure_test(m, m_alpha, witness);
}

// Core test of Prop. 3.2(iii): no z in ZM \ M with z + alpha in (1/m)M.
// m_alpha is the (already verified) numerator of alpha over denominator m.
bool PurityEngine::pure_test(const Int& m, const IntVector& m_alpha,
                             IntVector* witness) const {
  const std::size_t q = M_.ambient_dim();

  if (pow_count(m, M_.num_generators()) <= budgets_.literal_budget) {
    // literal sweep of the module generators D_m
    RatVector alpha(m_alpha, m);
    for (const RatVector& d : module_generators(M_, m, budgets_.literal_budget)) {
      RatVector z = rv_sub(d, alpha);
      if (!z.is_integral()) continue;
      IntVector zi(q);
      for (std::size_t j = 0; j < q; ++j) zi[j] = z.num[j] / z.den;
      if (!lattice_contains(M_.group(), zi)) continue;
      if (!M_.member(zi)) {
        if (witness) *witness = zi;
        return false;
      }
    }
    return true;
  }

  // Windowed equivalent: every violation is witnessed by z = d - alpha with
  // d in D_m, and those z lie coordinatewise between ceil(-alpha) and the
  // generator column sums.
  IntVector lo(q), hi(q);
  for (std::size_t j = 0; j < q; ++j) {
    lo[j] = -rat_floor(make_rat(m_alpha[j], m));
    hi[j] = M_.generator_column_sums()[j];
  }
  IntVector z(q);
  bool violated = false;
  auto scan = [&](auto&& self, std::size_t pos) -> void {
    if (violated) return;
    if (pos == q) {
      if (is_zero(z)) return;
      if (!lattice_contains(M_.group(), z)) return;
      if (M_.member(z)) return;
      IntVector shifted(q);
      for (std::size_t j = 0; j < q; ++j) shifted[j] = m * z[j] + m_alpha[j];
      if (M_.member(shifted)) {
        violated = true;
        if (witness) *witness = z;
      }
      return;
    }
    for (Int c = lo[pos]; c <= hi[pos] && !violated; ++c) {
      z[pos] = c;
      self(self, pos + 1);
    }
  };
  scan(scan, 0);
  return !violated;
}

const PureTranslationSet& PurityEngine::compute_Vm(const Int& m) {
  if (m < 1) throw InputError("compute_Vm: m must be >= 1");
  auto it = vm_cache_.find(m);
  if (it != vm_cache_.end()) return it->second;

  PureTranslationSet out;
  out.m = m;
  const std::size_t q = M_.ambient_dim();
  IntVector zero(q, 0);

  if (pure_test(m, zero, nullptr)) {
    if (pow_count(m, M_.num_generators()) <= budgets_.vm_sweep_budget) {
      // literal candidate sweep over D_m (valid: V_m is contained in D_m once
      // 0 is pure, by Prop. 3.13 and Remark 3.12)
      for (const RatVector& d : module_generators(M_, m, budgets_.vm_sweep_budget))
        if (pure_test(m, d.numerator_for_den(m), nullptr)) out.elements.push_back(d);
    } else {
      // heredity walk: every pure alpha reaches 0 through pure predecessors by
      // removing one gamma_i/m step at a time (Prop. 3.13)
      std::set<IntVector> visited;  // numerators over denominator m
      std::deque<IntVector> frontier;
      visited.insert(zero);
      frontier.push_back(zero);
      out.elements.push_back(RatVector(zero, m));
      Int explored = 1;
      while (!frontier.empty()) {
        IntVector cur = frontier.front();
        frontier.pop_front();
        for (const IntVector& g : M_.generators()) {
          IntVector cand = add(cur, g);
          if (visited.count(cand)) continue;
          visited.insert(cand);
          if (++explored > budgets_.bfs_budget)
            throw BudgetError("compute_Vm: candidate budget exceeded at m=" + m.get_str());
          if (pure_test(m, cand, nullptr)) {
            out.elements.push_back(RatVector(cand, m));
            frontier.push_back(cand);
          }
        }
      }
    }
  }

  std::sort(out.elements.begin(), out.elements.end(), rv_less);
  if (!out.elements.empty()) {
    Rat best = out.elements.front().degree();
    for (const RatVector& a : out.elements) best = std::max(best, a.degree());
    out.max_degree = best;
  }
  return vm_cache_.emplace(m, std::move(out)).first->second;
}

bool PurityEngine::is_in_A(const Int& m) const {
  if (m < 2) throw InputError("is_in_A: m must be >= 2");
  return pure_test(m, IntVector(M_.ambient_dim(), 0), nullptr);
}

const SeminormalityCertificate& PurityEngine::decide_seminormal() {
  if (seminormal_) return *seminormal_;
  SeminormalityCertificate cert;
  std::set<Int> bad;
  for (const FaceDescriptor& face : geom_.faces) {
    Lattice big = face_span_group(M_, face);
    Lattice small = face_group(M_, face);
    for (const Int& p : torsion_primes_of_quotient(big, small)) bad.insert(p);
  }
  cert.bad_primes.assign(bad.begin(), bad.end());
  Int p = 2;
  while (bad.count(p)) p = next_prime(p);
  cert.witness_prime = p;
  IntVector witness;
  cert.seminormal = pure_test(p, IntVector(M_.ambient_dim(), 0), &witness);
  if (!cert.seminormal) cert.violation = witness;
  seminormal_ = std::move(cert);
  return *seminormal_;
}

const NormalityResult& PurityEngine::decide_normal() {
  if (normal_) return *normal_;
  NormalityResult res;
  res.hilbert = hilbert_basis_saturation(M_, geom_, geom_.full_face(M_),
                                         budgets_.hilbert_budget);
  if (!res.hilbert.decided) {
    res.verdict = Verdict::Undecided;
  } else {
    res.verdict = Verdict::True;
    for (const IntVector& h : res.hilbert.basis)
      if (!M_.member(h)) {
        res.verdict = Verdict::False;
        res.witness = h;
        break;
      }
  }
  normal_ = std::move(res);
  return *normal_;
}

const PurePrimeFace& PurityEngine::pure_prime_face() {
  if (face_) return *face_;
  PurePrimeFace out;
  const SeminormalityCertificate& cert = decide_seminormal();
  if (!cert.seminormal) {
    face_ = std::move(out);
    return *face_;
  }
  out.defined = true;
  const Int& w = cert.witness_prime;

  std::set<IntVector> points;  // union of the accumulated mV_m
  const FaceDescriptor* prev = nullptr;
  const FaceDescriptor* current = nullptr;
  bool stabilized = false;
  for (unsigned long t = 1;; ++t) {
    Int m = int_pow(w, t);
    if (t > 1 && m > budgets_.m_budget) break;
    std::vector<IntVector> level;
    try {
      for (const RatVector& a : compute_Vm(m).elements)
        level.push_back(a.numerator_for_den(m));
    } catch (const BudgetError&) {
      break;
    }
    std::sort(level.begin(), level.end(),
              [](const IntVector& a, const IntVector& b) { return lex_compare(a, b) < 0; });
    out.evidence.emplace_back(m, level);
    points.insert(level.begin(), level.end());
    std::vector<IntVector> pts(points.begin(), points.end());
    current = &minimal_face_containing(M_, geom_, pts);
    if (prev && *prev == *current) {
      stabilized = true;
      break;
    }
    prev = current;
  }
  if (!current) {  // first V_m already over budget: fall back to {0}
    std::vector<IntVector> origin{IntVector(M_.ambient_dim(), 0)};
    current = &minimal_face_containing(M_, geom_, origin);
  }
  out.face = *current;
  out.mpdim = static_cast<long>(out.face.dim);

  // verification: every Hilbert basis element of M cap F must show up as a
  // pure translation at some m within budget
  if (stabilized) {
    HilbertResult hb =
        hilbert_basis_saturation(M_, geom_, out.face, budgets_.hilbert_budget);
    if (hb.decided) {
      bool all_witnessed = true;
      for (const IntVector& h : hb.basis) {
        bool witnessed = points.count(h) > 0;
        for (unsigned long t = 1; !witnessed; ++t) {
          Int m = int_pow(w, t);
          if (m > budgets_.m_budget) break;
          if (M_.member(h) && pure_test(m, h, nullptr)) witnessed = true;
        }
        if (!witnessed) {
          all_witnessed = false;
          break;
        }
      }
      out.verified = all_witnessed;
    }
  }
  face_ = std::move(out);
  return *face_;
}

const PureThreshold& PurityEngine::pure_threshold() {
  if (threshold_) return *threshold_;
  PureThreshold out;
  const SeminormalityCertificate& cert = decide_seminormal();
  if (!cert.seminormal) {
    out.kind = PureThreshold::Kind::NegInfinity;
    threshold_ = std::move(out);
    return *threshold_;
  }
  if (decide_normal().verdict == Verdict::True) {
    Polytope delta = delta_region(M_, geom_);
    out.kind = PureThreshold::Kind::Exact;
    out.value = polytope_max_degree(delta, M_.group());
    threshold_ = std::move(out);
    return *threshold_;
  }
  out.kind = PureThreshold::Kind::Estimate;
  const Int& w = cert.witness_prime;
  for (int t = 1; t <= budgets_.t_budget; ++t) {
    Int m = int_pow(w, static_cast<unsigned long>(t));
    try {
      const PureTranslationSet& vm = compute_Vm(m);
      out.trace.emplace_back(m, *vm.max_degree);
    } catch (const BudgetError&) {
      break;
    }
  }
  if (!out.trace.empty()) out.value = out.trace.back().second;
  threshold_ = std::move(out);
  return *threshold_;
}

BRegion PurityEngine::b_region(const Int& m) {
  if (m >= 2 && !is_in_A(m)) throw InputError("b_region: m not in A(M)");
  const PurePrimeFace& ppf = pure_prime_face();
  if (!ppf.defined) throw InputError("b_region: monoid is not seminormal");
  const PureTranslationSet& vm = compute_Vm(m);
  Lattice carrier = face_group(M_, ppf.face);

  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < geom_.cone.normals.size(); ++i)
    if (!std::binary_search(ppf.face.tight_normals.begin(),
                            ppf.face.tight_normals.end(), i))
      active.push_back(i);

  BRegion out;
  std::vector<std::vector<Rat>> upper;  // bounds per element, active order
  for (const RatVector& a : vm.elements) {
    Polytope P;
    P.ambient_dim = M_.ambient_dim();
    P.carrier = carrier;
    std::vector<Rat> bounds;
    for (std::size_t i : active) {
      const FacetNormal& n = geom_.cone.normals[i];
      IntVector neg(n.direction.size());
      for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -n.direction[j];
      Rat ub = eval_normal(n, a);
      P.rows.push_back({neg, Rat(0), false});      // x inside the face cone
      P.rows.push_back({n.direction, ub, false});  // alpha - x inside as well
      bounds.push_back(ub);
    }
    upper.push_back(std::move(bounds));
    out.pieces.push_back(std::move(P));
  }

  const std::size_t d = carrier.rank();
  if (d == 0) {
    out.union_volume = vm.elements.empty() ? Rat(0) : Rat(1);
    return out;
  }

  if (active.size() == d) {
    // simplicial face: the functional map is a bijection, so the union is a
    // union of boxes anchored at 0 in functional coordinates
    IntMatrix W(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        Int s = 0;
        for (std::size_t j = 0; j < carrier.ambient_dim; ++j)
          s += carrier.basis.at(k, j) * geom_.cone.normals[active[i]].direction[j];
        W.at(i, k) = s;
      }
    Int jac = abs(det(W));
    std::vector<std::vector<Rat>> axis(d);
    for (std::size_t i = 0; i < d; ++i) {
      std::set<Rat> vals{Rat(0)};
      for (const auto& b : upper) vals.insert(b[i]);
      axis[i].assign(vals.begin(), vals.end());
    }
    std::vector<std::size_t> cell(d, 0);
    Rat total(0);
    while (true) {
      bool in_range = true;
      for (std::size_t i = 0; i < d; ++i)
        if (cell[i] + 1 >= axis[i].size()) in_range = false;
      if (in_range) {
        bool covered = false;
        for (const auto& b : upper) {
          bool dominated = true;
          for (std::size_t i = 0; i < d; ++i)
            if (axis[i][cell[i] + 1] > b[i]) {
              dominated = false;
              break;
            }
          if (dominated) {
            covered = true;
            break;
          }
        }
        if (covered) {
          Rat cellvol(1);
          for (std::size_t i = 0; i < d; ++i)
            cellvol *= axis[i][cell[i] + 1] - axis[i][cell[i]];
          total += cellvol;
        }
      }
      std::size_t i = 0;
      while (i < d) {
        if (++cell[i] + 1 < axis[i].size()) break;
        cell[i] = 0;
        ++i;
      }
      if (i == d) break;
    }
    out.union_volume = total / Rat(jac);
    return out;
  }

  // non-simplicial face: inclusion-exclusion over componentwise minima
  if (vm.elements.size() > 16)
    throw BudgetError("b_region: inclusion-exclusion over too many translates");
  const std::size_t n = vm.elements.size();
  Rat total(0);
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::vector<Rat> mins;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1)) continue;
      if (first) {
        mins = upper[i];
        first = false;
      } else {
        for (std::size_t k = 0; k < mins.size(); ++k)
          mins[k] = std::min(mins[k], upper[i][k]);
      }
    }
    Polytope P;
    P.ambient_dim = M_.ambient_dim();
    P.carrier = carrier;
    for (std::size_t k = 0; k < active.size(); ++k) {
      const FacetNormal& nrm = geom_.cone.normals[active[k]];
      IntVector neg(nrm.direction.size());
      for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -nrm.direction[j];
      P.rows.push_back({neg, Rat(0), false});
      P.rows.push_back({nrm.direction, mins[k], false});
    }
    Rat v = relative_volume(P, carrier);
    if (__builtin_popcountll(mask) % 2 == 1)
      total += v;
    else
      total -= v;
  }
  out.union_volume = total;
  return out;
}

const RatioSignature& PurityEngine::pure_ratio_signature() {
  if (ratio_) return *ratio_;
  RatioSignature out;
  const SeminormalityCertificate& cert = decide_seminormal();
  if (!cert.seminormal) {
    ratio_ = std::move(out);
    return *ratio_;
  }
  out.defined = true;
  if (decide_normal().verdict == Verdict::True) {
    Polytope delta = delta_region(M_, geom_);
    Rat vol = relative_volume(delta, M_.group());
    out.exact = true;
    out.mpr = vol;
    out.mps = vol;
    ratio_ = std::move(out);
    return *ratio_;
  }
  const PurePrimeFace& ppf = pure_prime_face();
  unsigned long s = static_cast<unsigned long>(ppf.mpdim);
  const Int& w = cert.witness_prime;
  Int last_m = 0;
  for (int t = 1; t <= budgets_.t_budget; ++t) {
    Int m = int_pow(w, static_cast<unsigned long>(t));
    try {
      const PureTranslationSet& vm = compute_Vm(m);
      out.count_trace.emplace_back(
          m, make_rat(Int(vm.elements.size()), int_pow(m, s)));
      last_m = m;
    } catch (const BudgetError&) {
      break;
    }
  }
  if (!out.count_trace.empty()) out.mpr = out.count_trace.back().second;
  out.mps = Rat(0);  // vanishing signature off the normal case (Thm-4.6 side)
  if (last_m > 0) {
    try {
      out.b_lower_bound = b_region(last_m).union_volume;
    } catch (const BudgetError&) {
    }
  }
  ratio_ = std::move(out);
  return *ratio_;
}

bool PurityEngine::kunz_free() {
  if (M_.num_generators() != M_.rank()) return false;
  // independent minimal generators make M free; cross-check the Kunz count
  const PureTranslationSet& v2 = compute_Vm(2);
  if (Int(v2.elements.size()) != int_pow(Int(2), M_.rank()))
    throw std::logic_error("kunz cross-check failed: |V_2| != 2^rank on a free monoid");
  return true;
}

RingBounds PurityEngine::ring_bounds() {
  RingBounds out;
  const PureThreshold& mpt = pure_threshold();
  if (mpt.kind == PureThreshold::Kind::NegInfinity) return out;
  out.defined = true;
  out.estimate = mpt.kind == PureThreshold::Kind::Estimate;
  Rat rank(Int(M_.rank()));
  Int degsum_minus = 0;
  for (const Int& d : M_.degrees()) degsum_minus += d - 1;
  out.a_bound = -mpt.value;
  out.reg_bound = rank - mpt.value;
  out.beta_bound = rank + Rat(degsum_minus) - mpt.value - 1;
  out.depth_lower = pure_prime_face().mpdim;
  return out;
}

OracleResult PurityEngine::brute_force_purity_oracle(const Int& m,
                                                     const RatVector& alpha,
                                                     const Rat& window_bound) const {
  IntVector m_alpha = alpha.numerator_for_den(m);
  if (!M_.member(m_alpha)) throw InputError("oracle: alpha not in (1/m)M");
  RatVector a(m_alpha, m);

  OracleResult res;
  auto gammas = graded_window(M_, window_bound);
  for (const WindowElement& bx : graded_window(M_, window_bound * Rat(m))) {
    RatVector beta(bx.point, m);
    RatVector beta_minus_alpha = rv_sub(beta, a);
    if (M_.member(beta_minus_alpha)) continue;  // beta can violate nothing
    for (const WindowElement& gx : gammas) {
      RatVector t = rv_add(rv_from_int(gx.point), beta_minus_alpha);
      if (M_.member(t)) {
        res.violation = true;
        res.beta = beta;
        res.gamma = gx.point;
        return res;
      }
    }
  }
  return res;
}

}  // namespace monpure
