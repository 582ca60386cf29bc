#pragma once

#include "monpure/cone.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace monpure {

struct Budgets {
  Int m_budget = 99;             // largest m used for face search / witnessing
  int t_budget = 6;              // length of mpt / mpr traces
  Int hilbert_budget = 4000000;  // Hilbert basis enumeration step budget
  Rat window_bound = 12;         // degree window of the brute-force oracle
  Int literal_budget = 120000;   // max m^u for the literal D_m purity test
  Int vm_sweep_budget = 4096;    // max m^u for the literal V_m candidate sweep
  Int bfs_budget = 200000;       // max explored nodes in the V_m heredity walk
};

/// V_m(M) for one m. Every element has m*alpha in M; 0 is present exactly when
/// the set is nonempty.
struct PureTranslationSet {
  Int m{1};
  std::vector<RatVector> elements;  // sorted
  std::optional<Rat> max_degree;
};

struct SeminormalityCertificate {
  bool seminormal = false;
  Int witness_prime{0};
  std::vector<Int> bad_primes;          // torsion primes over all G_F
  std::optional<IntVector> violation;   // z in (1/p)M cap ZM, outside M
};

enum class Verdict { True, False, Undecided };

struct NormalityResult {
  Verdict verdict = Verdict::Undecided;
  std::optional<IntVector> witness;  // saturation element outside M
  HilbertResult hilbert;
};

struct PurePrimeFace {
  bool defined = false;  // false encodes mpdim = -infinity
  FaceDescriptor face;
  long mpdim = -1;
  bool verified = false;
  std::vector<std::pair<Int, std::vector<IntVector>>> evidence;  // (m, mV_m)
};

struct PureThreshold {
  enum class Kind { Exact, Estimate, NegInfinity };
  Kind kind = Kind::NegInfinity;
  Rat value{0};
  std::vector<std::pair<Int, Rat>> trace;  // (m, max |alpha| over V_m)
};

struct BRegion {
  std::vector<Polytope> pieces;  // one per element of V_m, on the face span
  Rat union_volume{0};
};

struct RatioSignature {
  bool defined = false;  // seminormal
  bool exact = false;    // normal case: mpr = mps = vol(Delta)
  Rat mpr{0};
  Rat mps{0};
  std::vector<std::pair<Int, Rat>> count_trace;  // |V_m| / m^mpdim
  std::optional<Rat> b_lower_bound;              // vol of B_m at the largest m
};

struct RingBounds {
  bool defined = false;  // seminormal only
  bool estimate = false;
  Rat a_bound{0};      // a_i(R) <= -mpt
  Rat reg_bound{0};    // reg <= rank - mpt
  Rat beta_bound{0};   // beta(I) <= rank + sum(d_i - 1) - mpt - 1
  long depth_lower = 0;  // depth >= mpdim
};

struct OracleResult {
  bool violation = false;
  RatVector beta;   // witness pair when violated:
  IntVector gamma;  // gamma + beta - alpha in M but beta - alpha outside M
};

/// Purity computations over one monoid, with memoized V_m sets and verdicts.
/// All outputs are deterministic and exact-rational.
class PurityEngine {
 public:
  PurityEngine(AffineMonoid monoid, Budgets budgets = {});

  const AffineMonoid& monoid() const { return M_; }
  const ConeData& geometry() const { return geom_; }
  const Budgets& budgets() const { return budgets_; }

  /// Purity of (alpha + M) inside (1/m)M, Prop.-3.2-style finite test: the
  /// module generators D_m are swept literally when m^u is small, otherwise an
  /// equivalent bounded window is scanned for a violating z = d - alpha.
  bool is_pure_translation(const Int& m, const RatVector& alpha,
                           IntVector* witness = nullptr) const;

  const PureTranslationSet& compute_Vm(const Int& m);

  bool is_in_A(const Int& m) const;

  const SeminormalityCertificate& decide_seminormal();
  const NormalityResult& decide_normal();
  const PurePrimeFace& pure_prime_face();
  const PureThreshold& pure_threshold();
  BRegion b_region(const Int& m);
  const RatioSignature& pure_ratio_signature();
  bool kunz_free();
  RingBounds ring_bounds();

  /// Independent exhaustive check of Prop. 3.2(ii) over a degree window:
  /// conclusive as a refutation, inconclusive as a proof.
  OracleResult brute_force_purity_oracle(const Int& m, const RatVector& alpha,
                                         const Rat& window_bound) const;

 private:
  bool pure_test(const Int& m, const IntVector& m_alpha, IntVector* witness) const;

  AffineMonoid M_;
  ConeData geom_;
  Budgets budgets_;

  std::map<Int, PureTranslationSet> vm_cache_;
  std::optional<SeminormalityCertificate> seminormal_;
  std::optional<NormalityResult> normal_;
  std::optional<PurePrimeFace> face_;
  std::optional<PureThreshold> threshold_;
  std::optional<RatioSignature> ratio_;
};

}  // namespace monpure
