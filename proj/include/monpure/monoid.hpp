#pragma once

#include "monpure/lattice.hpp"
#include "monpure/vec.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace monpure {

/// Affine monoid M = <gamma_1,...,gamma_u> inside Z^q_{>=0}, validated to have
/// nonzero generators with nonnegative coordinates and a minimal generating
/// set. Immutable after construction; the membership memo is an internal
/// concurrent-read/exclusive-insert cache, so member() is safe to call from
/// any number of threads.
class AffineMonoid {
 public:
  static AffineMonoid validate(std::vector<IntVector> generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  std::size_t num_generators() const { return generators_.size(); }
  const Lattice& group() const { return group_; }  // ZM
  std::size_t rank() const { return group_.rank(); }
  const std::vector<Int>& degrees() const { return degrees_; }
  Int max_generator_degree() const;
  /// Coordinatewise sum of all generators; purity violations live below it.
  const IntVector& generator_column_sums() const { return column_sums_; }

  bool member(const IntVector& v) const;
  bool member(const RatVector& v) const;
  std::optional<std::vector<Int>> member_witness(const IntVector& v) const;

 private:
  AffineMonoid() = default;

  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> generators_;
  std::vector<std::size_t> search_order_;  // indices by decreasing degree
  Lattice group_;
  std::vector<Int> degrees_;
  IntVector column_sums_;

  struct Memo {
    std::mutex mu;
    std::map<std::pair<std::size_t, IntVector>, bool> failed;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

Rat degree_of(const RatVector& v);
Int degree_of(const IntVector& v);

/// D_m: residue points (r_1*g_1+...+r_u*g_u)/m for 0 <= r_i <= m-1,
/// deduplicated and sorted. Generates (1/m)M as an M-module. Warns (via the
/// flag) when m^u exceeds the enumeration budget but still enumerates.
std::vector<RatVector> module_generators(const AffineMonoid& M, const Int& m,
                                         const Int& warn_budget = Int(1000000),
                                         bool* budget_warning = nullptr);

struct WindowElement {
  IntVector point;
  std::vector<Int> witness;  // one coefficient vector producing the point
};

/// All monoid elements of degree <= bound, each with one witness, sorted by
/// (degree, lex).
std::vector<WindowElement> graded_window(const AffineMonoid& M, const Rat& bound);

}  // namespace monpure
