#include "monpure/monoid.hpp"

#include <algorithm>
#include <sstream>

namespace monpure {

namespace {

constexpr std::size_t kMemoCapacity = 1u << 20;

// Depth-first search for v = sum c_i * gens[order[i]] with c_i >= 0, largest
// feasible count first, coordinatewise dominance pruning. `witness` (indexed
// by original generator position) receives the combination when found.
bool represent(const std::vector<IntVector>& gens,
               const std::vector<std::size_t>& order,
               const std::vector<Int>& deg, std::size_t pos, IntVector& rest,
               std::vector<Int>* witness,
               std::map<std::pair<std::size_t, IntVector>, bool>* failed,
               std::mutex* mu) {
  if (is_zero(rest)) return true;
  if (pos == order.size()) return false;
  if (failed) {
    std::lock_guard<std::mutex> lock(*mu);
    if (failed->count({pos, rest})) return false;
  }
  const IntVector& g = gens[order[pos]];
  const Int& gdeg = deg[order[pos]];
  // largest count allowed by coordinatewise dominance
  Int cmax = -1;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j] == 0) continue;
    Int q = rest[j] / g[j];
    if (cmax < 0 || q < cmax) cmax = q;
  }
  if (cmax < 0) cmax = 0;  // zero generator cannot occur (validated)
  Int degree_cap = degree(rest) / gdeg;
  if (degree_cap < cmax) cmax = degree_cap;
  for (Int c = cmax; c >= 0; --c) {
    IntVector next(rest.size());
    for (std::size_t j = 0; j < rest.size(); ++j) next[j] = rest[j] - c * g[j];
    if (represent(gens, order, deg, pos + 1, next, witness, failed, mu)) {
      if (witness) (*witness)[order[pos]] = c;
      return true;
    }
  }
  if (failed) {
    std::lock_guard<std::mutex> lock(*mu);
    if (failed->size() < kMemoCapacity) failed->emplace(std::make_pair(pos, rest), true);
  }
  return false;
}

bool represent_in(const std::vector<IntVector>& gens, const IntVector& v,
                  std::vector<Int>* witness) {
  std::vector<std::size_t> order(gens.size());
  std::vector<Int> deg(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    order[i] = i;
    deg[i] = degree(gens[i]);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
  if (witness) witness->assign(gens.size(), 0);
  IntVector rest = v;
  return represent(gens, order, deg, 0, rest, witness, nullptr, nullptr);
}

}  // namespace

AffineMonoid AffineMonoid::validate(std::vector<IntVector> generators) {
  if (generators.empty()) throw InputError("monoid needs at least one generator");
  std::size_t q = generators[0].size();
  if (q == 0) throw InputError("ambient dimension must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != q)
      throw InputError("generator dimension mismatch at index " + std::to_string(i));
    if (is_zero(generators[i]))
      throw InputError("zero generator at index " + std::to_string(i));
    for (const Int& x : generators[i])
      if (x < 0)
        throw InputError("negative coordinate in generator " +
                         to_string(generators[i]));
  }
  // minimality: no generator is a nonnegative combination of the others
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < generators.size(); ++j)
      if (j != i) others.push_back(generators[j]);
    std::vector<Int> witness;
    if (!others.empty() && represent_in(others, generators[i], &witness)) {
      std::ostringstream os;
      os << "redundant generator " << to_string(generators[i]) << " =";
      for (std::size_t j = 0, k = 0; j < generators.size(); ++j) {
        if (j == i) continue;
        if (witness[k] != 0)
          os << " + " << witness[k].get_str() << "*" << to_string(generators[j]);
        ++k;
      }
      throw InputError(os.str());
    }
  }

  AffineMonoid M;
  M.ambient_dim_ = q;
  M.generators_ = std::move(generators);
  M.group_ = hnf_basis(q, M.generators_);
  M.degrees_.reserve(M.generators_.size());
  for (const IntVector& g : M.generators_) M.degrees_.push_back(degree(g));
  M.column_sums_.assign(q, 0);
  for (const IntVector& g : M.generators_) M.column_sums_ = add(M.column_sums_, g);
  M.search_order_.resize(M.generators_.size());
  for (std::size_t i = 0; i < M.generators_.size(); ++i) M.search_order_[i] = i;
  std::stable_sort(M.search_order_.begin(), M.search_order_.end(),
                   [&](std::size_t a, std::size_t b) {
                     return M.degrees_[a] > M.degrees_[b];
                   });
  return M;
}

Int AffineMonoid::max_generator_degree() const {
  return *std::max_element(degrees_.begin(), degrees_.end());
}

bool AffineMonoid::member(const IntVector& v) const {
  return member_witness(v).has_value();
}

std::optional<std::vector<Int>> AffineMonoid::member_witness(const IntVector& v) const {
  if (v.size() != ambient_dim_) throw InputError("member: dimension mismatch");
  if (!is_nonnegative(v)) return std::nullopt;
  if (!lattice_contains(group_, v)) return std::nullopt;
  std::vector<Int> witness(generators_.size(), 0);
  IntVector rest = v;
  if (represent(generators_, search_order_, degrees_, 0, rest, &witness,
                &memo_->failed, &memo_->mu))
    return witness;
  return std::nullopt;
}

bool AffineMonoid::member(const RatVector& v) const {
  if (!v.is_integral()) return false;
  IntVector w(v.num.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = v.num[i] / v.den;
  return member(w);
}

Rat degree_of(const RatVector& v) { return v.degree(); }
Int degree_of(const IntVector& v) { return degree(v); }

std::vector<RatVector> module_generators(const AffineMonoid& M, const Int& m,
                                         const Int& warn_budget,
                                         bool* budget_warning) {
  if (m < 1) throw InputError("module_generators: m must be >= 1");
  std::size_t u = M.num_generators();
  Int total = 1;
  for (std::size_t i = 0; i < u; ++i) total *= m;
  if (budget_warning) *budget_warning = total > warn_budget;

  std::vector<RatVector> out;
  std::vector<Int> r(u, 0);
  IntVector point(M.ambient_dim(), 0);
  while (true) {
    out.push_back(RatVector(point, m));
    // odometer over residue tuples, maintaining the running sum
    std::size_t i = 0;
    while (i < u) {
      r[i] += 1;
      point = add(point, M.generators()[i]);
      if (r[i] < m) break;
      point = sub(point, scale(r[i], M.generators()[i]));
      r[i] = 0;
      ++i;
    }
    if (i == u) break;
  }
  std::sort(out.begin(), out.end(), rv_less);
  out.erase(std::unique(out.begin(), out.end(), rv_equal), out.end());
  return out;
}

std::vector<WindowElement> graded_window(const AffineMonoid& M, const Rat& bound) {
  if (bound < 0) throw InputError("graded_window: bound must be >= 0");
  Int cap = rat_floor(bound);
  std::map<IntVector, std::vector<Int>> seen;
  std::vector<Int> counts(M.num_generators(), 0);
  IntVector point(M.ambient_dim(), 0);

  // depth-first over coefficient vectors, pruned by the degree budget
  auto rec = [&](auto&& self, std::size_t pos, const Int& used) -> void {
    if (pos == M.num_generators()) {
      auto it = seen.find(point);
      if (it == seen.end()) seen.emplace(point, counts);
      return;
    }
    const Int& d = M.degrees()[pos];
    Int cmax = (cap - used) / d;
    for (Int c = 0; c <= cmax; ++c) {
      counts[pos] = c;
      self(self, pos + 1, used + c * d);
      point = add(point, M.generators()[pos]);
    }
    point = sub(point, scale(cmax + 1, M.generators()[pos]));
    counts[pos] = 0;
  };
  rec(rec, 0, Int(0));

  std::vector<WindowElement> out;
  out.reserve(seen.size());
  for (auto& [pt, wit] : seen) out.push_back({pt, wit});
  std::stable_sort(out.begin(), out.end(), [](const WindowElement& a, const WindowElement& b) {
    Int da = degree(a.point), db = degree(b.point);
    if (da != db) return da < db;
    return lex_compare(a.point, b.point) < 0;
  });
  return out;
}

}  // namespace monpure
