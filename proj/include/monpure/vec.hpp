#pragma once

#include "monpure/numeric.hpp"

#include <compare>
#include <string>
#include <vector>

namespace monpure {

using IntVector = std::vector<Int>;

Int degree(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Int& c, const IntVector& v);
bool is_zero(const IntVector& v);
bool is_nonnegative(const IntVector& v);
int lex_compare(const IntVector& a, const IntVector& b);
std::string to_string(const IntVector& v);

/// A point of (1/m)M, kept with the contextual denominator (not reduced) so
/// that "numerator in M" checks stay direct. Equality and ordering go through
/// the reduced form.
struct RatVector {
  IntVector num;
  Int den{1};

  RatVector() = default;
  RatVector(IntVector numerator, Int denominator);

  std::size_t dim() const { return num.size(); }
  Rat degree() const;
  Rat coord(std::size_t i) const { return make_rat(num[i], den); }

  RatVector reduced() const;
  bool is_integral() const;
  /// Numerator rescaled to denominator m; requires the value to lie in (1/m)Z^q.
  IntVector numerator_for_den(const Int& m) const;

  std::string to_string() const;
};

RatVector rv_from_int(const IntVector& v);
RatVector rv_add(const RatVector& a, const RatVector& b);
RatVector rv_sub(const RatVector& a, const RatVector& b);
bool rv_equal(const RatVector& a, const RatVector& b);
/// Lexicographic on the reduced numerator, then reduced denominator.
bool rv_less(const RatVector& a, const RatVector& b);

}  // namespace monpure
