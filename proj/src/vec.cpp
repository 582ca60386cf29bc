#include "monpure/vec.hpp"

#include <algorithm>
#include <sstream>

namespace monpure {

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  n = abs(n);
  if (n < 2) return out;
  Int p = 2;
  while (p * p <= n) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
    p = (p == 2) ? 3 : p + 2;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Rat parse_rat(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0) throw InputError("malformed rational: " + text);
  if (q.get_den() == 0) throw InputError("zero denominator: " + text);
  q.canonicalize();
  return q;
}

Int degree(const IntVector& v) {
  Int s = 0;
  for (const Int& x : v) s += x;
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector scale(const Int& c, const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
}

int lex_compare(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

RatVector::RatVector(IntVector numerator, Int denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
  if (den <= 0) throw InputError("RatVector denominator must be positive");
}

Rat RatVector::degree() const { return make_rat(monpure::degree(num), den); }

RatVector RatVector::reduced() const {
  Int g = den;
  for (const Int& x : num) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  if (g <= 1) return *this;
  RatVector r;
  r.den = den / g;
  r.num.reserve(num.size());
  for (const Int& x : num) r.num.push_back(x / g);
  return r;
}

bool RatVector::is_integral() const {
  return std::all_of(num.begin(), num.end(),
                     [&](const Int& x) { return x % den == 0; });
}

IntVector RatVector::numerator_for_den(const Int& m) const {
  IntVector out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    Int t = num[i] * m;
    if (t % den != 0) throw InputError("vector not in (1/m)Z^q");
    out[i] = t / den;
  }
  return out;
}

std::string RatVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (i) os << ',';
    os << rat_to_string(coord(i));
  }
  os << ')';
  return os.str();
}

RatVector rv_from_int(const IntVector& v) { return RatVector(v, 1); }

RatVector rv_add(const RatVector& a, const RatVector& b) {
  Int l = lcm(a.den, b.den);
  Int fa = l / a.den, fb = l / b.den;
  IntVector n(a.num.size());
  for (std::size_t i = 0; i < n.size(); ++i) n[i] = a.num[i] * fa + b.num[i] * fb;
  return RatVector(std::move(n), l);
}

RatVector rv_sub(const RatVector& a, const RatVector& b) {
  Int l = lcm(a.den, b.den);
  Int fa = l / a.den, fb = l / b.den;
  IntVector n(a.num.size());
  for (std::size_t i = 0; i < n.size(); ++i) n[i] = a.num[i] * fa - b.num[i] * fb;
  return RatVector(std::move(n), l);
}

bool rv_equal(const RatVector& a, const RatVector& b) {
  RatVector ra = a.reduced(), rb = b.reduced();
  return ra.den == rb.den && lex_compare(ra.num, rb.num) == 0;
}

bool rv_less(const RatVector& a, const RatVector& b) {
  RatVector ra = a.reduced(), rb = b.reduced();
  int c = lex_compare(ra.num, rb.num);
  if (c != 0) return c < 0;
  return ra.den < rb.den;
}

}  // namespace monpure
