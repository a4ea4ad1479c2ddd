#ifndef CLARKE_NUMERIC_HPP
#define CLARKE_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace clarke {

// All core arithmetic is exact. Int/Rat are GMP-backed arbitrary precision;
// nothing in the library touches floating point.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Thrown on malformed caller input (CLI maps it to exit code 1).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a mathematical precondition or check fails (CLI exit code 2).
struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(numerator(q), denominator(q)); }
inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }
inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

inline Rat frac_part(const Rat& q) { return q - Rat(rat_floor(q)); }

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) { r *= n - i; r /= i + 1; }
  return r;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

// Scales a rational vector to a primitive integer vector (preserving direction).
IntVec primitive(const RatVec& v);
inline IntVec primitive(const IntVec& v) { return primitive(to_rat(v)); }

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace clarke

#endif
