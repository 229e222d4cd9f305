#ifndef LORCHECK_RATIONAL_HPP
#define LORCHECK_RATIONAL_HPP

#include <gmpxx.h>
#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace lorcheck {

// Exact rational scalar. Canonical form (lowest terms, positive denominator)
// is maintained by GMP for all arithmetic results; the only entry points that
// need explicit canonicalization are raw p/q construction and string parsing,
// which go through the helpers below.
using Rat = mpq_class;
using Int = mpz_class;

// Thrown on malformed or out-of-contract inputs; the CLI maps it to exit 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q" with optional leading minus, q > 0 after reduction.
Rat rat_from_string(const std::string& s);

std::string rat_to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int factorial(int n);
Int binomial(int n, int k);
Rat pow_rat(const Rat& base, int exp);

}  // namespace lorcheck

namespace Eigen {

// Exact scalar: epsilon 0 makes rank/pivot thresholds exact.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

#endif
