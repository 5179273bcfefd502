#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

// Eigen needs NumTraits for the GMP scalars. GMP's classes are safe here
// because their constructors are constrained; the usual multiprecision
// wrappers break Eigen's operator* overload resolution on this toolchain.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100,
  };
};

}  // namespace Eigen

namespace expcircle {

using Int = mpz_class;
using Rat = mpq_class;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// p/q in lowest terms with positive denominator; throws std::invalid_argument
// when q == 0.
Rat make_rat(long p, long q = 1);
Rat make_rat(const Int& p, const Int& q);

// Fractional part in [0, 1).
Rat mod1(const Rat& x);

// Canonical form "p/q", denominator always explicit ("0/1", "-1/2", ...).
std::string rat_to_string(const Rat& x);

// Accepts "p" or "p/q"; throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

}  // namespace expcircle
