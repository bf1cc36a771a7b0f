#ifndef HFLKIT_INT_MATRIX_HPP
#define HFLKIT_INT_MATRIX_HPP

#include <gmpxx.h>

#include <Eigen/Core>

namespace hflkit {

using BigInt = mpz_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense arbitrary-precision integer matrix.
using IntMatrix = Matrix<BigInt>;

}  // namespace hflkit

namespace Eigen {

template <>
struct NumTraits<hflkit::BigInt> : GenericNumTraits<hflkit::BigInt> {
  using Real = hflkit::BigInt;
  using NonInteger = hflkit::BigInt;
  using Literal = hflkit::BigInt;
  using Nested = hflkit::BigInt;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // HFLKIT_INT_MATRIX_HPP
