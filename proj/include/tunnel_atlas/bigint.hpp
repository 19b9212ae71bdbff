#pragma once

#include <gmpxx.h>
#include <Eigen/Core>

#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

namespace tunnel_atlas {

/// Arbitrary-precision signed integer used for every bridge number,
/// matrix entry and torus parameter.
using BigInt = mpz_class;

template <class Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

template <class Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

template <std::integral Int>
std::string to_decimal(Int value) {
  return std::to_string(value);
}

/// Parses an optionally signed decimal integer. Returns false on any
/// other input.
bool parse_decimal(std::string_view text, BigInt& out);

/// Converts a non-negative count to size_t; false when it does not fit.
inline bool to_size(const BigInt& value, std::size_t& out) {
  if (value < 0 || !value.fits_ulong_p()) {
    return false;
  }
  out = static_cast<std::size_t>(value.get_ui());
  return true;
}

template <std::integral Int>
bool to_size(Int value, std::size_t& out) {
  if (value < 0) {
    return false;
  }
  out = static_cast<std::size_t>(value);
  return true;
}

} // namespace tunnel_atlas

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

} // namespace Eigen
