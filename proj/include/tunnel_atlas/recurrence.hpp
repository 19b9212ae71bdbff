#pragma once

#include "tunnel_atlas/bigint.hpp"

namespace tunnel_atlas {

/// base^exponent by repeated squaring.
template <class Scalar>
Matrix2<Scalar> matrix_power(Matrix2<Scalar> base, unsigned long exponent) {
  Matrix2<Scalar> result = Matrix2<Scalar>::Identity();
  while (exponent > 0) {
    if (exponent & 1UL) {
      result = (result * base).eval();
    }
    exponent >>= 1;
    if (exponent > 0) {
      base = (base * base).eval();
    }
  }
  return result;
}

/// Term k (1-based) of x_k = p x_{k-1} + q x_{k-2} with given x_1, x_2.
template <class Scalar>
Scalar second_order_term(const Scalar& p, const Scalar& q, const Scalar& first,
                         const Scalar& second, unsigned long k) {
  if (k == 1) {
    return first;
  }
  Matrix2<Scalar> step;
  step << p, q, Scalar(1), Scalar(0);
  Vector2<Scalar> seed(second, first);
  Vector2<Scalar> out = matrix_power(step, k - 2) * seed;
  return out(0);
}

} // namespace tunnel_atlas
