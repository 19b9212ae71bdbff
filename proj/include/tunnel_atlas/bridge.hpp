#pragma once

// Fibonacci functions of regular tunnels and the bridge-number bounds
// derived from them. Everything is templated on the integer type; BigInt
// is the default and the only type that cannot overflow.

#include "tunnel_atlas/bigint.hpp"
#include "tunnel_atlas/cabling.hpp"
#include "tunnel_atlas/errors.hpp"
#include "tunnel_atlas/recurrence.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace tunnel_atlas {

/// Bridge numbers of tau_{m-2} and tau_{m-1}, the last two depth-1
/// tunnels of the cabling sequence.
template <class Scalar = BigInt>
struct SeedPair {
  Scalar a;
  Scalar b;

  friend bool operator==(const SeedPair&, const SeedPair&) = default;
};

/// b_{m-2}, b_{m-1}, b_m, ..., b_{n-1}.
template <class Scalar = BigInt>
using IterationTrace = std::vector<Scalar>;

/// F(a, b) = alpha * a + beta * b.
template <class Scalar = BigInt>
struct LinearForm {
  Scalar alpha;
  Scalar beta;

  Scalar operator()(const Scalar& a, const Scalar& b) const { return alpha * a + beta * b; }
};

template <class Scalar = BigInt>
struct BridgeCandidate {
  SeedPair<Scalar> seed;
  Scalar value;
};

enum class BoundKind { min_by_depth, torus_min_by_depth, max_by_cablings, max_overall, semisimple_range };

/// Closed interval [low, high]; single-valued bounds have low == high.
template <class Scalar = BigInt>
struct BridgeBound {
  BoundKind kind;
  Scalar low;
  Scalar high;
};

inline const char* to_string(BoundKind kind) {
  switch (kind) {
  case BoundKind::min_by_depth: return "min_by_depth";
  case BoundKind::torus_min_by_depth: return "torus_min_by_depth";
  case BoundKind::max_by_cablings: return "max_by_cablings";
  case BoundKind::max_overall: return "max_overall";
  case BoundKind::semisimple_range: return "semisimple_range";
  }
  return "unknown";
}

namespace detail {

// Leading zeros are the semisimple prefix and do not enter the iteration.
// (u, v) holds (b_i, b_{k-1}) where {tau_i, tau_{k-1}, tau_k} is the
// principal vertex of tau_k. A 1 moves the retained disk forward; a 0 keeps
// the older one.
template <class Scalar>
IterationTrace<Scalar> run_trace(const BinaryWord& word, const Scalar& a, const Scalar& b) {
  auto bit = std::find(word.begin(), word.end(), 1);
  IterationTrace<Scalar> trace;
  trace.reserve(static_cast<std::size_t>(word.end() - bit) + 2);
  trace.push_back(a);
  trace.push_back(b);
  Scalar u = a;
  Scalar v = b;
  trace.push_back(u + v);
  for (++bit; bit != word.end(); ++bit) {
    const Scalar& last = trace.back();
    if (*bit) {
      u = v;
    }
    v = last;
    trace.push_back(u + v);
  }
  return trace;
}

inline void require_regular(const BinaryWord& word) {
  if (!word.has_one()) {
    throw NotRegular();
  }
}

inline void require_at_least(long value, long minimum, const char* name) {
  if (value < minimum) {
    throw OutOfRange(std::string(name) + " must be at least " + std::to_string(minimum) +
                     ", got " + std::to_string(value));
  }
}

} // namespace detail

template <class Scalar>
IterationTrace<Scalar> fibonacci_trace(const BinaryWord& word, const SeedPair<Scalar>& seed) {
  detail::require_regular(word);
  if (seed.a < 1 || seed.b < 1) {
    throw InvalidSeed("seed bridge numbers must be positive, got (" + to_decimal(seed.a) + ", " +
                      to_decimal(seed.b) + ")");
  }
  return detail::run_trace(word, seed.a, seed.b);
}

/// F_tau(a, b) = b_{n-1}.
template <class Scalar>
Scalar fibonacci_value(const BinaryWord& word, const SeedPair<Scalar>& seed) {
  return fibonacci_trace(word, seed).back();
}

/// (F(1,0), F(0,1)): F is linear in its seeds.
template <class Scalar = BigInt>
LinearForm<Scalar> fibonacci_coefficients(const BinaryWord& word) {
  detail::require_regular(word);
  return {detail::run_trace(word, Scalar(1), Scalar(0)).back(),
          detail::run_trace(word, Scalar(0), Scalar(1)).back()};
}

/// The 2m-2 candidates F(a, a) and F(a, a+1), 2 <= a <= m, ascending.
template <class Scalar = BigInt>
std::vector<BridgeCandidate<Scalar>> bridge_set_candidates(const BinaryWord& word) {
  detail::require_regular(word);
  const auto m = static_cast<long>(semisimple_count(word));
  const LinearForm<Scalar> form = fibonacci_coefficients<Scalar>(word);
  std::vector<BridgeCandidate<Scalar>> out;
  out.reserve(static_cast<std::size_t>(2 * m - 2));
  for (long a = 2; a <= m; ++a) {
    for (long b = a; b <= a + 1; ++b) {
      SeedPair<Scalar> seed{Scalar(a), Scalar(b)};
      Scalar value = form(seed.a, seed.b);
      out.push_back({std::move(seed), std::move(value)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.value < y.value; });
  return out;
}

template <class Scalar = BigInt>
std::vector<Scalar> bridge_set(const BinaryWord& word) {
  std::vector<Scalar> values;
  for (auto& c : bridge_set_candidates<Scalar>(word)) {
    values.push_back(std::move(c.value));
  }
  return values;
}

/// Bridge number of the knot from that of tau_m, the first depth-2
/// tunnel: its two parents split br(tau_m) as evenly as possible.
template <class Scalar = BigInt>
Scalar bridge_from_first_depth_two(const BinaryWord& word, const Scalar& first_depth_two) {
  if (first_depth_two < 4) {
    throw InvalidSeed("a depth-2 tunnel has bridge number at least 4, got " +
                      to_decimal(first_depth_two));
  }
  Scalar low = first_depth_two / 2;
  Scalar high = first_depth_two - low;
  return fibonacci_value(word, SeedPair<Scalar>{low, high});
}

/// Bridge numbers available to a simple or semisimple tunnel produced
/// by n cablings.
template <class Scalar = BigInt>
BridgeBound<Scalar> semisimple_range(long n) {
  detail::require_at_least(n, 1, "cabling count");
  return {BoundKind::semisimple_range, Scalar(2), Scalar(n + 1)};
}

/// Minimum bridge number over all knots with a depth-d tunnel:
/// a_1 = 2, a_2 = 4, a_d = 2 a_{d-1} + a_{d-2}.
template <class Scalar = BigInt>
Scalar min_bridge(long depth) {
  detail::require_at_least(depth, 1, "depth");
  return second_order_term(Scalar(2), Scalar(1), Scalar(2), Scalar(4),
                           static_cast<unsigned long>(depth));
}

/// Same recursion started at t_1 = 2, t_2 = 5, for torus knots.
template <class Scalar = BigInt>
Scalar torus_min_bridge(long depth) {
  detail::require_at_least(depth, 1, "depth");
  return second_order_term(Scalar(2), Scalar(1), Scalar(2), Scalar(5),
                           static_cast<unsigned long>(depth));
}

/// F_1 = F_2 = 1.
template <class Scalar = BigInt>
Scalar fibonacci_number(long k) {
  detail::require_at_least(k, 1, "Fibonacci index");
  return second_order_term(Scalar(1), Scalar(1), Scalar(1), Scalar(1),
                           static_cast<unsigned long>(k));
}

/// m F_{n-m+2} + F_{n-m+1}: the largest bridge number for n cablings of
/// which the first m give depth-1 tunnels.
template <class Scalar = BigInt>
Scalar max_bridge(long n, long m) {
  detail::require_at_least(m, 1, "semisimple count");
  if (m > n) {
    throw OutOfRange("semisimple count " + std::to_string(m) + " exceeds cabling count " +
                     std::to_string(n));
  }
  return Scalar(m) * fibonacci_number<Scalar>(n - m + 2) + fibonacci_number<Scalar>(n - m + 1);
}

/// F_{n+2}, attained at m = 2.
template <class Scalar = BigInt>
Scalar max_bridge_overall(long n) {
  detail::require_at_least(n, 1, "cabling count");
  return fibonacci_number<Scalar>(n + 2);
}

} // namespace tunnel_atlas
