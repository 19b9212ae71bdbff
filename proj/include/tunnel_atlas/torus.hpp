#pragma once

// Invariants of the middle tunnel of a (p, q) torus knot, read off from
// the products of U = [[1,1],[0,1]] and L = [[1,0],[1,1]] dictated by the
// continued fraction of p/q.

#include "tunnel_atlas/bigint.hpp"
#include "tunnel_atlas/bridge.hpp"
#include "tunnel_atlas/cabling.hpp"
#include "tunnel_atlas/errors.hpp"

#include <string>
#include <variant>
#include <vector>

namespace tunnel_atlas {

/// Upper bound on the number of table rows we are willing to allocate.
inline constexpr std::size_t kMaxTableRows = 10'000'000;

/// [n_1, ..., n_k], all positive, n_k >= 2 when k >= 2.
template <class Scalar = BigInt>
struct ContinuedFraction {
  std::vector<Scalar> terms;

  std::size_t size() const noexcept { return terms.size(); }
  const Scalar& operator[](std::size_t i) const { return terms[i]; }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

template <class Scalar = BigInt>
struct Ratio {
  Scalar numerator;
  Scalar denominator;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// (p, q) torus knot; the bridge number is min(p, q).
template <class Scalar = BigInt>
struct TorusKnot {
  Scalar p;
  Scalar q;

  Scalar bridge_number() const { return p < q ? p : q; }

  friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
};

/// Parameters with p > q >= 2. A mirrored knot has its slope invariants
/// negated; binary invariants are unchanged.
template <class Scalar = BigInt>
struct NormalizedTorus {
  Scalar p;
  Scalar q;
  bool mirrored = false;
};

enum class Letter : char { U = 'U', L = 'L' };

template <class Scalar = BigInt>
struct LetterBlock {
  Letter letter;
  Scalar first_index;
  Scalar length;
};

/// Letters A_i for -n_1 <= i <= n_2 + ... + n_k - 1, stored as runs.
template <class Scalar = BigInt>
struct LetterSequence {
  std::vector<LetterBlock<Scalar>> blocks;

  Scalar first_index() const { return blocks.front().first_index; }
  Scalar last_index() const { return blocks.back().first_index + blocks.back().length - 1; }

  Letter at(const Scalar& index) const {
    for (const auto& block : blocks) {
      if (index >= block.first_index && index < block.first_index + block.length) {
        return block.letter;
      }
    }
    throw OutOfRange("letter index " + to_decimal(index) + " outside the sequence");
  }

  /// "L|UU|LL"; runs longer than 16 are written "U^n".
  std::string str() const {
    std::string out;
    for (const auto& block : blocks) {
      if (!out.empty()) {
        out += '|';
      }
      if (block.length <= 16) {
        std::size_t len = 0;
        to_size(block.length, len);
        out.append(len, static_cast<char>(block.letter));
      } else {
        out += static_cast<char>(block.letter);
        out += '^';
        out += to_decimal(block.length);
      }
    }
    return out;
  }
};

/// The first slope [1/(2 n_1 + 1)] is an equivalence class of rationals;
/// the stored fraction is its canonical representative.
template <class Scalar = BigInt>
struct BracketSlope {
  Scalar numerator;
  Scalar denominator;

  friend bool operator==(const BracketSlope&, const BracketSlope&) = default;
};

template <class Scalar = BigInt>
using SlopeValue = std::variant<BracketSlope<Scalar>, Scalar>;

template <class Scalar>
std::string slope_string(const SlopeValue<Scalar>& slope) {
  if (const auto* bracket = std::get_if<BracketSlope<Scalar>>(&slope)) {
    return to_decimal(bracket->numerator) + "/" + to_decimal(bracket->denominator);
  }
  return to_decimal(std::get<Scalar>(slope));
}

template <class Scalar = BigInt>
struct TableRow {
  Matrix2<Scalar> product; // A_t A_{t-1} ... A_{-n_1}
  SlopeValue<Scalar> slope;
  TorusKnot<Scalar> knot;
};

template <class Scalar = BigInt>
struct TorusTunnelTable {
  Scalar p;
  Scalar q;
  bool mirrored = false;
  ContinuedFraction<Scalar> cf;
  LetterSequence<Scalar> letters;
  std::vector<TableRow<Scalar>> rows; // t = 0 ... N
  BinaryWord word;                    // s_2 ... s_N
  std::size_t depth = 1;

  /// N, the index of the last row.
  std::size_t last_index() const { return rows.size() - 1; }
  std::size_t cabling_count() const { return rows.size(); }
};

enum class ShortcutConvention { literal, offset };

inline const char* to_string(ShortcutConvention c) {
  return c == ShortcutConvention::literal ? "literal" : "offset";
}

namespace detail {

template <class Scalar>
Scalar abs_value(const Scalar& x) {
  if (x < 0) {
    return Scalar(-x);
  }
  return x;
}

template <class Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Scalar r = a % b;
    a = b;
    b = r;
  }
  return a;
}

template <class Scalar>
Matrix2<Scalar> letter_matrix(Letter letter) {
  Matrix2<Scalar> m;
  if (letter == Letter::U) {
    m << Scalar(1), Scalar(1), Scalar(0), Scalar(1);
  } else {
    m << Scalar(1), Scalar(0), Scalar(1), Scalar(1);
  }
  return m;
}

template <class Scalar>
void require_valid(const ContinuedFraction<Scalar>& cf) {
  if (cf.terms.empty()) {
    throw OutOfRange("continued fraction has no terms");
  }
  for (const auto& t : cf.terms) {
    if (t < 1) {
      throw OutOfRange("continued fraction terms must be positive");
    }
  }
  if (cf.size() >= 2 && cf.terms.back() < 2) {
    throw OutOfRange("last continued fraction term must be at least 2");
  }
}

template <class Scalar>
void require_two_terms(const ContinuedFraction<Scalar>& cf) {
  require_valid(cf);
  if (cf.size() < 2) {
    throw OutOfRange("p/q is an integer; the continued fraction needs at least two terms");
  }
}

// N = n_2 + ... + n_k - 2 as a row index.
template <class Scalar>
std::size_t last_row_index(const ContinuedFraction<Scalar>& cf) {
  Scalar total(0);
  for (std::size_t j = 1; j < cf.size(); ++j) {
    total += cf[j];
  }
  Scalar n = total - 2;
  std::size_t out = 0;
  if (!to_size(n, out) || out >= kMaxTableRows) {
    throw OutOfRange("middle tunnel needs " + to_decimal(Scalar(n + 1)) +
                     " cablings, more than can be tabulated");
  }
  return out;
}

// Letters A_0 ... A_{N+1}; the negative-index letters are all L.
template <class Scalar>
std::vector<Letter> nonnegative_letters(const ContinuedFraction<Scalar>& cf) {
  const std::size_t count = last_row_index(cf) + 2;
  std::vector<Letter> out;
  out.reserve(count);
  Letter letter = Letter::U;
  for (std::size_t j = 1; j < cf.size(); ++j) {
    std::size_t len = 0;
    to_size(cf[j], len);
    out.insert(out.end(), len, letter);
    letter = letter == Letter::U ? Letter::L : Letter::U;
  }
  return out;
}

} // namespace detail

/// Positive Euclidean expansion of p/q, with a trailing 1 folded into
/// the previous term.
template <class Scalar>
ContinuedFraction<Scalar> cf_expand(const Scalar& p, const Scalar& q) {
  if (q < 2 || p <= q) {
    throw OutOfRange("continued fraction needs p > q >= 2, got (" + to_decimal(p) + ", " +
                     to_decimal(q) + ")");
  }
  if (detail::gcd_value(p, q) != 1) {
    throw NotCoprime("(" + to_decimal(p) + ", " + to_decimal(q) + ") are not coprime");
  }
  ContinuedFraction<Scalar> cf;
  Scalar num = p;
  Scalar den = q;
  while (den != 0) {
    Scalar quotient = num / den;
    Scalar rem = num - quotient * den;
    cf.terms.push_back(quotient);
    num = den;
    den = rem;
  }
  if (cf.size() >= 2 && cf.terms.back() == 1) {
    cf.terms.pop_back();
    cf.terms.back() += 1;
  }
  return cf;
}

template <class Scalar>
Ratio<Scalar> cf_eval(const ContinuedFraction<Scalar>& cf) {
  detail::require_valid(cf);
  // Folded from the right: [n_j, x] = n_j + 1/x.
  Scalar num = cf.terms.back();
  Scalar den(1);
  for (std::size_t j = cf.size() - 1; j-- > 0;) {
    Scalar next = cf[j] * num + den;
    den = num;
    num = next;
  }
  return {num, den};
}

/// Uses K(p,q) = K(q,p) and that K(p,-q) is the mirror of K(p,q).
template <class Scalar>
NormalizedTorus<Scalar> normalize_torus_params(const Scalar& p, const Scalar& q) {
  Scalar ap = detail::abs_value(p);
  Scalar aq = detail::abs_value(q);
  if (ap <= 1 || aq <= 1) {
    throw TrivialKnot("(" + to_decimal(p) + ", " + to_decimal(q) + ") torus knot is trivial");
  }
  if (detail::gcd_value(ap, aq) != 1) {
    throw NotCoprime("(" + to_decimal(p) + ", " + to_decimal(q) + ") are not coprime");
  }
  const bool mirrored = (p < 0) != (q < 0);
  if (ap < aq) {
    return {aq, ap, mirrored};
  }
  return {ap, aq, mirrored};
}

template <class Scalar>
LetterSequence<Scalar> letter_sequence(const ContinuedFraction<Scalar>& cf) {
  detail::require_two_terms(cf);
  LetterSequence<Scalar> seq;
  seq.blocks.push_back({Letter::L, Scalar(-cf[0]), cf[0]});
  Scalar index(0);
  Letter letter = Letter::U;
  for (std::size_t j = 1; j < cf.size(); ++j) {
    seq.blocks.push_back({letter, index, cf[j]});
    index += cf[j];
    letter = letter == Letter::U ? Letter::L : Letter::U;
  }
  return seq;
}

/// s_t = 1 exactly when A_t != A_{t-1}, for 2 <= t <= N.
template <class Scalar>
BinaryWord middle_tunnel_word(const ContinuedFraction<Scalar>& cf) {
  detail::require_two_terms(cf);
  const std::size_t last = detail::last_row_index(cf);
  const std::vector<Letter> letters = detail::nonnegative_letters(cf);
  BinaryWord word;
  for (std::size_t t = 2; t <= last; ++t) {
    word.push_back(letters[t] != letters[t - 1]);
  }
  return word;
}

/// Full table for p > q >= 2 coprime.
template <class Scalar>
TorusTunnelTable<Scalar> invariant_table(const Scalar& p, const Scalar& q) {
  TorusTunnelTable<Scalar> table;
  table.p = p;
  table.q = q;
  table.cf = cf_expand(p, q);
  table.letters = letter_sequence(table.cf);
  const std::size_t last = detail::last_row_index(table.cf);
  const std::vector<Letter> letters = detail::nonnegative_letters(table.cf);

  // A_{-1} ... A_{-n_1} = L^{n_1}.
  Matrix2<Scalar> product;
  product << Scalar(1), Scalar(0), table.cf[0], Scalar(1);

  table.rows.reserve(last + 1);
  for (std::size_t t = 0; t <= last; ++t) {
    product = (detail::letter_matrix<Scalar>(letters[t]) * product).eval();
    const Scalar& a = product(0, 0);
    const Scalar& b = product(0, 1);
    const Scalar& c = product(1, 0);
    const Scalar& d = product(1, 1);
    SlopeValue<Scalar> slope;
    if (t == 0) {
      slope = BracketSlope<Scalar>{Scalar(1), Scalar(2 * table.cf[0] + 1)};
    } else {
      slope = Scalar(a * d + b * c);
    }
    table.rows.push_back({product, std::move(slope), TorusKnot<Scalar>{Scalar(a + c), Scalar(b + d)}});
  }
  for (std::size_t t = 2; t <= last; ++t) {
    table.word.push_back(letters[t] != letters[t - 1]);
  }
  table.depth = depth_of_word(table.word);
  return table;
}

/// Table for normalized parameters; a mirror negates every slope.
template <class Scalar>
TorusTunnelTable<Scalar> invariant_table(const NormalizedTorus<Scalar>& params) {
  TorusTunnelTable<Scalar> table = invariant_table(params.p, params.q);
  table.mirrored = params.mirrored;
  if (params.mirrored) {
    for (auto& row : table.rows) {
      if (auto* bracket = std::get_if<BracketSlope<Scalar>>(&row.slope)) {
        bracket->numerator = -bracket->numerator;
      } else {
        Scalar& value = std::get<Scalar>(row.slope);
        value = -value;
      }
    }
  }
  return table;
}

/// Depth of the middle tunnel via its binary invariants.
template <class Scalar>
std::size_t torus_depth(const Scalar& p, const Scalar& q) {
  return depth_of_word(middle_tunnel_word(cf_expand(p, q)));
}

/// 1 + the number of blocks in a run of terms, where a block is a term
/// != 1 or a 1 together with its successor. The literal convention reads
/// n_2 ... n_k, the offset one n_3 ... n_k. Diagnostic only.
template <class Scalar>
std::size_t torus_depth_shortcut(const ContinuedFraction<Scalar>& cf, ShortcutConvention convention) {
  detail::require_two_terms(cf);
  std::size_t i = convention == ShortcutConvention::literal ? 1 : 2;
  std::size_t blocks = 0;
  while (i < cf.size()) {
    i += (cf[i] == 1 && i + 1 < cf.size()) ? 2 : 1;
    ++blocks;
  }
  return 1 + blocks;
}

template <class Scalar = BigInt>
struct BridgeCrossCheck {
  bool regular = false;      // false: nothing to check
  SeedPair<Scalar> seed{};   // bridge numbers at rows m-2, m-1
  Scalar value{};            // F_tau(seed)
  bool passed = true;        // value == q
};

/// Feeds the bridge numbers of the intermediate knots at rows m-2 and
/// m-1 into the Fibonacci function of the derived word; the result must
/// be q, the bridge number of the knot.
template <class Scalar>
BridgeCrossCheck<Scalar> bridge_cross_check(const TorusTunnelTable<Scalar>& table) {
  BridgeCrossCheck<Scalar> check;
  if (!table.word.has_one()) {
    return check;
  }
  check.regular = true;
  const std::size_t m = semisimple_count(table.word);
  check.seed = {table.rows[m - 2].knot.bridge_number(), table.rows[m - 1].knot.bridge_number()};
  check.value = fibonacci_value(table.word, check.seed);
  check.passed = check.value == table.q;
  return check;
}

template <class Scalar>
bool all_unimodular(const TorusTunnelTable<Scalar>& table) {
  for (const auto& row : table.rows) {
    const auto& m = row.product;
    if (Scalar(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) != 1) {
      return false;
    }
  }
  return true;
}

} // namespace tunnel_atlas
