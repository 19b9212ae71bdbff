#pragma once

// Brute-force certification of the extremal bridge-number formulas:
// exact arithmetic in Z[sqrt 2] for the closed forms, and exhaustive
// enumeration of binary words for the minimum and maximum bridge formulas.

#include "tunnel_atlas/bigint.hpp"
#include "tunnel_atlas/bridge.hpp"
#include "tunnel_atlas/cabling.hpp"

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace tunnel_atlas {

/// x + y sqrt(2).
template <class Scalar = BigInt>
struct QuadraticInteger {
  Scalar x{0};
  Scalar y{0};

  friend QuadraticInteger operator+(const QuadraticInteger& a, const QuadraticInteger& b) {
    return {Scalar(a.x + b.x), Scalar(a.y + b.y)};
  }

  friend QuadraticInteger operator*(const QuadraticInteger& a, const QuadraticInteger& b) {
    return {Scalar(a.x * b.x + 2 * a.y * b.y), Scalar(a.x * b.y + a.y * b.x)};
  }

  /// x - y sqrt(2).
  QuadraticInteger conjugate() const { return {x, Scalar(-y)}; }

  QuadraticInteger pow(unsigned long exponent) const {
    QuadraticInteger result{Scalar(1), Scalar(0)};
    QuadraticInteger base = *this;
    while (exponent > 0) {
      if (exponent & 1UL) {
        result = result * base;
      }
      base = base * base;
      exponent >>= 1;
    }
    return result;
  }

  friend bool operator==(const QuadraticInteger&, const QuadraticInteger&) = default;
};

/// (1 + sqrt 2)^d / sqrt 2 - (1 - sqrt 2)^d / sqrt 2 = 2 y_d where
/// (1 + sqrt 2)^d = x_d + y_d sqrt 2.
BigInt min_bridge_closed_form(long depth);

/// ((1 + sqrt 2)^(d+1) - (1 - sqrt 2)^(d+1)) / (2 sqrt 2) = y_{d+1}.
BigInt torus_min_bridge_closed_form(long depth);

/// True iff min_bridge(d) matches the closed form for every 1 <= d <= d_max.
bool closed_form_check(long d_max);

/// Same for torus_min_bridge, plus t_d = a_{d+1} / 2.
bool torus_closed_form_check(long d_max);

inline constexpr std::size_t kDefaultLengthCap = 20;

struct SearchConfig {
  std::size_t length_cap = kDefaultLengthCap;
  unsigned workers = 0; // 0: hardware concurrency
};

/// All 2^length words of one length in lexicographic order.
class WordRange {
public:
  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = BinaryWord;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::size_t length, std::uint64_t index) : length_(length), index_(index) {}

    BinaryWord operator*() const;
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

  private:
    std::size_t length_ = 0;
    std::uint64_t index_ = 0;
  };

  explicit WordRange(std::size_t length) : length_(length) {}

  iterator begin() const { return {length_, 0}; }
  iterator end() const { return {length_, count()}; }
  std::uint64_t count() const { return std::uint64_t{1} << length_; }
  std::size_t length() const { return length_; }

private:
  std::size_t length_;
};

/// The word of the given length whose bits spell index in binary, most
/// significant bit first.
BinaryWord word_at(std::size_t length, std::uint64_t index);

/// Throws SearchError if length exceeds the cap.
WordRange enumerate_words(std::size_t length, std::size_t cap = kDefaultLengthCap);

/// Which seed pairs a search evaluates each word at.
struct SeedPolicy {
  enum class Mode { fixed, admissible };

  Mode mode = Mode::fixed;
  SeedPair<BigInt> seed{BigInt(2), BigInt(2)};

  static SeedPolicy fixed(long a, long b) { return {Mode::fixed, {BigInt(a), BigInt(b)}}; }
  /// Every 2 <= a <= b <= a + 1 <= m + 1.
  static SeedPolicy admissible() { return {Mode::admissible, {BigInt(0), BigInt(0)}}; }

  std::string str() const;

  friend bool operator==(const SeedPolicy&, const SeedPolicy&) = default;
};

struct SearchWitness {
  BinaryWord word;
  std::optional<SeedPair<BigInt>> seed; // empty for an all-zero word

  friend bool operator==(const SearchWitness&, const SearchWitness&) = default;
};

enum class SearchKind { min_by_depth, max_by_cablings };

struct SearchReport {
  SearchKind kind = SearchKind::min_by_depth;
  long depth = 0;            // min search
  long cabling_count = 0;    // max search
  long semisimple_count = 0; // max search
  std::size_t horizon = 0;   // longest word examined
  SeedPolicy seeds;
  BigInt value;
  std::vector<SearchWitness> witnesses;
  std::uint64_t examined = 0;   // words enumerated
  std::uint64_t candidates = 0; // words satisfying the constraint

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Minimum of F_w over regular words w with 1 <= |w| <= max_length and
/// depth d. All words reaching the minimum are reported.
SearchReport min_bridge_search(std::size_t max_length, long depth, const SearchConfig& config = {},
                               const SeedPolicy& seeds = SeedPolicy::fixed(2, 2));

/// Maximum of F_w over words of length n - 2 with semisimple count m.
/// For m = n the word is all zeros and the answer is the top of the
/// semisimple range.
SearchReport max_bridge_search(long cabling_count, long semisimple_count,
                               const SearchConfig& config = {},
                               const SeedPolicy& seeds = SeedPolicy::admissible());

} // namespace tunnel_atlas
