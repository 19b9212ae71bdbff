#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tunnel_atlas {

/// Binary cabling invariants s_2 ... s_N of a tunnel. The empty word
/// stands for any tunnel produced by at most two cablings.
class BinaryWord {
public:
  BinaryWord() = default;

  /// Throws ParseError if any entry is not 0 or 1.
  explicit BinaryWord(std::vector<std::uint8_t> bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

  auto begin() const noexcept { return bits_.begin(); }
  auto end() const noexcept { return bits_.end(); }

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }

  /// Number of cablings n = size + 2.
  std::size_t cabling_count() const noexcept { return bits_.size() + 2; }

  bool has_one() const noexcept;

  std::string str() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

enum class Step : char { D = 'D', L = 'L', R = 'R' };

/// D/L/R description of a principal path. Always starts "DR" and never
/// contains "DD", "LR" or "RL".
class StepSequence {
public:
  /// Throws ParseError when the sequence breaks the grammar.
  explicit StepSequence(std::vector<Step> steps);

  std::size_t size() const noexcept { return steps_.size(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  auto begin() const noexcept { return steps_.begin(); }
  auto end() const noexcept { return steps_.end(); }

  std::string str() const;

  friend bool operator==(const StepSequence&, const StepSequence&) = default;

private:
  std::vector<Step> steps_;
};

struct CablingProfile {
  std::size_t cabling_count = 2;    // n
  std::size_t semisimple_count = 2; // m
  std::size_t depth = 1;            // d
  bool regular = false;

  /// The simple tunnel: one cabling, not representable as a word.
  static constexpr CablingProfile simple() { return {1, 1, 1, false}; }

  friend bool operator==(const CablingProfile&, const CablingProfile&) = default;
};

/// The trivial (primitive) tunnel has depth 0 and no word.
inline constexpr std::size_t kPrimitiveDepth = 0;

BinaryWord parse_binary(std::string_view text);
StepSequence parse_steps(std::string_view text);

StepSequence binary_to_steps(const BinaryWord& word);
BinaryWord steps_to_binary(const StepSequence& steps);

/// 1 + sum of ceil(|O_i| / 2) over the maximal blocks of ones.
std::size_t depth_of_word(const BinaryWord& word);

/// Number of D steps.
std::size_t depth_of_steps(const StepSequence& steps);

/// m = leading zeros + 2; equals n for an all-zero word.
std::size_t semisimple_count(const BinaryWord& word);

CablingProfile profile(const BinaryWord& word);

/// Input accepted by the CLI: either encoding of a principal path.
enum class Encoding { binary, steps };

/// Picks the encoding from the first character. Throws ParseError on an
/// empty string or a character outside both alphabets.
Encoding detect_encoding(std::string_view text);

} // namespace tunnel_atlas
