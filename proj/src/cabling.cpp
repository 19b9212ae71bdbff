#include "tunnel_atlas/cabling.hpp"

#include "tunnel_atlas/errors.hpp"

#include <algorithm>

namespace tunnel_atlas {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw ParseError(i + 1, "binary invariant must be 0 or 1");
    }
  }
}

bool BinaryWord::has_one() const noexcept {
  return std::find(bits_.begin(), bits_.end(), 1) != bits_.end();
}

std::string BinaryWord::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto bit : bits_) {
    out.push_back(bit ? '1' : '0');
  }
  return out;
}

namespace {

bool forbidden_bigram(Step prev, Step cur) {
  return (prev == Step::D && cur == Step::D) || (prev == Step::L && cur == Step::R) ||
         (prev == Step::R && cur == Step::L);
}

char symbol(Step s) { return static_cast<char>(s); }

} // namespace

StepSequence::StepSequence(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step cur = steps_[i];
    if (cur != Step::D && cur != Step::L && cur != Step::R) {
      throw ParseError(i + 1, "step must be D, L or R");
    }
    if (i == 0 && cur != Step::D) {
      throw ParseError(1, "a principal path starts with D");
    }
    if (i == 1 && cur != Step::R) {
      throw ParseError(2, "the second step of a principal path is R");
    }
    if (i > 0 && forbidden_bigram(steps_[i - 1], cur)) {
      throw ParseError(i + 1, std::string("forbidden step pair \"") + symbol(steps_[i - 1]) +
                                  symbol(cur) + "\"");
    }
  }
  if (steps_.size() < 2) {
    throw ParseError(steps_.size() + 1, "a step sequence has at least two steps");
  }
}

std::string StepSequence::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (auto s : steps_) {
    out.push_back(symbol(s));
  }
  return out;
}

BinaryWord parse_binary(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ParseError(i + 1, std::string("unexpected character '") + text[i] +
                                  "' in binary word");
    }
    bits.push_back(text[i] == '1' ? 1 : 0);
  }
  return BinaryWord(std::move(bits));
}

StepSequence parse_steps(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
    case 'D': steps.push_back(Step::D); break;
    case 'L': steps.push_back(Step::L); break;
    case 'R': steps.push_back(Step::R); break;
    default:
      throw ParseError(i + 1, std::string("unexpected character '") + text[i] +
                                  "' in step sequence");
    }
  }
  return StepSequence(std::move(steps));
}

StepSequence binary_to_steps(const BinaryWord& word) {
  std::vector<Step> steps{Step::D, Step::R};
  steps.reserve(word.size() + 2);
  for (auto bit : word) {
    const Step prev = steps.back();
    Step next;
    if (prev == Step::D) {
      // The turn after a descent depends on the step that led into it.
      const Step before = steps[steps.size() - 2];
      if (before == Step::L) {
        next = bit ? Step::L : Step::R;
      } else {
        next = bit ? Step::R : Step::L;
      }
    } else {
      next = bit ? Step::D : prev;
    }
    steps.push_back(next);
  }
  return StepSequence(std::move(steps));
}

BinaryWord steps_to_binary(const StepSequence& steps) {
  std::vector<std::uint8_t> bits;
  bits.reserve(steps.size() - 2);
  for (std::size_t i = 2; i < steps.size(); ++i) {
    const Step prev = steps[i - 1];
    const Step cur = steps[i];
    if (prev == Step::D) {
      const Step before = steps[i - 2];
      const Step same = before == Step::L ? Step::L : Step::R;
      bits.push_back(cur == same ? 1 : 0);
    } else {
      bits.push_back(cur == Step::D ? 1 : 0);
    }
  }
  return BinaryWord(std::move(bits));
}

std::size_t depth_of_word(const BinaryWord& word) {
  std::size_t depth = 1;
  std::size_t run = 0;
  for (auto bit : word) {
    if (bit) {
      ++run;
    } else {
      depth += (run + 1) / 2;
      run = 0;
    }
  }
  return depth + (run + 1) / 2;
}

std::size_t depth_of_steps(const StepSequence& steps) {
  return static_cast<std::size_t>(std::count(steps.begin(), steps.end(), Step::D));
}

std::size_t semisimple_count(const BinaryWord& word) {
  const auto first_one = std::find(word.begin(), word.end(), 1);
  return static_cast<std::size_t>(first_one - word.begin()) + 2;
}

CablingProfile profile(const BinaryWord& word) {
  CablingProfile p;
  p.cabling_count = word.cabling_count();
  p.semisimple_count = semisimple_count(word);
  p.depth = depth_of_word(word);
  p.regular = p.depth >= 2;
  return p;
}

Encoding detect_encoding(std::string_view text) {
  if (text.empty()) {
    throw ParseError(1, "empty input");
  }
  switch (text.front()) {
  case '0':
  case '1': return Encoding::binary;
  case 'D':
  case 'L':
  case 'R': return Encoding::steps;
  default:
    throw ParseError(1, std::string("unexpected character '") + text.front() +
                            "'; expected a binary word or a D/L/R step sequence");
  }
}

} // namespace tunnel_atlas
