#include "tunnel_atlas/cabling.hpp"
#include "tunnel_atlas/errors.hpp"
#include "tunnel_atlas/oracle.hpp"

#include <doctest.h>

#include <optional>
#include <string>

using namespace tunnel_atlas;

namespace {

std::size_t error_position(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

} // namespace

TEST_CASE("parse_binary") {
  CHECK(parse_binary("0011100011100").size() == 13);
  CHECK(parse_binary("").empty());
  CHECK(error_position([] { parse_binary("012"); }) == 3);
  CHECK(error_position([] { parse_binary("x"); }) == 1);
}

TEST_CASE("parse_steps") {
  CHECK(parse_steps("DRRRDRDLLLDLDRR").size() == 15);
  CHECK(parse_steps("DR").size() == 2);
  CHECK(error_position([] { parse_steps("DRL"); }) == 3);
  CHECK(error_position([] { parse_steps("DRRDD"); }) == 5);
  CHECK(error_position([] { parse_steps("DRDLR"); }) == 5);
  CHECK(error_position([] { parse_steps("RD"); }) == 1);
  CHECK(error_position([] { parse_steps("DL"); }) == 2);
  CHECK(error_position([] { parse_steps("D"); }) == 2);
  CHECK(error_position([] { parse_steps(""); }) == 1);
  CHECK(error_position([] { parse_steps("DRx"); }) == 3);
}

TEST_CASE("encodings of the example principal path") {
  const auto word = parse_binary("0011100011100");
  const auto steps = parse_steps("DRRRDRDLLLDLDRR");
  CHECK(binary_to_steps(word) == steps);
  CHECK(steps_to_binary(steps) == word);
  CHECK(binary_to_steps(parse_binary("")).str() == "DR");
  CHECK(binary_to_steps(parse_binary("1")).str() == "DRD");
  CHECK(steps_to_binary(parse_steps("DR")).str().empty());
  CHECK(steps_to_binary(parse_steps("DRD")).str() == "1");
}

TEST_CASE("turns after a descent depend on the step before it") {
  // after "LD": 0 -> R, 1 -> L; after "RD": 0 -> L, 1 -> R
  CHECK(binary_to_steps(parse_binary("10")).str() == "DRDL");
  CHECK(binary_to_steps(parse_binary("11")).str() == "DRDR");
  CHECK(binary_to_steps(parse_binary("1010")).str() == "DRDLDR");
  CHECK(binary_to_steps(parse_binary("1011")).str() == "DRDLDL");
}

TEST_CASE("depth_of_word") {
  CHECK(depth_of_word(parse_binary("0011100011100")) == 5);
  CHECK(depth_of_word(parse_binary("")) == 1);
  CHECK(depth_of_word(parse_binary("10101")) == 4);
  CHECK(depth_of_word(parse_binary("111")) == 3);
  CHECK(depth_of_word(parse_binary("0000")) == 1);
  CHECK(depth_of_word(parse_binary("1111")) == 3);
}

TEST_CASE("depth_of_steps") {
  CHECK(depth_of_steps(parse_steps("DRRRDRDLLLDLDRR")) == 5);
  CHECK(depth_of_steps(parse_steps("DR")) == 1);
  CHECK(depth_of_steps(parse_steps("DRD")) == 2);
}

TEST_CASE("semisimple_count and profile") {
  CHECK(semisimple_count(parse_binary("0011100011100")) == 4);
  CHECK(semisimple_count(parse_binary("")) == 2);
  CHECK(semisimple_count(parse_binary("111")) == 2);

  CHECK(profile(parse_binary("0011100011100")) == CablingProfile{15, 4, 5, true});
  CHECK(profile(parse_binary("")) == CablingProfile{2, 2, 1, false});
  CHECK(profile(parse_binary("1")) == CablingProfile{3, 2, 2, true});
  CHECK(CablingProfile::simple().cabling_count == 1);
  CHECK(kPrimitiveDepth == 0);
}

TEST_CASE("detect_encoding") {
  CHECK(detect_encoding("0101") == Encoding::binary);
  CHECK(detect_encoding("DRR") == Encoding::steps);
  CHECK(error_position([] { detect_encoding(""); }) == 1);
  CHECK(error_position([] { detect_encoding("x1"); }) == 1);
}

TEST_CASE("exhaustive properties of the two encodings up to length 16") {
  for (std::size_t len = 0; len <= 16; ++len) {
    for (const BinaryWord& w : WordRange(len)) {
      const StepSequence s = binary_to_steps(w);
      REQUIRE(s.size() == w.size() + 2);
      REQUIRE(steps_to_binary(s) == w);
      // StepSequence's constructor rejects DD, LR and RL, so re-parsing
      // the text checks grammar closure.
      REQUIRE(parse_steps(s.str()) == s);
      const std::size_t d = depth_of_word(w);
      REQUIRE(d == depth_of_steps(s));

      BinaryWord longer = w;
      longer.push_back(true);
      const std::size_t d1 = depth_of_word(longer);
      REQUIRE(d1 >= d);
      REQUIRE(d1 <= d + 1);

      const bool all_zero = !w.has_one();
      REQUIRE((semisimple_count(w) == w.size() + 2) == all_zero);
      REQUIRE((d == 1) == all_zero);
    }
  }
}

TEST_CASE("every valid step sequence maps back to itself") {
  // Enumerate D/L/R strings directly and keep the grammatical ones.
  const char alphabet[] = {'D', 'L', 'R'};
  std::size_t valid = 0;
  for (std::size_t len = 2; len <= 10; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) {
      total *= 3;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::string text(len, 'D');
      std::size_t c = code;
      for (std::size_t i = 0; i < len; ++i) {
        text[i] = alphabet[c % 3];
        c /= 3;
      }
      std::optional<StepSequence> parsed;
      try {
        parsed.emplace(parse_steps(text));
      } catch (const ParseError&) {
        continue;
      }
      ++valid;
      REQUIRE(binary_to_steps(steps_to_binary(*parsed)) == *parsed);
    }
  }
  // Every binary word of length len - 2 has exactly one step sequence.
  CHECK(valid == (std::size_t{1} << 9) - 1);
}
