#include "oracles.hpp"

#include "tunnel_atlas/bridge.hpp"
#include "tunnel_atlas/errors.hpp"
#include "tunnel_atlas/torus.hpp"

#include <doctest.h>

#include <numeric>
#include <string>
#include <vector>

using namespace tunnel_atlas;

namespace {

ContinuedFraction<> cf_of(std::initializer_list<long> xs) {
  ContinuedFraction<> cf;
  for (long x : xs) {
    cf.terms.emplace_back(x);
  }
  return cf;
}

std::string knot_str(const TorusKnot<>& k) { return to_decimal(k.p) + "," + to_decimal(k.q); }

/// Checks every row against the machine-integer oracle.
void check_against_oracle(long p, long q) {
  const auto table = invariant_table(BigInt(p), BigInt(q));
  const auto expected = oracle::torus_rows(p, q);
  REQUIRE(table.cf.size() == expected.cf.size());
  for (std::size_t i = 0; i < expected.cf.size(); ++i) {
    REQUIRE(table.cf[i] == expected.cf[i]);
  }
  REQUIRE(table.rows.size() == expected.rows.size());
  for (std::size_t t = 0; t < expected.rows.size(); ++t) {
    const auto& row = table.rows[t];
    const auto& want = expected.rows[t];
    REQUIRE(row.product(0, 0) == want.product[0]);
    REQUIRE(row.product(0, 1) == want.product[1]);
    REQUIRE(row.product(1, 0) == want.product[2]);
    REQUIRE(row.product(1, 1) == want.product[3]);
    if (t > 0) {
      REQUIRE(std::get<BigInt>(row.slope) == want.slope);
    }
    REQUIRE(row.knot.p == want.knot.first);
    REQUIRE(row.knot.q == want.knot.second);
  }
  REQUIRE(table.word.str() == expected.word);
}

} // namespace

TEST_CASE("cf_expand and cf_eval") {
  CHECK(cf_expand(BigInt(41), BigInt(29)) == cf_of({1, 2, 2, 2, 2}));
  CHECK(cf_expand(BigInt(12), BigInt(5)) == cf_of({2, 2, 2}));
  CHECK(cf_expand(BigInt(7), BigInt(2)) == cf_of({3, 2}));
  CHECK(cf_expand(BigInt(13), BigInt(8)) == cf_of({1, 1, 1, 1, 2}));
  CHECK(cf_expand(BigInt(5), BigInt(3)) == cf_of({1, 1, 2}));
  CHECK(cf_eval(cf_of({1, 2, 2, 2, 2})) == Ratio<>{BigInt(41), BigInt(29)});
  CHECK(cf_eval(cf_of({3, 2})) == Ratio<>{BigInt(7), BigInt(2)});
  CHECK_THROWS_AS(cf_eval(cf_of({2, 1, 1})), OutOfRange);

  for (long p = 3; p <= 150; ++p) {
    for (long q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1) {
        continue;
      }
      const auto cf = cf_expand(BigInt(p), BigInt(q));
      REQUIRE(cf.size() >= 2);
      REQUIRE(cf.terms.back() >= 2);
      REQUIRE(cf_eval(cf) == Ratio<>{BigInt(p), BigInt(q)});
    }
  }

  CHECK_THROWS_AS(cf_expand(BigInt(6), BigInt(4)), NotCoprime);
  CHECK_THROWS_AS(cf_expand(BigInt(5), BigInt(1)), OutOfRange);
  CHECK_THROWS_AS(cf_expand(BigInt(3), BigInt(5)), OutOfRange);
}

TEST_CASE("normalize_torus_params") {
  auto n = normalize_torus_params(BigInt(29), BigInt(41));
  CHECK(n.p == 41);
  CHECK(n.q == 29);
  CHECK_FALSE(n.mirrored);
  n = normalize_torus_params(BigInt(41), BigInt(-29));
  CHECK(n.p == 41);
  CHECK(n.q == 29);
  CHECK(n.mirrored);
  n = normalize_torus_params(BigInt(-41), BigInt(-29));
  CHECK_FALSE(n.mirrored);
  CHECK_THROWS_AS(normalize_torus_params(BigInt(5), BigInt(1)), TrivialKnot);
  CHECK_THROWS_AS(normalize_torus_params(BigInt(0), BigInt(3)), TrivialKnot);
  CHECK_THROWS_AS(normalize_torus_params(BigInt(6), BigInt(-4)), NotCoprime);
}

TEST_CASE("letter sequences") {
  const auto seq = letter_sequence(cf_of({1, 2, 2, 2, 2}));
  CHECK(seq.str() == "L|UU|LL|UU|LL");
  CHECK(seq.first_index() == -1);
  CHECK(seq.last_index() == 7);
  CHECK(seq.at(BigInt(-1)) == Letter::L);
  CHECK(seq.at(BigInt(0)) == Letter::U);
  CHECK(seq.at(BigInt(2)) == Letter::L);
  CHECK_THROWS_AS(seq.at(BigInt(8)), OutOfRange);
  CHECK(letter_sequence(cf_of({3, 20})).str() == "LLL|U^20");
}

TEST_CASE("(41, 29) table") {
  const auto table = invariant_table(BigInt(41), BigInt(29));
  CHECK(table.cf == cf_of({1, 2, 2, 2, 2}));
  CHECK(table.word.str() == "10101");
  CHECK(table.depth == 4);
  CHECK(table.rows.back().knot == TorusKnot<>{BigInt(41), BigInt(29)});
  CHECK(table.last_index() == 6);
  CHECK(table.cabling_count() == 7);
  CHECK(torus_depth(BigInt(41), BigInt(29)) == 4);
  check_against_oracle(41, 29);
}

TEST_CASE("(12, 5) table") {
  const auto table = invariant_table(BigInt(12), BigInt(5));
  REQUIRE(table.rows.size() == 3);
  std::vector<std::string> slopes, knots;
  for (const auto& row : table.rows) {
    slopes.push_back(slope_string<BigInt>(row.slope));
    knots.push_back(knot_str(row.knot));
  }
  CHECK(slopes == std::vector<std::string>{"1/5", "9", "29"});
  CHECK(knots == std::vector<std::string>{"5,2", "7,3", "12,5"});
  CHECK(table.word.str() == "1");
  const auto check = bridge_cross_check(table);
  CHECK(check.regular);
  CHECK(check.seed == SeedPair<>{BigInt(2), BigInt(3)});
  CHECK(check.value == 5);
  CHECK(check.passed);
  check_against_oracle(12, 5);
}

TEST_CASE("mirrored table negates slopes only") {
  const auto plain = invariant_table(normalize_torus_params(BigInt(12), BigInt(5)));
  const auto mirror = invariant_table(normalize_torus_params(BigInt(-12), BigInt(5)));
  CHECK(mirror.mirrored);
  CHECK(mirror.word == plain.word);
  CHECK(slope_string<BigInt>(mirror.rows[0].slope) == "-1/5");
  CHECK(slope_string<BigInt>(mirror.rows[1].slope) == "-9");
  CHECK(mirror.rows[2].knot == plain.rows[2].knot);
}

TEST_CASE("single-row tables") {
  for (long n1 = 1; n1 <= 20; ++n1) {
    const auto table = invariant_table(BigInt(2 * n1 + 1), BigInt(2));
    REQUIRE(table.rows.size() == 1);
    CHECK(table.word.empty());
    CHECK(table.depth == 1);
    CHECK(slope_string<BigInt>(table.rows[0].slope) == "1/" + std::to_string(2 * n1 + 1));
    CHECK_FALSE(bridge_cross_check(table).regular);
  }
}

TEST_CASE("depth shortcut conventions") {
  const auto cf = cf_of({1, 2, 2, 2, 2});
  CHECK(torus_depth_shortcut(cf, ShortcutConvention::literal) == 5);
  CHECK(torus_depth_shortcut(cf, ShortcutConvention::offset) == 4);
  CHECK(torus_depth_shortcut(cf_of({1, 2}), ShortcutConvention::offset) == 1);
  CHECK(std::string(to_string(ShortcutConvention::literal)) == "literal");
}

TEST_CASE("sweep p <= 500") {
  std::size_t regular = 0;
  for (long p = 3; p <= 500; ++p) {
    for (long q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1) {
        continue;
      }
      const auto table = invariant_table(BigInt(p), BigInt(q));
      REQUIRE(all_unimodular(table));
      REQUIRE(table.rows.back().knot == TorusKnot<>{BigInt(p), BigInt(q)});
      REQUIRE(table.rows.front().knot == TorusKnot<>{BigInt(2 * table.cf[0] + 1), BigInt(2)});
      for (std::size_t t = 2; t < table.rows.size(); ++t) {
        REQUIRE(table.rows[t - 1].knot.q < table.rows[t].knot.q);
      }
      for (std::size_t t = 1; t < table.rows.size(); ++t) {
        REQUIRE(std::get<BigInt>(table.rows[t].slope) % 2 != 0);
      }
      const auto check = bridge_cross_check(table);
      REQUIRE(check.passed);
      regular += check.regular;
    }
  }
  CHECK(regular == 70993);
}

TEST_CASE("machine-integer oracle on a sample") {
  for (long p = 3; p <= 120; ++p) {
    for (long q = 2; q < p; ++q) {
      if (std::gcd(p, q) == 1) {
        check_against_oracle(p, q);
      }
    }
  }
}

TEST_CASE("cheapest-descent family [1, 2, ..., 2]") {
  for (long d = 1; d <= 8; ++d) {
    ContinuedFraction<> cf;
    cf.terms.emplace_back(1);
    for (long i = 0; i < d; ++i) {
      cf.terms.emplace_back(2);
    }
    const auto r = cf_eval(cf);
    CHECK(torus_depth(r.numerator, r.denominator) == static_cast<std::size_t>(d));
    CHECK(r.denominator == torus_min_bridge(d));
  }
}

TEST_CASE("fastest-growth family [2, 1, ..., 1]") {
  for (long ones = 2; ones <= 20; ++ones) {
    // [2, 1, ..., 1] folded by hand: x <- 1 + 1/x, then 2 + 1/x.
    BigInt num = 1, den = 1;
    for (long i = 1; i < ones; ++i) {
      BigInt next = num + den;
      den = num;
      num = next;
    }
    const BigInt p = 2 * num + den;
    const BigInt q = num;
    const auto table = invariant_table(p, q);
    CHECK(table.cf.terms.front() == 2);
    const auto n = static_cast<long>(table.cabling_count());
    CHECK(table.rows.back().knot.bridge_number() == fibonacci_number(n + 2));
    CHECK(table.rows.back().knot.bridge_number() == max_bridge_overall(n));
  }
}

TEST_CASE("machine-integer instantiation") {
  const auto table = invariant_table<std::int64_t>(41, 29);
  CHECK(table.word.str() == "10101");
  CHECK(table.rows.back().knot.p == 41);
  CHECK(bridge_cross_check(table).passed);
}
