#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "zkfabric/syntax.hpp"

using namespace zkfabric;
using namespace zkfabric::syntax;

namespace {

TruthTable table_from_index(std::size_t n, std::uint64_t index) {
  TruthTable t;
  t.n_vars = n;
  for (std::uint64_t a = 0; a < (1ull << n); ++a) t.outputs.push_back(((index >> a) & 1u) != 0);
  return t;
}

void expect_equivalent(const TruthTable& t, const MinimizedExpr& m) {
  auto e = m.to_expr();
  for (std::uint64_t a = 0; a < t.outputs.size(); ++a) {
    ASSERT_EQ(m.evaluate(a), t[a]) << t.to_string() << " row " << a;
    ASSERT_EQ(e.evaluate(a, t.n_vars), t[a]) << t.to_string() << " row " << a;
  }
}

}  // namespace

TEST(Implicant, PatternRoundTrip) {
  auto i = Implicant::from_string("-01");
  EXPECT_EQ(i.to_string(3), "-01");
  EXPECT_EQ(i.literal_count(), 2u);
  EXPECT_TRUE(i.covers(0b001));
  EXPECT_TRUE(i.covers(0b101));
  EXPECT_FALSE(i.covers(0b011));
}

TEST(Minimize, Car) {
  auto m = minimize(TruthTable::from_string("11101111"));
  EXPECT_EQ(m.to_string(), "--0 + -0- + 1--");
  EXPECT_EQ(m.literal_count(), 3u);
  EXPECT_EQ(m.to_literal_string(), "~v2 + ~v1 + v0");
}

TEST(Minimize, Constants) {
  auto zero = minimize(TruthTable::from_string("0000"));
  EXPECT_TRUE(zero.implicants.empty());
  EXPECT_EQ(zero.to_string(), "0");
  EXPECT_EQ(zero.to_expr(), Expr::constant(false));

  auto one = minimize(TruthTable::from_string("1111"));
  ASSERT_EQ(one.implicants.size(), 1u);
  EXPECT_EQ(one.to_string(), "--");
  EXPECT_EQ(one.to_expr(), Expr::constant(true));
}

TEST(Minimize, ParityNeedsEveryMinterm) {
  auto m = minimize(TruthTable::from_string("01101001"));
  EXPECT_EQ(m.implicants.size(), 4u);
  EXPECT_EQ(m.literal_count(), 12u);
}

TEST(Minimize, CyclicCoverUsesPetrick) {
  // Rows 0,1,2,5,6,7 of three variables: no essential primes, two minimal
  // covers of three implicants each.
  auto m = minimize(TruthTable::from_string("11100111"));
  EXPECT_EQ(m.implicants.size(), 3u);
  EXPECT_EQ(m.literal_count(), 6u);
}

TEST(Minimize, AllTwoVariableFunctionsHitExhaustiveMinimum) {
  for (std::uint64_t f = 0; f < 16; ++f) {
    auto t = table_from_index(2, f);
    auto m = minimize(t);
    expect_equivalent(t, m);
    EXPECT_EQ(m.implicants.size(), zkfabric::testing::brute_force_min_cover(t)) << t.to_string();
  }
}

TEST(Minimize, AllThreeVariableFunctions) {
  for (std::uint64_t f = 0; f < 256; ++f) {
    auto t = table_from_index(3, f);
    auto m = minimize(t);
    expect_equivalent(t, m);
    EXPECT_EQ(m.implicants.size(), zkfabric::testing::brute_force_min_cover(t)) << t.to_string();
  }
}

TEST(Minimize, RandomWiderTables) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto t = zkfabric::testing::random_table(rng, 4 + trial % 3);
    expect_equivalent(t, minimize(t));
  }
}

TEST(Minimize, ImplicantsSortedAndPrime) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto t = zkfabric::testing::random_table(rng, 4);
    auto m = minimize(t);
    for (std::size_t i = 1; i < m.implicants.size(); ++i) {
      EXPECT_LT(m.implicants[i - 1].to_string(4), m.implicants[i].to_string(4));
    }
    // Prime: dropping any literal makes the term cover a false row.
    for (const auto& imp : m.implicants) {
      for (std::size_t bit = 0; bit < 4; ++bit) {
        if (!(imp.care & (1u << bit))) continue;
        Implicant wider{static_cast<std::uint8_t>(imp.care & ~(1u << bit)),
                        static_cast<std::uint8_t>(imp.value & ~(1u << bit))};
        bool covers_false = false;
        for (std::uint64_t a = 0; a < 16; ++a) covers_false |= wider.covers(a) && !t[a];
        EXPECT_TRUE(covers_false) << imp.to_string(4);
      }
    }
  }
}

TEST(Minimize, Deterministic) {
  std::mt19937_64 rng(23);
  auto t = zkfabric::testing::random_table(rng, 5);
  EXPECT_EQ(minimize(t).to_string(), minimize(t).to_string());
}
