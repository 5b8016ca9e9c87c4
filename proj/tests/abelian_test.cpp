#include "zerosum/abelian.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace zerosum {
namespace {

// Independent oracle: all subgroups of g by testing closure of every subset.
// Exponential; only for |A| <= 16.
std::set<std::vector<elem_t>> subgroups_by_subset_bruteforce(const Group& g) {
  const int n = g.order();
  EXPECT_LE(n, 16);
  std::set<std::vector<elem_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // must contain zero (index 0)
    std::vector<elem_t> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(static_cast<elem_t>(i));
    if (is_subgroup(g, members)) out.insert(members);
  }
  return out;
}

TEST(GroupSpecParse, Grammar) {
  GroupSpec a = parse_group_spec("Z2");
  EXPECT_EQ(a.factors, std::vector<int>({2}));
  EXPECT_EQ(a.order, 2);

  GroupSpec b = parse_group_spec("Z2xZ4");
  EXPECT_EQ(b.factors, std::vector<int>({2, 4}));
  EXPECT_EQ(b.order, 8);
  EXPECT_EQ(b.to_string(), "Z2xZ4");

  EXPECT_THROW(parse_group_spec("Z1"), std::invalid_argument);
  EXPECT_THROW(parse_group_spec(""), std::invalid_argument);
  EXPECT_THROW(parse_group_spec("Z"), std::invalid_argument);
  EXPECT_THROW(parse_group_spec("Z2x"), std::invalid_argument);
  EXPECT_THROW(parse_group_spec("Z2yZ3"), std::invalid_argument);
  EXPECT_THROW(parse_group_spec("2xZ3"), std::invalid_argument);
  EXPECT_THROW(parse_group_spec("Z0xZ3"), std::invalid_argument);
}

TEST(GroupArith, ComponentWise) {
  auto g = make_group("Z2xZ4");
  GroupElem a{{1, 3}}, b{{1, 2}};
  EXPECT_EQ(add(*g, a, b), (GroupElem{{0, 1}}));

  auto z5 = make_group("Z5");
  EXPECT_EQ(neg(*z5, GroupElem{{2}}), (GroupElem{{3}}));
  EXPECT_EQ(zero(*z5), (GroupElem{{0}}));

  // a + neg(a) == zero for every element.
  for (elem_t i = 0; i < g->order(); ++i)
    EXPECT_EQ(g->add(i, g->neg(i)), g->zero());

  // Spec mismatch: element of the wrong shape is rejected.
  EXPECT_THROW(g->index_of(GroupElem{{1}}), std::invalid_argument);
  EXPECT_THROW(g->index_of(GroupElem{{1, 7}}), std::invalid_argument);
}

TEST(GroupArith, AxiomsRandomTriples) {
  std::mt19937_64 rng(20260810);
  for (const char* name : {"Z2", "Z7", "Z2xZ4", "Z3xZ3", "Z12"}) {
    auto g = make_group(name);
    const int n = g->order();
    for (int t = 0; t < 1000; ++t) {
      elem_t a = static_cast<elem_t>(uniform_below(rng, n));
      elem_t b = static_cast<elem_t>(uniform_below(rng, n));
      elem_t c = static_cast<elem_t>(uniform_below(rng, n));
      EXPECT_EQ(g->add(g->add(a, b), c), g->add(a, g->add(b, c)));
      EXPECT_EQ(g->add(a, b), g->add(b, a));
      EXPECT_EQ(g->add(a, g->zero()), a);
      EXPECT_EQ(g->add(a, g->neg(a)), g->zero());
    }
  }
}

TEST(GroupArith, ElementIndexCodecRoundTrip) {
  auto g = make_group("Z3xZ5");
  for (elem_t i = 0; i < g->order(); ++i)
    EXPECT_EQ(g->index_of(g->elem(i)), i);
  // Lexicographic element order, zero first.
  EXPECT_EQ(g->elem(0), (GroupElem{{0, 0}}));
  EXPECT_EQ(g->elem(1), (GroupElem{{0, 1}}));
  EXPECT_EQ(g->elem(5), (GroupElem{{1, 0}}));
}

TEST(Subgroups, EnumerateSmall) {
  auto z4 = make_group("Z4");
  auto subs = enumerate_subgroups(z4);
  ASSERT_EQ(subs.size(), 3u);  // {0}, {0,2}, Z4
  EXPECT_EQ(subs[0].size(), 1);
  EXPECT_EQ(subs[1].size(), 2);
  EXPECT_TRUE(subs[1].contains(z4->index_of(GroupElem{{2}})));
  EXPECT_EQ(subs[2].size(), 4);

  auto v4 = make_group("Z2xZ2");
  EXPECT_EQ(enumerate_subgroups(v4).size(), 5u);

  auto z7 = make_group("Z7");
  EXPECT_EQ(enumerate_subgroups(z7).size(), 2u);  // Lagrange: prime order
}

TEST(Subgroups, AgreesWithSubsetBruteforce) {
  for (const char* name : {"Z2", "Z4", "Z2xZ2", "Z6", "Z8", "Z2xZ4", "Z12", "Z2xZ2xZ2"}) {
    auto g = make_group(name);
    auto oracle = subgroups_by_subset_bruteforce(*g);
    auto got = enumerate_subgroups(g);
    std::set<std::vector<elem_t>> got_sets;
    for (const auto& s : got) got_sets.insert(s.members);
    EXPECT_EQ(got_sets, oracle) << name;
  }
}

TEST(Subgroups, LagrangeAndProperBound) {
  for (const char* name : {"Z6", "Z2xZ4", "Z12", "Z3xZ3"}) {
    auto g = make_group(name);
    for (const auto& s : enumerate_subgroups(g)) {
      EXPECT_EQ(g->order() % s.size(), 0) << name;
      if (!s.is_whole_group()) EXPECT_LE(s.size(), g->order() / 2) << name;
      EXPECT_TRUE(is_subgroup(*g, s.members));
    }
  }
}

TEST(Subgroups, Cyclic) {
  auto z4 = make_group("Z4");
  EXPECT_EQ(cyclic_subgroup(z4, z4->zero()).size(), 1);
  EXPECT_EQ(cyclic_subgroup(z4, z4->index_of(GroupElem{{2}})).size(), 2);

  auto g = make_group("Z2xZ3");
  // (1,1) generates the whole order-6 group: iterate until repeat.
  elem_t a = g->index_of(GroupElem{{1, 1}});
  std::set<elem_t> seen;
  elem_t x = a;
  while (!seen.count(x)) {
    seen.insert(x);
    x = g->add(x, a);
  }
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_EQ(cyclic_subgroup(g, a).size(), 6);
}

TEST(Quotients, Z4ModOrder2) {
  auto z4 = make_group("Z4");
  auto subs = enumerate_subgroups(z4);
  const Subgroup& b = subs[1];
  ASSERT_EQ(b.size(), 2);
  QuotientMap q = quotient(z4, b);
  EXPECT_EQ(q.num_cosets(), 2);
  EXPECT_EQ(q.quotient->order(), 2);
  // Coset partition: {0,2} and {1,3}.
  EXPECT_EQ(q.project(0), q.project(2));
  EXPECT_EQ(q.project(1), q.project(3));
  EXPECT_NE(q.project(0), q.project(1));
  // Canonical representatives are lex-minimal: 0 and 1.
  EXPECT_EQ(q.rep[q.project(0)], 0);
  EXPECT_EQ(q.rep[q.project(1)], 1);
}

TEST(Quotients, TrivialKernelIsIsomorphicCopy) {
  auto g = make_group("Z2xZ3");
  QuotientMap q = quotient(g, trivial_subgroup(g));
  EXPECT_EQ(q.num_cosets(), g->order());
  for (elem_t a = 0; a < g->order(); ++a)
    for (elem_t b = 0; b < g->order(); ++b)
      EXPECT_EQ(q.quotient->add(a, b), g->add(a, b));
}

TEST(Quotients, ProjectionIsHomomorphismExhaustive) {
  for (const char* name : {"Z4", "Z6", "Z2xZ4", "Z12", "Z2xZ2xZ4", "Z8xZ8"}) {
    auto g = make_group(name);
    ASSERT_LE(g->order(), 64);
    for (const auto& b : enumerate_subgroups(g)) {
      QuotientMap q = quotient(g, b);
      for (elem_t x = 0; x < g->order(); ++x)
        for (elem_t y = 0; y < g->order(); ++y)
          EXPECT_EQ(q.project(g->add(x, y)), q.quotient->add(q.project(x), q.project(y)));
    }
  }
}

TEST(Quotients, KernelMustBeClosed) {
  auto z4 = make_group("Z4");
  Subgroup bogus{z4, {0, 1}};  // {0,1} is not closed in Z4
  EXPECT_THROW(quotient(z4, bogus), std::invalid_argument);
}

TEST(Primes, SmallestDivisor) {
  EXPECT_EQ(smallest_prime_divisor(8), 2);
  EXPECT_EQ(smallest_prime_divisor(15), 3);
  EXPECT_EQ(smallest_prime_divisor(7), 7);
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(9));
}

TEST(Subgroups, EnumerationBudget) {
  auto g = make_group("Z1021");  // order 1021 > default bound 512
  EXPECT_THROW(enumerate_subgroups(g), BudgetError);
}

}  // namespace
}  // namespace zerosum
