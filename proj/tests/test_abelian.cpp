#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "copnum/abelian.hpp"
#include "oracles.hpp"

using namespace copnum;

namespace {

std::vector<AbelianGroup> groups_up_to(std::int64_t n_max) {
  std::vector<AbelianGroup> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (n == 1) {
      out.push_back(AbelianGroup::product({1}));
      continue;
    }
    for (const auto& f : oracle::factorizations(n)) out.push_back(AbelianGroup::product(f));
  }
  return out;
}

std::uint64_t iterated_order(const AbelianGroup& g, Element e) {
  Element x = e;
  std::uint64_t d = 1;
  while (x != g.zero()) {
    x = g.add(x, e);
    ++d;
  }
  return d;
}

}  // namespace

TEST(Group, ConstructionOrders) {
  EXPECT_EQ(AbelianGroup::product({1}).order(), 1u);
  EXPECT_EQ(AbelianGroup::product({5, 5}).order(), 25u);
  EXPECT_EQ(AbelianGroup::product({4, 2}).order(), 8u);
}

TEST(Group, RejectsBadFactorsAndLimit) {
  try {
    AbelianGroup::product({3, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_argument);
  }
  try {
    AbelianGroup::product({-2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_argument);
  }
  try {
    AbelianGroup::product({1000, 1001});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::resource_limit);
  }
  EXPECT_NO_THROW(AbelianGroup::product({10, 10}, 100));
  EXPECT_THROW(AbelianGroup::product({10, 11}, 100), Error);
}

TEST(Group, EnumerationIsLexicographicAndComplete) {
  const auto g = AbelianGroup::product({3, 4});
  const auto els = g.elements();
  ASSERT_EQ(els.size(), 12u);
  std::set<Coords> seen;
  Coords prev;
  for (Element e : els) {
    const auto c = g.coords(e);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_LT(c[0], 3);
    EXPECT_LT(c[1], 4);
    if (!prev.empty()) {
      EXPECT_LT(prev, c);
    }
    prev = c;
    seen.insert(c);
    EXPECT_EQ(g.element(c), e);
  }
  EXPECT_EQ(seen.size(), 12u);
  EXPECT_EQ(g.coords(g.zero()), (Coords{0, 0}));
  EXPECT_EQ(g.to_string(g.element({2, 3})), "(2,3)");
}

TEST(Group, ArithmeticIsComponentwise) {
  const auto g = AbelianGroup::product({5, 5});
  EXPECT_EQ(g.add(g.element({3, 4}), g.element({4, 2})), g.element({2, 1}));
  EXPECT_EQ(g.neg(g.element({1, 1})), g.element({4, 4}));
  EXPECT_EQ(g.sub(g.element({0, 0}), g.element({1, 3})), g.element({4, 2}));
  EXPECT_EQ(g.times(7, g.element({1, 2})), g.element({2, 4}));
}

TEST(GroupProperty, AxiomsExhaustiveUpTo100) {
  for (const auto& g : groups_up_to(100)) {
    const auto n = static_cast<std::uint32_t>(g.order());
    for (std::uint32_t a = 0; a < n; ++a) {
      const Element x{a};
      ASSERT_EQ(g.add(x, g.zero()), x);
      ASSERT_EQ(g.add(x, g.neg(x)), g.zero());
      for (std::uint32_t b = 0; b < n; ++b) {
        const Element y{b};
        ASSERT_EQ(g.add(x, y), g.add(y, x));
        ASSERT_EQ(g.sub(g.add(x, y), y), x);
      }
    }
    // associativity on all triples is n³; exhaustive below 40, strided above
    const std::uint32_t step = n <= 40 ? 1 : 7;
    for (std::uint32_t a = 0; a < n; a += step)
      for (std::uint32_t b = 0; b < n; b += step)
        for (std::uint32_t c = 0; c < n; c += step) {
          const Element x{a}, y{b}, z{c};
          ASSERT_EQ(g.add(g.add(x, y), z), g.add(x, g.add(y, z)));
        }
  }
}

TEST(Group, ElementOrderExamples) {
  const auto g55 = AbelianGroup::product({5, 5});
  EXPECT_EQ(element_order(g55, g55.zero()), 1u);
  EXPECT_EQ(element_order(g55, g55.element({1, 1})), 5u);
  const auto g42 = AbelianGroup::product({4, 2});
  EXPECT_EQ(element_order(g42, g42.element({2, 1})), 2u);
}

TEST(GroupProperty, ElementOrderMatchesIterationAndDividesOrder) {
  for (const auto& g : groups_up_to(60))
    for (Element e : g.elements()) {
      const auto d = element_order(g, e);
      ASSERT_EQ(d, iterated_order(g, e));
      ASSERT_EQ(g.order() % d, 0u);
      ASSERT_EQ(cyclic_subgroup(g, e).size(), d);
    }
}

TEST(Group, CyclicSubgroupExamples) {
  const auto z4 = AbelianGroup::product({4});
  EXPECT_EQ(cyclic_subgroup(z4, z4.zero()), (std::vector<Element>{z4.zero()}));
  EXPECT_EQ(cyclic_subgroup(z4, z4.element({2})), (std::vector<Element>{Element{0}, Element{2}}));
  const auto g = AbelianGroup::product({5, 5});
  EXPECT_EQ(cyclic_subgroup(g, g.element({1, 3})).size(), 5u);
}

TEST(Quotient, Examples) {
  const auto z4 = AbelianGroup::product({4});
  const auto q4 = quotient_by_cyclic(z4, z4.element({2}));
  EXPECT_EQ(q4.target().order(), 2u);
  EXPECT_EQ(q4(z4.element({1})), q4(z4.element({3})));

  const auto g = AbelianGroup::product({5, 5});
  const auto q = quotient_by_cyclic(g, g.element({0, 1}));
  EXPECT_EQ(q.target().order(), 5u);
  for (Element x : g.elements())
    for (Element y : g.elements())
      EXPECT_EQ(q(x) == q(y), g.coords(x)[0] == g.coords(y)[0]);

  const auto z6 = AbelianGroup::product({6});
  EXPECT_EQ(quotient_by_cyclic(z6, z6.element({2})).target().order(), 2u);
}

TEST(Quotient, RejectsZero) {
  const auto g = AbelianGroup::product({6});
  try {
    quotient_by_cyclic(g, g.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_k);
  }
}

TEST(QuotientProperty, HomomorphismKernelAndOrderExhaustiveUpTo100) {
  for (const auto& g : groups_up_to(100)) {
    for (Element k : g.elements()) {
      if (k == g.zero()) continue;
      const auto q = quotient_by_cyclic(g, k);
      const auto& h = q.target();
      ASSERT_EQ(h.order() * element_order(g, k), g.order());
      ASSERT_LE(h.order() * 2, g.order());
      ASSERT_EQ(q(k), h.zero());
      const auto sub = cyclic_subgroup(g, k);
      std::vector<char> in_sub(g.order(), 0);
      for (Element e : sub) in_sub[e.index] = 1;
      // all pairs for small groups, a fixed stride for the larger ones
      const std::uint32_t step = g.order() <= 48 ? 1 : 5;
      for (std::uint32_t a = 0; a < g.order(); a += step)
        for (std::uint32_t b = 0; b < g.order(); b += step) {
          const Element x{a}, y{b};
          ASSERT_EQ(q(g.add(x, y)), h.add(q(x), q(y)));
          ASSERT_EQ(q(x) == q(y), in_sub[g.sub(x, y).index] != 0);
        }
      // canonical representative: smallest coset member, and it projects back
      for (Element y : h.elements()) {
        const Element r = q.representative(y);
        ASSERT_EQ(q(r), y);
        for (Element s : sub) ASSERT_LE(r.index, g.add(r, s).index);
      }
    }
  }
}

TEST(QuotientProperty, QuotientOfQuotient) {
  const auto g = AbelianGroup::product({4, 6});
  const auto q1 = quotient_by_cyclic(g, g.element({2, 0}));
  const auto& h = q1.target();
  const auto q2 = quotient_by_cyclic(h, q1(g.element({0, 2})));
  EXPECT_EQ(q2.target().order(), 24u / 2u / 3u);
  for (Element x : h.elements())
    for (Element y : h.elements()) EXPECT_EQ(q2(h.add(x, y)), q2.target().add(q2(x), q2(y)));
}

TEST(Generating, Examples) {
  const auto z4 = AbelianGroup::product({4});
  EXPECT_FALSE(is_generating(z4, std::vector<Element>{z4.element({2})}));
  const auto z7 = AbelianGroup::product({7});
  EXPECT_TRUE(is_generating(z7, std::vector<Element>{z7.element({1})}));
  const auto g = AbelianGroup::product({5, 5});
  std::vector<Element> s1;
  for (std::int64_t x = 0; x < 5; ++x) s1.push_back(g.element({x, (x * x * x) % 5}));
  EXPECT_TRUE(is_generating(g, s1));
}

TEST(GeneratingProperty, MatchesSubsetClosureOracle) {
  std::mt19937_64 rng(11);
  for (const auto& g : groups_up_to(30)) {
    if (g.order() < 2) continue;
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Element> s;
      const auto size = 1 + rng() % 3;
      for (std::size_t i = 0; i < size; ++i) s.push_back(Element{static_cast<std::uint32_t>(rng() % g.order())});
      // closure oracle: grow the set of all sums until stable
      std::set<std::uint32_t> span{0};
      bool grew = true;
      while (grew) {
        grew = false;
        for (auto x : std::vector<std::uint32_t>(span.begin(), span.end()))
          for (Element e : s) grew |= span.insert(g.add(Element{x}, e).index).second;
      }
      ASSERT_EQ(is_generating(g, s), span.size() == g.order());
    }
  }
}

TEST(Group, SmallestPrimeFactor) {
  EXPECT_EQ(smallest_prime_factor(1), 1u);
  EXPECT_EQ(smallest_prime_factor(2), 2u);
  EXPECT_EQ(smallest_prime_factor(49), 7u);
  EXPECT_EQ(smallest_prime_factor(25), 5u);
  EXPECT_EQ(smallest_prime_factor(97), 97u);
  EXPECT_EQ(smallest_prime_factor(36), 2u);
}
