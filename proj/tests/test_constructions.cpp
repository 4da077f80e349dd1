#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "copnum/constructions.hpp"

using namespace copnum;

namespace {

std::set<Coords> coords_of(const GameInstance& inst) {
  std::set<Coords> out;
  for (Element e : inst.cop_moves()) out.insert(inst.group().coords(e));
  return out;
}

Errc error_of(void (*f)()) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::invalid_argument;
}

const std::vector<std::int64_t> kPrimes{5, 7, 11, 13, 17, 19, 23, 29, 31};

}  // namespace

TEST(Sidon, P5Sets) {
  const auto s1 = build_sidon(5, SidonKind::undirected_cubic);
  EXPECT_EQ(coords_of(s1), (std::set<Coords>{{1, 1}, {2, 3}, {3, 2}, {4, 4}}));
  EXPECT_FALSE(s1.directed());
  const auto s2 = build_sidon(5, SidonKind::directed_quadratic);
  EXPECT_EQ(coords_of(s2), (std::set<Coords>{{1, 1}, {2, 4}, {3, 4}, {4, 1}}));
  EXPECT_TRUE(s2.directed());
  EXPECT_EQ(s1.robber_moves(), s1.cop_moves());
}

TEST(Sidon, Errors) {
  EXPECT_EQ(error_of(+[] { build_sidon(4, SidonKind::undirected_cubic); }), Errc::not_prime);
  EXPECT_EQ(error_of(+[] { build_sidon(9, SidonKind::directed_quadratic); }), Errc::not_prime);
  EXPECT_EQ(error_of(+[] { build_sidon(3, SidonKind::undirected_cubic); }), Errc::p_too_small);
  EXPECT_EQ(error_of(+[] { build_sidon(2, SidonKind::directed_quadratic); }), Errc::p_too_small);
}

TEST(SidonProperty, SymmetryGenerationAndSize) {
  for (std::int64_t p : kPrimes) {
    const auto s1 = build_sidon(p, SidonKind::undirected_cubic);
    const auto s2 = build_sidon(p, SidonKind::directed_quadratic);
    const auto& g = s1.group();
    ASSERT_EQ(s1.cop_moves().size(), static_cast<std::size_t>(p - 1));
    ASSERT_EQ(s2.cop_moves().size(), static_cast<std::size_t>(p - 1));
    for (Element e : s1.cop_moves()) ASSERT_TRUE(s1.in_s(g.neg(e)));
    ASSERT_TRUE(s2.directed());
    ASSERT_TRUE(is_generating(g, s1.cop_moves()));
    ASSERT_TRUE(is_generating(g, s2.cop_moves()));
  }
}

TEST(SidonProperty, DirectedDifferencesDistinct) {
  for (std::int64_t p : kPrimes) {
    const auto pts = sidon_points(p, SidonKind::directed_quadratic);
    std::set<Coords> diffs;
    for (const auto& u : pts)
      for (const auto& v : pts) {
        if (u == v) continue;
        const Coords d{((u[0] - v[0]) % p + p) % p, ((u[1] - v[1]) % p + p) % p};
        ASSERT_TRUE(diffs.insert(d).second) << "p=" << p;
      }
  }
}

TEST(Guards, Examples) {
  EXPECT_EQ(guard_count(5, SidonKind::undirected_cubic, 1, 1), 2);
  EXPECT_EQ(guard_count(5, SidonKind::directed_quadratic, 2, 1), 1);
  for (std::int64_t b = 1; b < 7; ++b) {
    EXPECT_EQ(guard_count(7, SidonKind::undirected_cubic, 0, b), 0);
    EXPECT_EQ(guard_count(7, SidonKind::directed_quadratic, 0, b), 0);
  }
  EXPECT_EQ(error_of(+[] { guard_count(5, SidonKind::undirected_cubic, 0, 0); }), Errc::zero_difference);
  EXPECT_EQ(error_of(+[] { guard_count(5, SidonKind::undirected_cubic, 5, 10); }), Errc::zero_difference);
}

TEST(GuardsProperty, CountMatchesGroupLevelOracle) {
  // a cop at robber + d punishes the move m when m - d is on the curve; the
  // cubic equation is written for d = (a, b), the quadratic one for d = (a, -b)
  for (std::int64_t p : {5, 7, 11}) {
    for (SidonKind kind : {SidonKind::undirected_cubic, SidonKind::directed_quadratic}) {
      const auto pts = sidon_points(p, kind);
      const std::set<Coords> curve(pts.begin(), pts.end());
      for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b) {
          if (a == 0 && b == 0) continue;
          const std::int64_t d2 = kind == SidonKind::undirected_cubic ? b : p - b;
          std::int64_t count = 0;
          for (const auto& m : pts)
            if (curve.count(Coords{((m[0] - a) % p + p) % p, ((m[1] - d2) % p + p) % p})) ++count;
          ASSERT_EQ(guard_count(p, kind, a, b), count) << p << " " << sidon_kind_name(kind) << " " << a << "," << b;
        }
    }
  }
}

TEST(Guards, VerifyUpTo31) {
  const auto rep = verify_guard_bounds(31);
  EXPECT_TRUE(rep.pass);
  ASSERT_EQ(rep.rows.size(), kPrimes.size());
  for (const auto& row : rep.rows) {
    EXPECT_EQ(row.max_undirected, 2);
    EXPECT_EQ(row.max_directed, 1);
    EXPECT_EQ(row.lower_bound_undirected, (row.p + 1) / 2);
    EXPECT_EQ(row.lower_bound_directed, row.p);
  }
  EXPECT_EQ(rep.rows.front().lower_bound_undirected, 3);
  EXPECT_EQ(rep.rows.front().lower_bound_directed, 5);
  EXPECT_THROW(verify_guard_bounds(4), Error);
}

TEST(Meyniel, Examples) {
  const auto bare = meyniel_extremal(25, 5);
  EXPECT_EQ(bare.vertices, 25u);
  EXPECT_TRUE(bare.strongly_connected());

  const auto g30 = meyniel_extremal(30, 5);
  EXPECT_EQ(g30.vertices, 30u);
  EXPECT_TRUE(g30.strongly_connected());
  EXPECT_TRUE(g30.has_arc(0, 25));
  EXPECT_TRUE(g30.has_arc(25, 0));
  for (std::uint32_t v = 25; v + 1 < 30; ++v) {
    EXPECT_TRUE(g30.has_arc(v, v + 1));
    EXPECT_TRUE(g30.has_arc(v + 1, v));
  }
  // the first p² vertices induce the directed construction exactly
  std::vector<std::pair<std::uint32_t, std::uint32_t>> induced;
  for (auto a : g30.arcs)
    if (a.first < 25 && a.second < 25) induced.push_back(a);
  EXPECT_EQ(induced, bare.arcs);
  EXPECT_EQ(bare.arcs, GeneralGraph::from_instance(build_sidon(5, SidonKind::directed_quadratic)).arcs);

  EXPECT_EQ(error_of(+[] { meyniel_extremal(20, 5); }), Errc::size_mismatch);
  EXPECT_EQ(error_of(+[] { meyniel_extremal(100, 6); }), Errc::not_prime);
}

TEST(Meyniel, JsonRoundTrip) {
  const auto g = meyniel_extremal(33, 5);
  const auto back = GeneralGraph::from_json(g.to_json());
  EXPECT_EQ(back.vertices, g.vertices);
  EXPECT_EQ(back.arcs, g.arcs);
}

TEST(Primes, LargestPrimeSquare) {
  EXPECT_EQ(largest_prime_square_at_most(25), 5);
  EXPECT_EQ(largest_prime_square_at_most(48), 5);
  EXPECT_EQ(largest_prime_square_at_most(49), 7);
  EXPECT_EQ(largest_prime_square_at_most(200), 13);
  EXPECT_EQ(largest_prime_square_at_most(24), 0);
  for (std::int64_t n = 25; n <= 2000; n += 7) {
    const auto p = largest_prime_square_at_most(n);
    ASSERT_TRUE(is_prime(static_cast<std::uint64_t>(p)));
    ASSERT_LE(p * p, n);
    for (std::int64_t q = p + 1; q * q <= n; ++q) ASSERT_FALSE(is_prime(static_cast<std::uint64_t>(q)));
  }
}
