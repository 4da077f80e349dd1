#pragma once

// Sidon-type generating sets over (Z/p)^2 whose Cayley graphs need
// ⌈p/2⌉ cops (cubic curve, undirected) and p cops (parabola, directed), plus
// a path attachment that pads the directed graph to any vertex count.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "copnum/abelian.hpp"
#include "copnum/cayley.hpp"
#include "copnum/error.hpp"

namespace copnum {

enum class SidonKind { undirected_cubic, directed_quadratic };

inline const char* sidon_kind_name(SidonKind k) {
  return k == SidonKind::undirected_cubic ? "undirected_cubic" : "directed_quadratic";
}

inline bool is_prime(std::uint64_t p) { return p >= 2 && smallest_prime_factor(p) == p; }

inline std::int64_t curve_exponent(SidonKind k) { return k == SidonKind::undirected_cubic ? 3 : 2; }

inline std::int64_t pow_mod(std::int64_t x, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r = (r * x) % p;
  return r;
}

inline void require_construction_prime(std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (p <= 3) throw Error(Errc::p_too_small, "the construction needs p > 3");
}

/// {(x, x^e) : x in Z/p} before zero stripping, in x order.
inline std::vector<Coords> sidon_points(std::int64_t p, SidonKind kind) {
  std::vector<Coords> out;
  for (std::int64_t x = 0; x < p; ++x) out.push_back({x, pow_mod(x, curve_exponent(kind), p)});
  return out;
}

inline GameInstance build_sidon(std::int64_t p, SidonKind kind) {
  require_construction_prime(p);
  const auto g = AbelianGroup::product({p, p});
  std::vector<Element> s;
  for (const auto& pt : sidon_points(p, kind)) s.push_back(g.element(pt));
  auto t = s;
  return GameInstance::build(g, std::move(s), std::move(t), kind == SidonKind::directed_quadratic);
}

/// Robber moves (x, x^e), x in Z/p, that a cop at difference (a, b) from the
/// robber can punish: solutions of a³ - 3a²x + 3ax² = b (cubic) or
/// a² - 2ax = b (quadratic).
inline std::int64_t guard_count(std::int64_t p, SidonKind kind, std::int64_t a, std::int64_t b) {
  a = ((a % p) + p) % p;
  b = ((b % p) + p) % p;
  if (a == 0 && b == 0) throw Error(Errc::zero_difference, "the cop is on the robber");
  auto mul = [p](std::int64_t u, std::int64_t v) { return (u % p) * (v % p) % p; };
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t lhs;
    if (kind == SidonKind::undirected_cubic)
      lhs = mul(mul(a, a), a) - mul(3, mul(mul(a, a), x)) + mul(3, mul(a, mul(x, x)));
    else
      lhs = mul(a, a) - mul(2, mul(a, x));
    lhs = ((lhs % p) + p) % p;
    if (lhs == b) ++count;
  }
  return count;
}

struct GuardBoundRow {
  std::int64_t p = 0;
  std::int64_t max_undirected = 0;
  std::int64_t max_directed = 0;
  std::int64_t lower_bound_undirected = 0;  // ⌈p/2⌉
  std::int64_t lower_bound_directed = 0;    // p
};

struct GuardBoundReport {
  std::vector<GuardBoundRow> rows;
  bool pass = true;
};

/// Exhaustive check of the guard counts over every prime 5 <= p <= p_max and
/// every nonzero difference.
inline GuardBoundReport verify_guard_bounds(std::int64_t p_max) {
  if (p_max < 5) throw Error(Errc::invalid_argument, "p_max must be >= 5");
  GuardBoundReport rep;
  for (std::int64_t p = 5; p <= p_max; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    GuardBoundRow row{p, 0, 0, (p + 1) / 2, p};
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        row.max_undirected = std::max(row.max_undirected, guard_count(p, SidonKind::undirected_cubic, a, b));
        row.max_directed = std::max(row.max_directed, guard_count(p, SidonKind::directed_quadratic, a, b));
      }
    if (row.max_undirected != 2 || row.max_directed != 1) rep.pass = false;
    rep.rows.push_back(row);
  }
  return rep;
}

/// Largest prime p with p² <= n, or 0 if none exceeds 3.
inline std::int64_t largest_prime_square_at_most(std::int64_t n) {
  std::int64_t p = 1;
  while ((p + 1) * (p + 1) <= n) ++p;
  for (; p > 3; --p)
    if (is_prime(static_cast<std::uint64_t>(p))) return p;
  return 0;
}

/// The directed parabola graph on p² vertices with a two-way path of n - p²
/// extra vertices hanging off (0,0). Vertices 0..p²-1 are group elements in
/// index order; path vertices follow in path order.
inline GeneralGraph meyniel_extremal(std::int64_t n, std::int64_t p) {
  require_construction_prime(p);
  if (n < p * p) throw Error(Errc::size_mismatch, "n = " + std::to_string(n) + " is smaller than p² = " +
                                                       std::to_string(p * p));
  auto out = GeneralGraph::from_instance(build_sidon(p, SidonKind::directed_quadratic));
  out.vertices = static_cast<std::uint32_t>(n);
  std::uint32_t prev = 0;  // (0,0)
  for (auto v = static_cast<std::uint32_t>(p * p); v < static_cast<std::uint32_t>(n); ++v) {
    out.arcs.emplace_back(prev, v);
    out.arcs.emplace_back(v, prev);
    out.labels.push_back("path" + std::to_string(v - p * p));
    prev = v;
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  if (!out.strongly_connected()) throw Error(Errc::invalid_argument, "attachment is not strongly connected");
  return out;
}

}  // namespace copnum
