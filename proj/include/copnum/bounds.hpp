#pragma once

// Closed-form bound machinery: guard-count functions h, the recursive cop
// budget g*, the constants (c, d) behind the headline bounds, and numerical
// sweeps that check the recursion conditions on a finite grid.
//
// All logarithms are natural; g* only uses a ratio of logs, so the base
// cancels.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "copnum/abelian.hpp"
#include "copnum/error.hpp"

namespace copnum::bounds {

enum class Variant { undirected, directed };

/// How g* treats the directed small case t <= c·sqrt(n). `corrected` uses t+1,
/// matching the one-move-at-a-time recursion; `printed` uses ⌈(t+1)/2⌉.
enum class SmallCase { corrected, printed };

inline constexpr double kTolerance = 1e-9;

inline const char* variant_name(Variant v) { return v == Variant::undirected ? "undirected" : "directed"; }

struct Constants {
  double c = 0;
  double d = 0;
  double additive = 0;
};

/// Constants for the bucket of the smallest prime factor p of |G|:
/// p = 2, p = 3, or p >= 5 (anything larger collapses into the last bucket).
inline Constants theorem_constants(Variant v, std::uint64_t p) {
  const double e = std::exp(1.0);
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  if (v == Variant::undirected) {
    if (p <= 2) return {std::sqrt(2.0 / (r2 * e - e)), 1.0 / std::sqrt(r2 * e - e), 2.5};
    if (p == 3) return {std::sqrt(2.0 / ((r3 - 1.0) * e)), std::sqrt(3.0 / (2.0 * (r3 - 1.0) * e)), 2.5};
    return {std::sqrt(2.0 / e), std::sqrt(2.0 / e), 2.5};
  }
  if (p <= 2) return {1.0 / std::sqrt((r2 - 1.0) * e), std::sqrt(2.0 / ((r2 - 1.0) * e)), 2.0};
  if (p == 3) return {1.0 / std::sqrt((r3 - 1.0) * e), std::sqrt(3.0 / ((r3 - 1.0) * e)), 2.0};
  return {1.0 / std::sqrt(e), 2.0 / std::sqrt(e), 2.0};
}

/// Bucket representative used for constraint checks: 2, 3 or 5.
inline std::uint64_t prime_bucket(std::uint64_t p) { return p <= 2 ? 2 : (p == 3 ? 3 : 5); }

/// Slack in the two defining inequalities; both must be >= 0.
///   undirected: d >= 1/(ce) + c/2  and  c/2 >= d/sqrt(p)
///   directed:   d >= 1/(ce) + c    and  c   >= d/sqrt(p)
struct ConstraintSlack {
  double recursion = 0;
  double quotient = 0;
};

inline ConstraintSlack constraint_slack(Variant v, double c, double d, std::uint64_t p) {
  const double e = std::exp(1.0);
  const double sp = std::sqrt(static_cast<double>(prime_bucket(p)));
  if (v == Variant::undirected) return {d - (1.0 / (c * e) + c / 2.0), c / 2.0 - d / sp};
  return {d - (1.0 / (c * e) + c), c - d / sp};
}

/// Smallest feasible d found by a grid search over c, or nullopt if the grid
/// has no feasible point.
inline std::optional<double> grid_min_d(Variant v, std::uint64_t p, double step = 1e-4, double c_max = 5.0) {
  const double e = std::exp(1.0);
  const double sp = std::sqrt(static_cast<double>(prime_bucket(p)));
  std::optional<double> best;
  for (double c = step; c <= c_max; c += step) {
    const double d = v == Variant::undirected ? 1.0 / (c * e) + c / 2.0 : 1.0 / (c * e) + c;
    const double cap = v == Variant::undirected ? c * sp / 2.0 : c * sp;
    if (d <= cap && (!best || d < *best)) best = d;
  }
  return best;
}

inline void require_regime(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::out_of_regime, what);
}

/// Guaranteed number of robber moves a single difference element accounts for.
inline double h_value(std::int64_t n, std::int64_t s, std::int64_t t, Variant v, double c) {
  require_regime(n >= 3 && s < n - 1 && s >= t, "h is defined for n >= 3, t <= s < n-1");
  require_regime(v == Variant::undirected ? t >= 2 : t >= 1, "t is below the non-boundary range");
  const double threshold = c * std::sqrt(static_cast<double>(n));
  if (static_cast<double>(t) <= threshold) return v == Variant::undirected ? 2.0 : 1.0;
  return static_cast<double>(t) * static_cast<double>(s) / static_cast<double>(n - 1);
}

inline double pairing_bound(std::int64_t t) { return std::ceil((static_cast<double>(t) + 1.0) / 2.0); }

/// Cops needed by the one-move-at-a-time or pairing recursion on t moves.
inline double linear_bound(Variant v, std::int64_t t) {
  return v == Variant::undirected ? pairing_bound(t) : static_cast<double>(t) + 1.0;
}

inline double g_star(std::int64_t n, std::int64_t s, std::int64_t t, Variant v, double c,
                     SmallCase small = SmallCase::corrected) {
  if (n < 1 || t < 0 || t > s || s > n) throw Error(Errc::invalid_argument, "g* needs n >= 1, 0 <= t <= s <= n");
  if (s >= n - 1) return 1.0;
  const double root = std::sqrt(static_cast<double>(n));
  if (static_cast<double>(t) <= c * root) {
    if (v == Variant::directed && small == SmallCase::corrected) return static_cast<double>(t) + 1.0;
    return pairing_bound(t);
  }
  const double log_term = std::log(static_cast<double>(t) / (c * root)) /
                          std::log(static_cast<double>(n - 1) / static_cast<double>(n - s - 1));
  return v == Variant::undirected ? log_term + c * root / 2.0 + 2.5 : log_term + c * root + 2.0;
}

struct IterationCount {
  std::int64_t i = 0;
  std::vector<double> z_recursive;  // z_0..z_i from the recursion
  std::vector<double> z_closed;     // t - t·((n-s-1)/(n-1))^j
  bool closed_form_consistent = true;
};

/// Rounds of best-element accounting until at most c·sqrt(n) moves remain.
inline IterationCount iteration_count(std::int64_t n, std::int64_t s, std::int64_t t, double c) {
  const double threshold = c * std::sqrt(static_cast<double>(n));
  require_regime(s < n - 1 && n >= 3, "iteration count needs s < n-1");
  require_regime(static_cast<double>(t) > threshold, "iteration count needs t > c·sqrt(n)");
  const double ratio = static_cast<double>(n - s - 1) / static_cast<double>(n - 1);
  const double share = static_cast<double>(s) / static_cast<double>(n - 1);
  IterationCount out;
  double z = 0, remaining = static_cast<double>(t);
  out.z_recursive.push_back(0);
  out.z_closed.push_back(0);
  while (remaining > threshold) {
    ++out.i;
    z = z + share * (static_cast<double>(t) - z);
    remaining = static_cast<double>(t) * std::pow(ratio, static_cast<double>(out.i));
    out.z_recursive.push_back(z);
    out.z_closed.push_back(static_cast<double>(t) - remaining);
    if (std::abs(out.z_recursive.back() - out.z_closed.back()) > 1e-9 * static_cast<double>(t))
      out.closed_form_consistent = false;
  }
  return out;
}

struct BoundReport {
  std::int64_t n = 0, s = 0, t = 0;
  Variant variant = Variant::undirected;
  std::uint64_t smallest_prime_factor = 1;
  double c = 0, d = 0, additive = 0;
  std::optional<double> h;
  double g_star = 0;
  std::optional<double> printed_small_case;  // directed only
  std::optional<std::int64_t> iterations;
  double headline_bound = 0;
  bool within_headline = true;
};

/// Evaluates everything for one (n, s, t). Constants come from the bucket of
/// `bucket_prime` (2 gives the general theorem).
inline BoundReport make_report(std::int64_t n, std::int64_t s, std::int64_t t, Variant v,
                               std::uint64_t bucket_prime = 2) {
  BoundReport r;
  r.n = n;
  r.s = s;
  r.t = t;
  r.variant = v;
  r.smallest_prime_factor = smallest_prime_factor(static_cast<std::uint64_t>(n));
  const auto k = theorem_constants(v, bucket_prime);
  r.c = k.c;
  r.d = k.d;
  r.additive = k.additive;
  try {
    r.h = h_value(n, s, t, v, k.c);
  } catch (const Error&) {
  }
  r.g_star = g_star(n, s, t, v, k.c);
  if (v == Variant::directed) r.printed_small_case = g_star(n, s, t, v, k.c, SmallCase::printed);
  try {
    r.iterations = iteration_count(n, s, t, k.c).i;
  } catch (const Error&) {
  }
  r.headline_bound = k.d * std::sqrt(static_cast<double>(n)) + k.additive;
  r.within_headline = r.g_star <= r.headline_bound + kTolerance;
  return r;
}

struct Counterexample {
  std::string condition;
  std::int64_t n = 0, s = 0, t = 0;
  double lhs = 0, rhs = 0;
};

struct SweepReport {
  Variant variant = Variant::undirected;
  SmallCase small_case = SmallCase::corrected;
  std::int64_t n_max = 0;
  std::uint64_t checks_bound = 0, checks_quotient = 0, checks_shrink = 0;
  std::uint64_t failures_bound = 0, failures_quotient = 0, failures_shrink = 0;
  std::optional<Counterexample> first_failure;
  double min_bound_margin = 1e300;

  bool pass() const { return failures_bound == 0 && failures_quotient == 0 && failures_shrink == 0; }
};

/// Numerical replacement for the calculus behind the bounds. For every
/// 3 <= n <= n_max and 1 <= t <= s <= n-2, with the p = 2 constants:
///  (a) g*(n,s,t) <= d·sqrt(n) + additive;
///  (b) g*(n,s,t) >= min(g*(n',s',t'), linear_bound(t')) for all n' <= n/2,
///      s' <= min(s, n'-1), t' <= min(t, s') — the quotient game is covered
///      either by its own budget or by the pairing/one-move recursion;
///  (c) g*(n,s,t) >= g*(n,s,t')+1 for t' = t - ⌈h⌉, the largest residual
///      moveset after one guard (g* is nondecreasing in t, so it is binding).
inline SweepReport verify_constant_inequalities(Variant v, std::int64_t n_max,
                                                SmallCase small = SmallCase::corrected) {
  if (n_max < 3) throw Error(Errc::invalid_argument, "n_max must be >= 3");
  const auto k = theorem_constants(v, 2);
  SweepReport rep;
  rep.variant = v;
  rep.small_case = small;
  rep.n_max = n_max;
  auto fail = [&](const char* cond, std::int64_t n, std::int64_t s, std::int64_t t, double lhs, double rhs) {
    if (!rep.first_failure) rep.first_failure = Counterexample{cond, n, s, t, lhs, rhs};
  };

  // q[s][t] = max over n' <= m, s' <= min(s, n'-1), t' <= min(t, s') of
  // min(g*(n',s',t'), linear_bound(t')). Grown as m = floor(n/2) increases.
  const auto dim = static_cast<std::size_t>(n_max + 1);
  std::vector<double> q(dim * dim, 0.0);
  std::int64_t m_done = 0;
  auto absorb = [&](std::int64_t np) {
    // a[s'][t] = max_{t' <= min(t, s')} F(np, s', t'), then prefix max over s'.
    const auto w = static_cast<std::size_t>(np);
    std::vector<double> p(w * w, 0.0);
    for (std::int64_t sp = 0; sp < np; ++sp) {
      double run = 0;
      for (std::int64_t tp = 0; tp < np; ++tp) {
        if (tp <= sp) run = std::max(run, std::min(g_star(np, sp, tp, v, k.c, small), linear_bound(v, tp)));
        double val = run;
        if (sp > 0) val = std::max(val, p[static_cast<std::size_t>(sp - 1) * w + static_cast<std::size_t>(tp)]);
        p[static_cast<std::size_t>(sp) * w + static_cast<std::size_t>(tp)] = val;
      }
    }
    for (std::size_t s = 0; s < dim; ++s)
      for (std::size_t t = 0; t < dim; ++t) {
        const auto ss = std::min<std::size_t>(s, w - 1), tt = std::min<std::size_t>(t, w - 1);
        q[s * dim + t] = std::max(q[s * dim + t], p[ss * w + tt]);
      }
  };

  for (std::int64_t n = 3; n <= n_max; ++n) {
    while (m_done < n / 2) absorb(++m_done);
    const double root = std::sqrt(static_cast<double>(n));
    const double headline = k.d * root + k.additive;
    for (std::int64_t s = 1; s <= n - 2; ++s) {
      for (std::int64_t t = 1; t <= s; ++t) {
        const double g = g_star(n, s, t, v, k.c, small);

        ++rep.checks_bound;
        rep.min_bound_margin = std::min(rep.min_bound_margin, headline - g);
        if (g > headline + kTolerance) {
          ++rep.failures_bound;
          fail("bound", n, s, t, g, headline);
        }

        ++rep.checks_quotient;
        const double qv = q[static_cast<std::size_t>(s) * dim + static_cast<std::size_t>(t)];
        if (g + kTolerance < qv) {
          ++rep.failures_quotient;
          fail("quotient", n, s, t, g, qv);
        }

        if (v == Variant::undirected && t < 2) continue;  // |T| = 1 is a boundary value
        const double h = h_value(n, s, t, v, k.c);
        const auto tp = t - static_cast<std::int64_t>(std::ceil(h - kTolerance));
        if (tp < 0) continue;
        ++rep.checks_shrink;
        const double rhs = g_star(n, s, tp, v, k.c, small) + 1.0;
        if (g + kTolerance < rhs) {
          ++rep.failures_shrink;
          fail("shrink", n, s, t, g, rhs);
        }
      }
    }
  }
  return rep;
}

/// CSV rows (n, s, t, g_star, bound, margin) for one n.
inline void write_bound_csv(std::ostream& os, std::int64_t n, Variant v, std::uint64_t bucket_prime = 2,
                            bool header = true) {
  const auto k = theorem_constants(v, bucket_prime);
  const double bound = k.d * std::sqrt(static_cast<double>(n)) + k.additive;
  if (header) os << "n,s,t,g_star,bound,margin\n";
  char buf[160];
  for (std::int64_t s = 1; s <= n - 1; ++s)
    for (std::int64_t t = 0; t <= s; ++t) {
      const double g = g_star(n, s, t, v, k.c);
      std::snprintf(buf, sizeof buf, "%lld,%lld,%lld,%.9f,%.9f,%.9f\n", static_cast<long long>(n),
                    static_cast<long long>(s), static_cast<long long>(t), g, bound, bound - g);
      os << buf;
    }
}

}  // namespace copnum::bounds
