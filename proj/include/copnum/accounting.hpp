#pragma once

// Which difference elements k guard which robber moves.
//
// k accounts for a robber move a when a - b = k for some b in S ∪ {0}. A cop
// sitting at robber + γk answers a with b and closes the gap by one k, so the
// robber can play a at most γ more times before being caught.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "copnum/abelian.hpp"
#include "copnum/cayley.hpp"
#include "copnum/error.hpp"

namespace copnum {

struct GuardCertificate {
  Element k;
  std::vector<Element> guarded;    // sorted subset of T
  std::vector<Element> responses;  // responses[i] answers guarded[i]

  std::size_t count() const { return guarded.size(); }

  bool guards(Element a) const { return std::binary_search(guarded.begin(), guarded.end(), a); }

  std::optional<Element> response(Element a) const {
    const auto it = std::lower_bound(guarded.begin(), guarded.end(), a);
    if (it == guarded.end() || *it != a) return std::nullopt;
    return responses[static_cast<std::size_t>(it - guarded.begin())];
  }
};

inline GuardCertificate accounted_set(const GameInstance& inst, Element k) {
  const auto& g = inst.group();
  if (k == g.zero()) throw Error(Errc::zero_k, "k must be nonzero");
  GuardCertificate cert{k, {}, {}};
  for (Element a : inst.robber_moves()) {
    const Element b = g.sub(a, k);
    if (b == g.zero() || inst.in_s(b)) {
      cert.guarded.push_back(a);
      cert.responses.push_back(b);
    }
  }
  return cert;
}

/// Guard counts for every k, indexed by element: the tally of the difference
/// multiset {a - b : a in T, b in S ∪ {0}, a != b}.
inline std::vector<std::uint32_t> difference_tally(const GameInstance& inst) {
  const auto& g = inst.group();
  std::vector<std::uint32_t> tally(g.order(), 0);
  for (Element a : inst.robber_moves()) {
    ++tally[a.index];  // b = 0
    for (Element b : inst.cop_moves())
      if (b != a) ++tally[g.sub(a, b).index];
  }
  return tally;
}

/// The k guarding the most robber moves; ties go to the smallest k.
inline GuardCertificate best_accounting_element(const GameInstance& inst) {
  if (classify_boundary(inst) != BoundaryKind::not_boundary)
    throw Error(Errc::boundary_instance, "best accounting element is only defined off the boundary");
  const auto tally = difference_tally(inst);
  std::uint32_t best = 1;
  for (std::uint32_t i = 2; i < tally.size(); ++i)
    if (tally[i] > tally[best]) best = i;
  return accounted_set(inst, Element{best});
}

/// Lower bound ⌈|T||S| / (|G|-1)⌉ guaranteed by pigeonhole on the tally.
inline std::uint64_t pigeonhole_floor(const GameInstance& inst) {
  const auto n = inst.n();
  if (n < 2) return 0;
  const std::uint64_t num = inst.robber_moves().size() * inst.cop_moves().size();
  return (num + (n - 2)) / (n - 1);
}

/// Pairing step for undirected instances: the first pair a < b in T with
/// a + b != 0 gives k = a + b, which guards a (answer -b) and b (answer -a).
inline GuardCertificate frankl_pair(const GameInstance& inst) {
  const auto& g = inst.group();
  const auto& t = inst.robber_moves();
  if (inst.directed()) throw Error(Errc::invalid_argument, "pairing needs S = -S");
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const Element k = g.add(t[i], t[j]);
      if (k != g.zero()) return accounted_set(inst, k);
    }
  throw Error(Errc::no_valid_pair, "T has fewer than two elements or is of the form {a, -a}");
}

/// Single-move step for directed instances: k = a for the smallest a in T
/// guards a with answer 0 (stay).
inline GuardCertificate single_move_certificate(const GameInstance& inst) {
  const auto& t = inst.robber_moves();
  if (t.empty()) throw Error(Errc::invalid_argument, "robber moveset is empty");
  return accounted_set(inst, t.front());
}

}  // namespace copnum
