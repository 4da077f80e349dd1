#pragma once

// Exact k-cop pursuit solver by retrograde analysis.
//
// A cop team turn is split into k single-cop sub-moves (phase j = number of
// cops already moved this round). Cops are interchangeable, so the moved and
// unmoved cops are each kept as a sorted multiset, and the next cop to move is
// always the smallest unmoved one. On Cayley graphs the robber can be pinned
// at 0_G: a robber step t becomes a shift of every cop by -t.
//
// The cop-win region is the least fixpoint computed backwards from capture:
// a cop sub-move state wins if some successor wins, a robber state wins once
// every successor does (tracked with a per-state counter). Capture depths are
// measured in half-moves and computed with a 0-1 BFS, since sub-moves inside a
// round cost nothing and the last sub-move of a round costs one.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <deque>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "copnum/abelian.hpp"
#include "copnum/cayley.hpp"
#include "copnum/error.hpp"

namespace copnum {

inline constexpr std::uint64_t kDefaultArcBudget = 200'000'000;
inline constexpr int kMaxCops = 16;

using Vertex = std::uint32_t;

/// The board as the solver sees it: closed out-neighborhoods for both sides,
/// and, for Cayley graphs, the group used to pin the robber at 0.
struct Arena {
  std::uint32_t n = 0;
  std::vector<std::vector<Vertex>> cop_out, cop_in, robber_out, robber_in;
  std::optional<AbelianGroup> group;  // set for Cayley arenas
  std::vector<Element> robber_steps;  // T ∪ {0}, Cayley arenas only

  static Arena from_instance(const GameInstance& inst) {
    Arena a;
    const auto& g = inst.group();
    a.n = static_cast<std::uint32_t>(g.order());
    a.group = g;
    a.robber_steps.push_back(g.zero());
    a.robber_steps.insert(a.robber_steps.end(), inst.robber_moves().begin(), inst.robber_moves().end());
    a.cop_out.resize(a.n);
    a.robber_out.resize(a.n);
    for (Element v : g.elements()) {
      for (Element w : out_neighbors(inst, v, Side::cop)) a.cop_out[v.index].push_back(w.index);
      for (Element w : out_neighbors(inst, v, Side::robber)) a.robber_out[v.index].push_back(w.index);
    }
    a.build_in_lists();
    return a;
  }

  /// Both sides move along the same arcs.
  static Arena from_graph(const GeneralGraph& graph) {
    Arena a;
    a.n = graph.vertices;
    a.cop_out = graph.out_lists();
    for (Vertex v = 0; v < a.n; ++v) {
      a.cop_out[v].push_back(v);
      std::sort(a.cop_out[v].begin(), a.cop_out[v].end());
      a.cop_out[v].erase(std::unique(a.cop_out[v].begin(), a.cop_out[v].end()), a.cop_out[v].end());
    }
    a.robber_out = a.cop_out;
    a.build_in_lists();
    return a;
  }

  bool cayley() const { return group.has_value(); }

  std::size_t max_cop_degree() const {
    std::size_t m = 0;
    for (const auto& l : cop_out) m = std::max(m, l.size());
    return m;
  }
  std::size_t max_robber_degree() const {
    std::size_t m = 0;
    for (const auto& l : robber_out) m = std::max(m, l.size());
    return m;
  }

 private:
  void build_in_lists() {
    cop_in.assign(n, {});
    robber_in.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : cop_out[v]) cop_in[w].push_back(v);
      for (Vertex w : robber_out[v]) robber_in[w].push_back(v);
    }
  }
};

enum class Winner { cops, robber };

inline const char* winner_name(Winner w) { return w == Winner::cops ? "CopsWin" : "RobberWin"; }

struct SolveOptions {
  std::uint64_t arc_budget = kDefaultArcBudget;
  bool translation = true;  // ignored for non-Cayley arenas
};

/// Game state: for sub-move phase j < k, cops[0, j) have moved this round and
/// cops[j, k) have not, each part sorted; phase k means the robber is to move
/// and all k cops form one sorted multiset.
struct GameState {
  int phase = 0;
  std::array<Vertex, kMaxCops> cops{};
  Vertex robber = 0;
};

/// Dense indexing of all game states for fixed (n, k).
class StateSpace {
 public:
  StateSpace() = default;

  StateSpace(std::uint32_t n, int k, std::uint32_t robber_positions) : n_(n), k_(k), robber_positions_(robber_positions) {
    const auto top = static_cast<std::size_t>(n) + static_cast<std::size_t>(k) + 1;
    binom_.assign(top * static_cast<std::size_t>(k + 2), 0);
    for (std::size_t a = 0; a < top; ++a) {
      binom(a, 0) = 1;
      for (int b = 1; b <= k + 1 && static_cast<std::size_t>(b) <= a; ++b)
        binom(a, b) = binom(a - 1, b - 1) + (static_cast<std::size_t>(b) <= a - 1 ? binom(a - 1, b) : 0);
    }
    multiset_count_.resize(static_cast<std::size_t>(k + 1));
    for (int m = 0; m <= k; ++m) multiset_count_[static_cast<std::size_t>(m)] = multisets(n, m);
    offsets_.assign(static_cast<std::size_t>(k + 2), 0);
    for (int p = 0; p <= k; ++p) offsets_[static_cast<std::size_t>(p + 1)] = offsets_[static_cast<std::size_t>(p)] + block(p);

    tables_.resize(static_cast<std::size_t>(k + 1));
    for (int m = 1; m <= k; ++m) {
      auto& tab = tables_[static_cast<std::size_t>(m)];
      tab.assign(multiset_count_[static_cast<std::size_t>(m)] * static_cast<std::size_t>(m), 0);
      std::array<Vertex, kMaxCops> cur{};
      while (true) {
        const auto r = rank(std::span<const Vertex>(cur.data(), static_cast<std::size_t>(m)));
        std::copy_n(cur.begin(), m, tab.begin() + static_cast<std::ptrdiff_t>(r * static_cast<std::uint64_t>(m)));
        int i = m - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - 1) --i;
        if (i < 0) break;
        const Vertex next = cur[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < m; ++j) cur[static_cast<std::size_t>(j)] = next;
      }
    }
  }

  /// Number of states without building anything; double to survive overflow.
  static double estimate_states(std::uint32_t n, int k, std::uint32_t robber_positions) {
    auto ms = [n](int m) {
      double r = 1;
      for (int i = 1; i <= m; ++i) r = r * (static_cast<double>(n) + i - 1) / i;
      return r;
    };
    double total = 0;
    for (int j = 0; j < k; ++j) total += ms(j) * ms(k - j);
    total += ms(k);
    return total * robber_positions;
  }

  std::uint64_t size() const { return offsets_.back(); }
  int k() const { return k_; }
  std::uint32_t n() const { return n_; }
  std::uint64_t phase_begin(int p) const { return offsets_[static_cast<std::size_t>(p)]; }
  std::uint64_t phase_end(int p) const { return offsets_[static_cast<std::size_t>(p + 1)]; }

  std::uint64_t rank(std::span<const Vertex> sorted) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) r += binom(sorted[i] + i, static_cast<int>(i + 1));
    return r;
  }

  std::uint64_t index(const GameState& s) const {
    const int k = k_;
    const std::uint64_t r = robber_positions_ == 1 ? 0 : s.robber;
    if (s.phase == k) {
      const auto rk = rank(std::span<const Vertex>(s.cops.data(), static_cast<std::size_t>(k)));
      return offsets_[static_cast<std::size_t>(k)] + rk * robber_positions_ + r;
    }
    const int j = s.phase;
    const auto rm = rank(std::span<const Vertex>(s.cops.data(), static_cast<std::size_t>(j)));
    const auto ru = rank(std::span<const Vertex>(s.cops.data() + j, static_cast<std::size_t>(k - j)));
    return offsets_[static_cast<std::size_t>(j)] +
           (rm * multiset_count_[static_cast<std::size_t>(k - j)] + ru) * robber_positions_ + r;
  }

  GameState decode(std::uint64_t idx) const {
    GameState s;
    int p = 0;
    while (idx >= offsets_[static_cast<std::size_t>(p + 1)]) ++p;
    s.phase = p;
    idx -= offsets_[static_cast<std::size_t>(p)];
    s.robber = static_cast<Vertex>(idx % robber_positions_);
    idx /= robber_positions_;
    if (p == k_) {
      copy_multiset(k_, idx, s.cops.data());
      return s;
    }
    const auto cu = multiset_count_[static_cast<std::size_t>(k_ - p)];
    copy_multiset(p, idx / cu, s.cops.data());
    copy_multiset(k_ - p, idx % cu, s.cops.data() + p);
    return s;
  }

  /// Sorted multiset of size m with the given rank.
  std::span<const Vertex> multiset(int m, std::uint64_t r) const {
    return {tables_[static_cast<std::size_t>(m)].data() + r * static_cast<std::uint64_t>(m), static_cast<std::size_t>(m)};
  }
  std::uint64_t multiset_count(int m) const { return multiset_count_[static_cast<std::size_t>(m)]; }

 private:
  std::uint64_t& binom(std::size_t a, int b) { return binom_[a * static_cast<std::size_t>(k_ + 2) + static_cast<std::size_t>(b)]; }
  std::uint64_t binom(std::size_t a, int b) const {
    return binom_[a * static_cast<std::size_t>(k_ + 2) + static_cast<std::size_t>(b)];
  }
  std::uint64_t multisets(std::uint32_t n, int m) const { return binom(static_cast<std::size_t>(n) + m - 1, m); }
  std::uint64_t block(int p) const {
    if (p == k_) return multiset_count_[static_cast<std::size_t>(k_)] * robber_positions_;
    return multiset_count_[static_cast<std::size_t>(p)] * multiset_count_[static_cast<std::size_t>(k_ - p)] * robber_positions_;
  }
  void copy_multiset(int m, std::uint64_t r, Vertex* out) const {
    if (m == 0) return;
    const auto src = multiset(m, r);
    std::copy(src.begin(), src.end(), out);
  }

  std::uint32_t n_ = 0;
  int k_ = 0;
  std::uint32_t robber_positions_ = 1;
  std::vector<std::uint64_t> binom_;
  std::vector<std::uint64_t> multiset_count_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::vector<Vertex>> tables_;
};

inline constexpr std::uint32_t kNoDepth = std::numeric_limits<std::uint32_t>::max();

/// Value of one position from the solved table.
struct PositionValue {
  bool cop_win = false;
  bool terminal = false;   // a cop already shares the robber's vertex
  std::uint32_t depth = kNoDepth;  // half-moves to capture under optimal play
};

class SolveResult {
 public:
  int k = 0;
  Winner winner = Winner::robber;
  std::vector<Vertex> cop_placement;  // a winning start when cops win
  std::uint64_t states = 0;
  std::uint64_t arcs_estimate = 0;
  bool translation = false;

  const Arena& arena() const { return *arena_; }

  /// Cop team about to move (no cop has moved this round).
  PositionValue cop_turn(std::span<const Vertex> cops, Vertex robber) const { return lookup(0, cops, robber); }

  /// Robber about to move.
  PositionValue robber_turn(std::span<const Vertex> cops, Vertex robber) const {
    return lookup(k, cops, robber);
  }

  /// Sub-move phase j: `moved` cops have moved this round, `unmoved` have not.
  PositionValue sub_move(std::span<const Vertex> moved, std::span<const Vertex> unmoved, Vertex robber) const {
    std::array<Vertex, kMaxCops> all{};
    std::copy(moved.begin(), moved.end(), all.begin());
    std::copy(unmoved.begin(), unmoved.end(), all.begin() + static_cast<std::ptrdiff_t>(moved.size()));
    return lookup_split(static_cast<int>(moved.size()), std::span<const Vertex>(all.data(), static_cast<std::size_t>(k)),
                        robber);
  }

  PositionValue at(std::uint64_t index) const {
    PositionValue v;
    v.cop_win = (flags_[index] & kWin) != 0;
    v.terminal = (flags_[index] & kTerminal) != 0;
    v.depth = depth_[index];
    return v;
  }

  const StateSpace& space() const { return space_; }

  /// Versioned binary dump: "COPNUMWT", u32 version, u32 n, u32 k,
  /// u8 translation, u64 state count, then per state u8 cop-win and u32 depth
  /// (little-endian), in StateSpace index order.
  void write_table(std::ostream& os) const {
    auto put = [&](auto v) {
      unsigned char buf[sizeof v];
      for (std::size_t i = 0; i < sizeof v; ++i) buf[i] = static_cast<unsigned char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xffu);
      os.write(reinterpret_cast<const char*>(buf), sizeof v);
    };
    os.write("COPNUMWT", 8);
    put(std::uint32_t{1});
    put(std::uint32_t{arena_->n});
    put(static_cast<std::uint32_t>(k));
    put(static_cast<std::uint8_t>(translation ? 1 : 0));
    put(static_cast<std::uint64_t>(space_.size()));
    for (std::uint64_t i = 0; i < space_.size(); ++i) {
      put(static_cast<std::uint8_t>(flags_[i] & kWin ? 1 : 0));
      put(depth_[i]);
    }
  }

 private:
  friend class Solver;
  static constexpr std::uint8_t kWin = 1, kFinal = 2, kTerminal = 4;

  PositionValue lookup(int phase, std::span<const Vertex> cops, Vertex robber) const {
    std::array<Vertex, kMaxCops> all{};
    std::copy(cops.begin(), cops.end(), all.begin());
    const int m = phase == k ? k : 0;
    std::sort(all.begin(), all.begin() + k);
    return lookup_split(m == k ? k : 0, std::span<const Vertex>(all.data(), static_cast<std::size_t>(k)), robber,
                        phase);
  }

  /// cops[0, split) moved, cops[split, k) unmoved (each sorted after
  /// normalization). `phase` defaults to split.
  PositionValue lookup_split(int split, std::span<const Vertex> cops, Vertex robber, int phase = -1) const {
    if (phase < 0) phase = split;
    GameState s;
    s.phase = phase;
    for (int i = 0; i < k; ++i) {
      Vertex c = cops[static_cast<std::size_t>(i)];
      if (translation) c = arena_->group->sub(Element{c}, Element{robber}).index;
      s.cops[static_cast<std::size_t>(i)] = c;
    }
    s.robber = translation ? 0 : robber;
    for (int i = 0; i < k; ++i)
      if (s.cops[static_cast<std::size_t>(i)] == s.robber) return PositionValue{true, true, 0};
    const int cut = phase == k ? k : phase;
    std::sort(s.cops.begin(), s.cops.begin() + cut);
    std::sort(s.cops.begin() + cut, s.cops.begin() + k);
    return at(space_.index(s));
  }

  std::shared_ptr<const Arena> arena_;
  StateSpace space_;
  std::vector<std::uint8_t> flags_;
  std::vector<std::uint32_t> depth_;
};

inline std::uint64_t estimate_arcs(const Arena& arena, int k, bool translation) {
  const std::uint32_t rpos = translation ? 1 : arena.n;
  double cop_states = StateSpace::estimate_states(arena.n, k, rpos);
  const double ms = [&] {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (static_cast<double>(arena.n) + i - 1) / i;
    return r * rpos;
  }();
  cop_states -= ms;
  const double arcs = cop_states * static_cast<double>(arena.max_cop_degree()) +
                      ms * static_cast<double>(arena.max_robber_degree());
  return arcs > 1.8e19 ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(arcs);
}

class Solver {
 public:
  static SolveResult solve(std::shared_ptr<const Arena> arena, int k, const SolveOptions& opt) {
    if (k < 1 || k > kMaxCops)
      throw Error(Errc::invalid_argument, "cop count must be in [1, " + std::to_string(kMaxCops) + "]");
    const bool translation = opt.translation && arena->cayley();
    const std::uint64_t estimate = estimate_arcs(*arena, k, translation);
    const double states = StateSpace::estimate_states(arena->n, k, translation ? 1 : arena->n);
    if (estimate > opt.arc_budget || states > 4.0e9) throw BudgetExceeded(estimate, opt.arc_budget);

    SolveResult res;
    res.k = k;
    res.translation = translation;
    res.arcs_estimate = estimate;
    res.arena_ = arena;
    res.space_ = StateSpace(arena->n, k, translation ? 1 : arena->n);
    Solver s(*arena, res.space_, translation);
    s.run();
    res.flags_ = std::move(s.flags_);
    res.depth_ = std::move(s.depth_);
    res.states = res.space_.size();
    s.decide(res);
    return res;
  }

 private:
  Solver(const Arena& arena, const StateSpace& space, bool translation)
      : a_(arena), sp_(space), k_(space.k()), translation_(translation) {
    if (translation_) {
      const auto& g = *a_.group;
      for (Element t : a_.robber_steps) {
        std::vector<Vertex> minus(a_.n), plus(a_.n);
        for (Vertex v = 0; v < a_.n; ++v) {
          minus[v] = g.sub(Element{v}, t).index;
          plus[v] = g.add(Element{v}, t).index;
        }
        minus_.push_back(std::move(minus));
        plus_.push_back(std::move(plus));
      }
    }
  }

  static bool contains(std::span<const Vertex> sorted_list, Vertex v) {
    return std::binary_search(sorted_list.begin(), sorted_list.end(), v);
  }

  bool terminal(const GameState& s) const {
    for (int i = 0; i < k_; ++i)
      if (s.cops[static_cast<std::size_t>(i)] == s.robber) return true;
    return false;
  }

  /// Distinct non-capturing successors of a robber-to-move state.
  template <class F>
  void robber_successors(const GameState& s, F&& f) const {
    GameState nx;
    nx.phase = 0;
    if (translation_) {
      std::array<std::uint64_t, 64> seen_small{};
      std::vector<std::uint64_t> seen;
      std::size_t count = 0;
      for (std::size_t i = 0; i < minus_.size(); ++i) {
        bool capture = false;
        for (int c = 0; c < k_; ++c) {
          const Vertex v = minus_[i][s.cops[static_cast<std::size_t>(c)]];
          capture |= v == 0;
          nx.cops[static_cast<std::size_t>(c)] = v;
        }
        if (capture) continue;
        std::sort(nx.cops.begin(), nx.cops.begin() + k_);
        nx.robber = 0;
        const auto idx = sp_.index(nx);
        bool dup = false;
        if (count < seen_small.size()) {
          for (std::size_t j = 0; j < count; ++j) dup |= seen_small[j] == idx;
          if (!dup) seen_small[count++] = idx;
        } else {
          dup = std::find(seen.begin(), seen.end(), idx) != seen.end() ||
                std::find(seen_small.begin(), seen_small.end(), idx) != seen_small.end();
          if (!dup) seen.push_back(idx);
        }
        if (!dup) f(idx);
      }
      return;
    }
    nx.cops = s.cops;
    for (Vertex r : a_.robber_out[s.robber]) {
      bool capture = false;
      for (int c = 0; c < k_; ++c) capture |= nx.cops[static_cast<std::size_t>(c)] == r;
      if (capture) continue;
      nx.robber = r;
      f(sp_.index(nx));
    }
  }

  template <class F>
  void robber_predecessors(const GameState& s, F&& f) const {
    GameState pv;
    pv.phase = k_;
    if (translation_) {
      std::vector<std::uint64_t> seen;
      for (std::size_t i = 0; i < plus_.size(); ++i) {
        bool capture = false;
        for (int c = 0; c < k_; ++c) {
          const Vertex v = plus_[i][s.cops[static_cast<std::size_t>(c)]];
          capture |= v == 0;
          pv.cops[static_cast<std::size_t>(c)] = v;
        }
        if (capture) continue;
        std::sort(pv.cops.begin(), pv.cops.begin() + k_);
        pv.robber = 0;
        const auto idx = sp_.index(pv);
        if (std::find(seen.begin(), seen.end(), idx) != seen.end()) continue;
        seen.push_back(idx);
        f(idx);
      }
      return;
    }
    pv.cops = s.cops;
    for (Vertex r : a_.robber_in[s.robber]) {
      bool capture = false;
      for (int c = 0; c < k_; ++c) capture |= pv.cops[static_cast<std::size_t>(c)] == r;
      if (capture) continue;
      pv.robber = r;
      f(sp_.index(pv));
    }
  }

  /// Cop sub-move predecessors of a state in phase >= 1 (f gets index and
  /// edge weight).
  template <class F>
  void cop_predecessors(const GameState& s, F&& f) const {
    const int moved = s.phase == k_ ? k_ : s.phase;
    const std::uint32_t weight = s.phase == k_ ? 1 : 0;
    const Vertex limit = moved < k_ ? s.cops[static_cast<std::size_t>(moved)] : std::numeric_limits<Vertex>::max();
    GameState pv;
    pv.phase = moved - 1;
    pv.robber = s.robber;
    for (int i = 0; i < moved; ++i) {
      const Vertex w = s.cops[static_cast<std::size_t>(i)];
      if (i > 0 && s.cops[static_cast<std::size_t>(i - 1)] == w) continue;
      // moved part without this occurrence of w
      int o = 0;
      for (int j = 0; j < moved; ++j)
        if (j != i) pv.cops[static_cast<std::size_t>(o++)] = s.cops[static_cast<std::size_t>(j)];
      for (int j = moved; j < k_; ++j) pv.cops[static_cast<std::size_t>(j)] = s.cops[static_cast<std::size_t>(j)];
      for (Vertex c : a_.cop_in[w]) {
        if (c > limit || c == s.robber) continue;
        pv.cops[static_cast<std::size_t>(moved - 1)] = c;
        f(sp_.index(pv), weight);
      }
    }
  }

  void run() {
    const std::uint64_t total = sp_.size();
    flags_.assign(total, 0);
    depth_.assign(total, kNoDepth);
    const std::uint64_t rb = sp_.phase_begin(k_);
    counter_.assign(total - rb, 0);

    std::deque<std::pair<std::uint64_t, std::uint32_t>> queue;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const GameState s = sp_.decode(idx);
      if (terminal(s)) {
        flags_[idx] = SolveResult::kWin | SolveResult::kFinal | SolveResult::kTerminal;
        depth_[idx] = 0;
        continue;
      }
      if (s.phase < k_) {
        const Vertex mover = s.cops[static_cast<std::size_t>(s.phase)];
        if (contains(a_.cop_out[mover], s.robber)) {
          flags_[idx] = SolveResult::kWin;
          depth_[idx] = 1;
          queue.emplace_back(idx, 1);
        }
      } else {
        std::uint32_t count = 0;
        robber_successors(s, [&](std::uint64_t) { ++count; });
        counter_[idx - rb] = count;
      }
    }

    while (!queue.empty()) {
      const auto [idx, d] = queue.front();
      queue.pop_front();
      if ((flags_[idx] & SolveResult::kFinal) || depth_[idx] != d) continue;
      flags_[idx] |= SolveResult::kFinal;
      const GameState s = sp_.decode(idx);
      if (s.phase == 0) {
        robber_predecessors(s, [&](std::uint64_t p) {
          if (--counter_[p - rb] == 0) {
            flags_[p] |= SolveResult::kWin;
            depth_[p] = d + 1;
            queue.emplace_back(p, d + 1);
          }
        });
      } else {
        cop_predecessors(s, [&](std::uint64_t p, std::uint32_t w) {
          if (flags_[p] & SolveResult::kFinal) return;
          const std::uint32_t nd = d + w;
          if ((flags_[p] & SolveResult::kWin) && depth_[p] <= nd) return;
          flags_[p] |= SolveResult::kWin;
          depth_[p] = nd;
          if (w == 0)
            queue.emplace_front(p, nd);
          else
            queue.emplace_back(p, nd);
        });
      }
    }
  }

  /// Cops place first, then the robber, then cops move: the cops win iff some
  /// multiset placement wins against every robber start.
  void decide(SolveResult& res) const {
    const auto count = sp_.multiset_count(k_);
    GameState s;
    s.phase = 0;
    for (std::uint64_t r = 0; r < count; ++r) {
      const auto placement = sp_.multiset(k_, r);
      bool all = true;
      for (Vertex robber = 0; robber < a_.n && all; ++robber) {
        bool on_cop = false;
        for (int c = 0; c < k_; ++c) {
          Vertex v = placement[static_cast<std::size_t>(c)];
          on_cop |= v == robber;
          if (translation_) v = a_.group->sub(Element{v}, Element{robber}).index;
          s.cops[static_cast<std::size_t>(c)] = v;
        }
        if (on_cop) continue;
        s.robber = translation_ ? 0 : robber;
        std::sort(s.cops.begin(), s.cops.begin() + k_);
        all = (res.flags_[sp_.index(s)] & SolveResult::kWin) != 0;
      }
      if (all) {
        res.winner = Winner::cops;
        res.cop_placement.assign(placement.begin(), placement.end());
        return;
      }
    }
    res.winner = Winner::robber;
  }

  const Arena& a_;
  const StateSpace& sp_;
  int k_;
  bool translation_;
  std::vector<std::vector<Vertex>> minus_, plus_;
  std::vector<std::uint8_t> flags_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> counter_;
};

inline SolveResult solve_fixed_cops(std::shared_ptr<const Arena> arena, int k, const SolveOptions& opt = {}) {
  return Solver::solve(std::move(arena), k, opt);
}

inline SolveResult solve_fixed_cops(const GameInstance& inst, int k, const SolveOptions& opt = {}) {
  return solve_fixed_cops(std::make_shared<const Arena>(Arena::from_instance(inst)), k, opt);
}

inline SolveResult solve_fixed_cops(const GeneralGraph& graph, int k, const SolveOptions& opt = {}) {
  return solve_fixed_cops(std::make_shared<const Arena>(Arena::from_graph(graph)), k, opt);
}

struct CopNumberResult {
  std::optional<int> cop_number;  // nullopt: not found for k <= max_k
  int max_k = 0;
  std::vector<Winner> winners;    // winners[k-1]
};

inline CopNumberResult cop_number(std::shared_ptr<const Arena> arena, int max_k, const SolveOptions& opt = {}) {
  if (max_k < 1) throw Error(Errc::invalid_argument, "max_k must be >= 1");
  CopNumberResult out;
  out.max_k = max_k;
  for (int k = 1; k <= max_k; ++k) {
    const auto res = solve_fixed_cops(arena, k, opt);
    out.winners.push_back(res.winner);
    if (res.winner == Winner::cops) {
      out.cop_number = k;
      break;
    }
  }
  return out;
}

inline CopNumberResult cop_number(const GameInstance& inst, int max_k, const SolveOptions& opt = {}) {
  return cop_number(std::make_shared<const Arena>(Arena::from_instance(inst)), max_k, opt);
}

inline CopNumberResult cop_number(const GeneralGraph& graph, int max_k, const SolveOptions& opt = {}) {
  return cop_number(std::make_shared<const Arena>(Arena::from_graph(graph)), max_k, opt);
}

/// Optimal cop play read off a solved table: at cop-win positions each
/// sub-move minimizes the remaining capture depth, ties to the smallest
/// destination vertex. Elsewhere cops stay.
class CopPolicy {
 public:
  explicit CopPolicy(const SolveResult& res) : res_(&res) {}

  /// New positions, aligned with `cops`.
  std::vector<Vertex> move(std::span<const Vertex> cops, Vertex robber) const {
    const int k = res_->k;
    std::vector<Vertex> out(cops.begin(), cops.end());
    for (Vertex c : cops)
      if (c == robber) return out;
    const auto& arena = res_->arena();
    std::vector<std::pair<Vertex, std::size_t>> unmoved;
    for (std::size_t i = 0; i < cops.size(); ++i) unmoved.emplace_back(cops[i], i);
    std::sort(unmoved.begin(), unmoved.end());
    std::vector<Vertex> moved;
    for (int j = 0; j < k; ++j) {
      const auto [pos, who] = unmoved.front();
      unmoved.erase(unmoved.begin());
      std::vector<Vertex> rest;
      for (const auto& u : unmoved) rest.push_back(u.first);
      Vertex best = pos;
      std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
      for (Vertex w : arena.cop_out[pos]) {
        std::uint64_t cost;
        if (w == robber) {
          cost = 1;
        } else {
          std::vector<Vertex> m2 = moved;
          m2.insert(std::upper_bound(m2.begin(), m2.end(), w), w);
          const bool last = j + 1 == k;
          const PositionValue v = last ? res_->robber_turn(m2, robber) : res_->sub_move(m2, rest, robber);
          if (!v.cop_win) continue;
          cost = static_cast<std::uint64_t>(v.depth) + (last ? 1 : 0);
        }
        if (cost < best_cost) {
          best_cost = cost;
          best = w;
        }
      }
      out[who] = best;
      if (best == robber) return out;
      moved.insert(std::upper_bound(moved.begin(), moved.end(), best), best);
    }
    return out;
  }

  /// A winning initial placement if the cops win, else all cops on vertex 0.
  std::vector<Vertex> place() const {
    if (res_->winner == Winner::cops) return res_->cop_placement;
    return std::vector<Vertex>(static_cast<std::size_t>(res_->k), 0);
  }

 private:
  const SolveResult* res_;
};

/// Optimal robber play: stay inside the robber-win region when possible
/// (smallest destination first), otherwise maximize the capture depth.
class RobberPolicy {
 public:
  explicit RobberPolicy(const SolveResult& res) : res_(&res) {}

  Vertex move(std::span<const Vertex> cops, Vertex robber) const {
    const auto& arena = res_->arena();
    std::vector<Vertex> options;
    if (arena.cayley()) {
      const auto& g = *arena.group;
      for (Element t : arena.robber_steps) options.push_back(g.add(Element{robber}, t).index);
      std::sort(options.begin(), options.end());
      options.erase(std::unique(options.begin(), options.end()), options.end());
    } else {
      options = arena.robber_out[robber];
    }
    return pick(cops, options, robber);
  }

  Vertex place(std::span<const Vertex> cops) const {
    std::vector<Vertex> all(res_->arena().n);
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return pick(cops, all, 0);
  }

 private:
  Vertex pick(std::span<const Vertex> cops, const std::vector<Vertex>& options, Vertex fallback) const {
    Vertex best = fallback;
    long long best_score = -2;
    for (Vertex r : options) {
      long long score;
      if (std::find(cops.begin(), cops.end(), r) != cops.end()) {
        score = -1;
      } else {
        const PositionValue v = res_->cop_turn(cops, r);
        if (!v.cop_win) return r;
        score = v.depth;
      }
      if (score > best_score) {
        best_score = score;
        best = r;
      }
    }
    return best;
  }

  const SolveResult* res_;
};

inline std::pair<CopPolicy, RobberPolicy> extract_policies(const SolveResult& res) {
  return {CopPolicy(res), RobberPolicy(res)};
}

}  // namespace copnum
