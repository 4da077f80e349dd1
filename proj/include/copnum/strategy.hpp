#pragma once

// Constructive cop strategies and a game executor.
//
// A plan is either a direct tactic for a boundary instance or a recursion
// step: a guard certificate k, a plan for the quotient game on G/<k>, and a
// plan for the residual game in which the robber has lost the moves k
// accounts for. Cops chase the robber's <k>-coset in the quotient; the first
// cop to reach it becomes the guard and the residual plan is played by the
// others. Whenever the robber plays a guarded move the guard closes in by one
// k and everybody else copies the move, so the residual game sees no move.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "copnum/abelian.hpp"
#include "copnum/accounting.hpp"
#include "copnum/bounds.hpp"
#include "copnum/cayley.hpp"
#include "copnum/error.hpp"
#include "copnum/solver.hpp"

namespace copnum {

enum class Flavor { frankl, gstar };

inline Flavor parse_flavor(std::string_view s) {
  if (s == "frankl") return Flavor::frankl;
  if (s == "gstar") return Flavor::gstar;
  throw Error(Errc::invalid_argument, "unknown flavor '" + std::string(s) + "'");
}

inline const char* flavor_name(Flavor f) { return f == Flavor::frankl ? "frankl" : "gstar"; }

struct StrategyPlan;
using PlanPtr = std::shared_ptr<const StrategyPlan>;

struct StrategyPlan {
  GameInstance instance;
  BoundaryKind boundary = BoundaryKind::not_boundary;  // not_boundary means Recurse
  std::optional<GuardCertificate> certificate;
  std::shared_ptr<const QuotientMap> quotient;
  PlanPtr quotient_plan;
  PlanPtr residual_plan;
  int cop_count = 1;

  bool is_boundary() const { return boundary != BoundaryKind::not_boundary; }
};

inline int plan_cop_count(const StrategyPlan& plan) {
  if (plan.is_boundary()) return plan.boundary == BoundaryKind::inverse_pair ? 2 : 1;
  return std::max(plan_cop_count(*plan.quotient_plan), plan_cop_count(*plan.residual_plan) + 1);
}

inline int plan_depth(const StrategyPlan& plan) {
  if (plan.is_boundary()) return 1;
  return 1 + std::max(plan_depth(*plan.quotient_plan), plan_depth(*plan.residual_plan));
}

namespace detail {

inline GuardCertificate frankl_rule(const GameInstance& inst) {
  return inst.directed() ? single_move_certificate(inst) : frankl_pair(inst);
}

inline GuardCertificate choose_certificate(const GameInstance& inst, Flavor flavor) {
  if (flavor == Flavor::gstar) {
    const auto n = inst.n();
    const auto variant = inst.directed() ? bounds::Variant::directed : bounds::Variant::undirected;
    const double c = bounds::theorem_constants(variant, smallest_prime_factor(n)).c;
    if (static_cast<double>(inst.robber_moves().size()) > c * std::sqrt(static_cast<double>(n)))
      return best_accounting_element(inst);
  }
  return frankl_rule(inst);
}

}  // namespace detail

inline GameInstance quotient_instance(const GameInstance& inst, const QuotientMap& q) {
  auto image = [&](const std::vector<Element>& v) {
    std::vector<Element> out;
    for (Element e : v) out.push_back(q(e));
    return out;
  };
  return GameInstance::build(q.target(), image(inst.cop_moves()), image(inst.robber_moves()));
}

inline PlanPtr build_plan(const GameInstance& inst, Flavor flavor) {
  auto plan = std::make_shared<StrategyPlan>(StrategyPlan{inst, classify_boundary(inst), {}, {}, {}, {}, 1});
  if (plan->is_boundary()) {
    plan->cop_count = plan_cop_count(*plan);
    return plan;
  }
  const auto cert = detail::choose_certificate(inst, flavor);
  auto q = std::make_shared<const QuotientMap>(inst.group(), cert.k);
  const auto qi = quotient_instance(inst, *q);
  PlanPtr quotient_plan = build_plan(qi, flavor);
  if (flavor == Flavor::gstar) {
    auto alt = build_plan(qi, Flavor::frankl);
    if (alt->cop_count < quotient_plan->cop_count) quotient_plan = std::move(alt);
  }
  std::vector<Element> rest;
  for (Element a : inst.robber_moves())
    if (!cert.guards(a)) rest.push_back(a);
  plan->residual_plan = build_plan(inst.with_robber_moves(std::move(rest)), flavor);
  plan->certificate = cert;
  plan->quotient = std::move(q);
  plan->quotient_plan = std::move(quotient_plan);
  plan->cop_count = plan_cop_count(*plan);
  return plan;
}

inline nlohmann::json plan_to_json(const StrategyPlan& plan) {
  const auto& g = plan.instance.group();
  nlohmann::json j;
  j["order"] = g.order();
  j["S"] = plan.instance.cop_moves().size();
  j["T"] = plan.instance.robber_moves().size();
  j["directed"] = plan.instance.directed();
  j["cop_count"] = plan.cop_count;
  if (plan.is_boundary()) {
    j["node"] = boundary_name(plan.boundary);
    return j;
  }
  j["node"] = "Recurse";
  j["k"] = g.to_string(plan.certificate->k);
  j["guarded"] = nlohmann::json::array();
  for (Element a : plan.certificate->guarded) j["guarded"].push_back(g.to_string(a));
  j["quotient"] = plan_to_json(*plan.quotient_plan);
  j["residual"] = plan_to_json(*plan.residual_plan);
  return j;
}

/// Per-game counters filled in by the runners.
struct ExecutionStats {
  std::uint64_t guard_activations = 0;
  std::uint64_t guard_replies = 0;
  std::uint64_t pauses = 0;
};

class StrategyInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

/// Plays one plan node. Positions are in the node's own group and relative to
/// whatever offset the parent maintains; `turn` moves the team in place.
class Runner {
 public:
  virtual ~Runner() = default;
  virtual void turn(std::span<Element> cops, Element robber) = 0;
};

std::unique_ptr<Runner> make_runner(PlanPtr plan, ExecutionStats* stats);

/// One step of S ∪ {0} from `from` that minimizes `dist`, smallest move on ties.
inline Element walk_step(const GameInstance& inst, Element from, const std::vector<std::uint32_t>& dist) {
  const auto& g = inst.group();
  Element best = from;
  for (Element s : inst.cop_moves()) {
    const Element to = g.add(from, s);
    if (dist[to.index] < dist[best.index]) best = to;
  }
  return best;
}

/// EmptyT, CompleteGraph and TinyGroup: every cop walks a shortest path to the
/// robber's current vertex.
class WalkRunner : public Runner {
 public:
  explicit WalkRunner(PlanPtr plan) : plan_(std::move(plan)) {}

  void turn(std::span<Element> cops, Element robber) override {
    auto it = cache_.find(robber.index);
    if (it == cache_.end())
      it = cache_.emplace(robber.index, distances_to(plan_->instance.group(), plan_->instance.cop_moves(), {robber})).first;
    for (Element& c : cops) c = walk_step(plan_->instance, c, it->second);
  }

 private:
  PlanPtr plan_;
  std::map<std::uint32_t, std::vector<std::uint32_t>> cache_;
};

/// SingletonT ({a}) and InversePair ({a, -a}): the robber is confined to its
/// <a>-coset. Cops walk into it, then cop 0 plays -a and cop 1 plays +a, so
/// the arc of the coset cycle between them and the robber keeps shrinking.
class CosetRunner : public Runner {
 public:
  explicit CosetRunner(PlanPtr plan) : plan_(std::move(plan)) {}

  void turn(std::span<Element> cops, Element robber) override {
    const auto& inst = plan_->instance;
    const auto& g = inst.group();
    const Element a = inst.robber_moves().front();
    if (dist_.empty()) {
      std::vector<Element> coset;
      for (Element x : cyclic_subgroup(g, a)) coset.push_back(g.add(robber, x));
      dist_ = distances_to(g, inst.cop_moves(), coset);
    }
    for (std::size_t i = 0; i < cops.size(); ++i) {
      Element& c = cops[i];
      if (dist_[c.index] == 0)
        c = i == 0 ? g.sub(c, a) : g.add(c, a);
      else
        c = walk_step(inst, c, dist_);
    }
  }

 private:
  PlanPtr plan_;
  std::vector<std::uint32_t> dist_;
};

class RecurseRunner : public Runner {
 public:
  RecurseRunner(PlanPtr plan, ExecutionStats* stats) : plan_(std::move(plan)), stats_(stats) {
    const auto& q = *plan_->quotient;
    lift_.assign(q.target().order(), kNone);
    lift_[0] = 0;
    for (Element s : plan_->instance.cop_moves()) {
      auto& slot = lift_[q(s).index];
      if (slot == kNone) slot = s.index;
    }
    child_ = make_runner(plan_->quotient_plan, stats_);
  }

  void turn(std::span<Element> cops, Element robber) override {
    if (!guarding_) {
      if (try_activate(cops, robber)) {
        start_residual(cops);
        residual_turn(cops, robber);  // the new guard stays this turn
      } else {
        pursue(cops, robber);
        if (try_activate(cops, robber)) start_residual(cops);
      }
      prev_robber_ = robber;
      return;
    }
    guard_turn(cops, robber);
    prev_robber_ = robber;
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  const AbelianGroup& group() const { return plan_->instance.group(); }

  void pursue(std::span<Element> cops, Element robber) {
    const auto& q = *plan_->quotient;
    const auto& g = group();
    const auto& h = q.target();
    const auto team = static_cast<std::size_t>(plan_->quotient_plan->cop_count);
    std::vector<Element> image(team);
    for (std::size_t i = 0; i < team; ++i) image[i] = q(cops[i]);
    const auto before = image;
    child_->turn(image, q(robber));
    for (std::size_t i = 0; i < team; ++i) {
      const std::uint32_t l = lift_[h.sub(image[i], before[i]).index];
      if (l == kNone) throw StrategyInvariantViolation("quotient move has no preimage in S ∪ {0}");
      cops[i] = g.add(cops[i], Element{l});
    }
  }

  bool try_activate(std::span<Element> cops, Element robber) {
    const auto& q = *plan_->quotient;
    const auto& g = group();
    const auto team = static_cast<std::size_t>(plan_->quotient_plan->cop_count);
    for (std::size_t i = 0; i < team; ++i) {
      if (q(cops[i]) != q(robber)) continue;
      const Element k = plan_->certificate->k;
      const Element diff = g.sub(cops[i], robber);
      std::uint64_t gamma = 0;
      for (Element x = g.zero(); x != diff; x = g.add(x, k)) ++gamma;
      guarding_ = true;
      guard_ = i;
      gamma_ = gamma;
      ++stats_->guard_activations;
      return true;
    }
    return false;
  }

  void start_residual(std::span<Element> cops) {
    const auto need = static_cast<std::size_t>(plan_->residual_plan->cop_count);
    for (std::size_t i = 0; i < cops.size() && slots_.size() < need; ++i)
      if (i != guard_) slots_.push_back(i);
    if (slots_.size() < need) throw StrategyInvariantViolation("not enough cops for the residual plan");
    offset_ = group().zero();
    residual_ = make_runner(plan_->residual_plan, stats_);
  }

  void residual_turn(std::span<Element> cops, Element robber) {
    const auto& g = group();
    std::vector<Element> virt(slots_.size());
    for (std::size_t j = 0; j < slots_.size(); ++j) virt[j] = g.sub(cops[slots_[j]], offset_);
    residual_->turn(virt, g.sub(robber, offset_));
    for (std::size_t j = 0; j < slots_.size(); ++j) cops[slots_[j]] = g.add(virt[j], offset_);
  }

  void guard_turn(std::span<Element> cops, Element robber) {
    const auto& g = group();
    const auto& cert = *plan_->certificate;
    const Element m = g.sub(robber, prev_robber_);
    if (m != g.zero() && cert.guards(m)) {
      cops[guard_] = g.add(cops[guard_], *cert.response(m));
      --gamma_;
      ++stats_->guard_replies;
      if (g.sub(cops[guard_], robber) != g.times(gamma_, cert.k))
        throw StrategyInvariantViolation("guard offset did not drop by exactly k");
      std::vector<Element> before;
      for (std::size_t j : slots_) before.push_back(g.sub(cops[j], prev_robber_));
      for (std::size_t j : slots_) cops[j] = g.add(cops[j], m);
      offset_ = g.add(offset_, m);
      ++stats_->pauses;
      for (std::size_t j = 0; j < slots_.size(); ++j)
        if (g.sub(cops[slots_[j]], robber) != before[j])
          throw StrategyInvariantViolation("pause changed a cop's difference to the robber");
      return;
    }
    cops[guard_] = g.add(cops[guard_], m);
    residual_turn(cops, robber);
  }

  PlanPtr plan_;
  ExecutionStats* stats_;
  std::vector<std::uint32_t> lift_;  // quotient move -> smallest preimage in S ∪ {0}
  std::unique_ptr<Runner> child_;
  bool guarding_ = false;
  std::size_t guard_ = 0;
  std::uint64_t gamma_ = 0;
  std::vector<std::size_t> slots_;  // residual team
  Element offset_{0};               // actual minus residual-game coordinates
  std::unique_ptr<Runner> residual_;
  Element prev_robber_{0};
};

inline std::unique_ptr<Runner> make_runner(PlanPtr plan, ExecutionStats* stats) {
  switch (plan->boundary) {
    case BoundaryKind::not_boundary: return std::make_unique<RecurseRunner>(std::move(plan), stats);
    case BoundaryKind::inverse_pair:
    case BoundaryKind::singleton_t: return std::make_unique<CosetRunner>(std::move(plan));
    default: return std::make_unique<WalkRunner>(std::move(plan));
  }
}

}  // namespace detail

/// A robber strategy. `move` returns the robber's new vertex.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual Element place(const GameInstance& inst, std::span<const Element> cops) = 0;
  virtual Element move(const GameInstance& inst, std::span<const Element> cops, Element robber) = 0;
};

namespace detail {

inline bool occupied(std::span<const Element> cops, Element v) {
  return std::find(cops.begin(), cops.end(), v) != cops.end();
}

inline std::vector<Element> robber_options(const GameInstance& inst, Element robber) {
  return out_neighbors(inst, robber, Side::robber);
}

}  // namespace detail

/// Maximizes the distance from the nearest cop; smallest vertex on ties.
class GreedyAdversary : public Adversary {
 public:
  Element place(const GameInstance& inst, std::span<const Element> cops) override {
    return best(inst, cops, inst.group().elements());
  }
  Element move(const GameInstance& inst, std::span<const Element> cops, Element robber) override {
    return best(inst, cops, detail::robber_options(inst, robber));
  }

 private:
  Element best(const GameInstance& inst, std::span<const Element> cops, const std::vector<Element>& options) {
    Element pick = options.front();
    long long score = -1;
    for (Element v : options) {
      auto it = cache_.find(v.index);
      if (it == cache_.end()) it = cache_.emplace(v.index, distances_to(inst.group(), inst.cop_moves(), {v})).first;
      long long d = std::numeric_limits<long long>::max();
      for (Element c : cops) d = std::min<long long>(d, it->second[c.index]);
      if (d > score) {
        score = d;
        pick = v;
      }
    }
    return pick;
  }

  std::map<std::uint32_t, std::vector<std::uint32_t>> cache_;
};

/// Uniform over moves that do not land on a cop.
class RandomAdversary : public Adversary {
 public:
  explicit RandomAdversary(std::uint64_t seed) : rng_(seed) {}

  Element place(const GameInstance& inst, std::span<const Element> cops) override {
    return pick(cops, inst.group().elements());
  }
  Element move(const GameInstance& inst, std::span<const Element> cops, Element robber) override {
    return pick(cops, detail::robber_options(inst, robber));
  }

 private:
  Element pick(std::span<const Element> cops, const std::vector<Element>& options) {
    std::vector<Element> safe;
    for (Element v : options)
      if (!detail::occupied(cops, v)) safe.push_back(v);
    if (safe.empty()) safe = options;
    std::uniform_int_distribution<std::size_t> dist(0, safe.size() - 1);
    return safe[dist(rng_)];
  }

  std::mt19937_64 rng_;
};

/// Plays the robber policy of a solved table; the cop count must match.
class OptimalAdversary : public Adversary {
 public:
  explicit OptimalAdversary(std::shared_ptr<const SolveResult> result) : result_(std::move(result)), policy_(*result_) {}

  Element place(const GameInstance&, std::span<const Element> cops) override {
    return Element{policy_.place(indices(cops))};
  }
  Element move(const GameInstance&, std::span<const Element> cops, Element robber) override {
    return Element{policy_.move(indices(cops), robber.index)};
  }

 private:
  std::vector<Vertex> indices(std::span<const Element> cops) const {
    if (static_cast<int>(cops.size()) != result_->k)
      throw Error(Errc::size_mismatch, "solved table is for a different cop count");
    std::vector<Vertex> out;
    for (Element c : cops) out.push_back(c.index);
    return out;
  }

  std::shared_ptr<const SolveResult> result_;
  RobberPolicy policy_;
};

enum class Outcome { captured, step_cap_exceeded };

inline const char* outcome_name(Outcome o) { return o == Outcome::captured ? "Captured" : "StepCapExceeded"; }

struct MoveRecord {
  Side side = Side::cop;
  std::vector<Element> cops;
  Element robber{0};
};

struct GameTranscript {
  GameInstance instance;
  int plan_cop_count = 0;
  std::vector<Element> cop_starts;
  Element robber_start{0};
  std::vector<MoveRecord> moves;  // one per half-move
  Outcome outcome = Outcome::step_cap_exceeded;
  std::uint64_t turn = 0;         // half-moves played
  std::size_t cops_moved = 0;     // distinct cops that ever left their vertex
  ExecutionStats stats;
};

struct ExecuteOptions {
  std::uint64_t step_cap = 0;  // rounds; 0 selects 4·n²·(cop_count + 1)
  bool record = true;
};

inline std::uint64_t default_step_cap(std::size_t n, int cop_count) {
  return 4ull * n * n * static_cast<std::uint64_t>(cop_count + 1);
}

inline GameTranscript execute_game(const PlanPtr& plan, Adversary& adversary, const ExecuteOptions& opt = {}) {
  const auto& inst = plan->instance;
  const auto& g = inst.group();
  const int k = plan->cop_count;
  const std::uint64_t cap = opt.step_cap ? opt.step_cap : default_step_cap(inst.n(), k);
  if (cap < 1) throw Error(Errc::invalid_argument, "step cap must be >= 1");

  GameTranscript tr{inst, k, std::vector<Element>(static_cast<std::size_t>(k), g.zero()), g.zero(), {},
                    Outcome::step_cap_exceeded, 0, 0, {}};
  auto runner = detail::make_runner(plan, &tr.stats);
  std::vector<Element> cops = tr.cop_starts;
  std::vector<char> moved(cops.size(), 0);

  Element robber = adversary.place(inst, cops);
  if (!g.contains(robber)) throw Error(Errc::illegal_adversary_move, "placement outside the group");
  tr.robber_start = robber;
  auto finish = [&](Outcome o) {
    tr.outcome = o;
    tr.cops_moved = static_cast<std::size_t>(std::count(moved.begin(), moved.end(), 1));
    return tr;
  };
  if (detail::occupied(cops, robber)) return finish(Outcome::captured);

  for (std::uint64_t round = 0; round < cap; ++round) {
    auto next = cops;
    runner->turn(next, robber);
    for (std::size_t i = 0; i < cops.size(); ++i) {
      const Element step = g.sub(next[i], cops[i]);
      if (step == g.zero()) continue;
      if (!inst.in_s(step)) throw StrategyInvariantViolation("strategy produced an illegal cop move");
      moved[i] = 1;
    }
    cops = std::move(next);
    ++tr.turn;
    if (opt.record) tr.moves.push_back({Side::cop, cops, robber});
    if (detail::occupied(cops, robber)) return finish(Outcome::captured);

    const Element to = adversary.move(inst, cops, robber);
    if (!g.contains(to)) throw Error(Errc::illegal_adversary_move, "move outside the group");
    const Element step = g.sub(to, robber);
    if (step != g.zero() && !inst.in_t(step))
      throw Error(Errc::illegal_adversary_move, "robber step " + g.to_string(step) + " is not in T ∪ {0}");
    robber = to;
    ++tr.turn;
    if (opt.record) tr.moves.push_back({Side::robber, cops, robber});
    if (detail::occupied(cops, robber)) return finish(Outcome::captured);
  }
  return finish(Outcome::step_cap_exceeded);
}

inline nlohmann::json transcript_to_json(const GameTranscript& tr) {
  const auto& g = tr.instance.group();
  auto pts = [&](const std::vector<Element>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Element e : v) a.push_back(g.coords(e));
    return a;
  };
  nlohmann::json j;
  j["instance"] = instance_to_json(tr.instance);
  j["cop_count"] = tr.plan_cop_count;
  j["cop_starts"] = pts(tr.cop_starts);
  j["robber_start"] = g.coords(tr.robber_start);
  j["moves"] = nlohmann::json::array();
  for (const auto& m : tr.moves)
    j["moves"].push_back({{"side", m.side == Side::cop ? "cop" : "robber"},
                          {"positions", {{"cops", pts(m.cops)}, {"robber", g.coords(m.robber)}}}});
  j["outcome"] = {{"result", outcome_name(tr.outcome)}, {"turn", tr.turn}};
  return j;
}

struct ReplayReport {
  bool ok = true;
  std::string message;
  std::size_t moves = 0;
  Outcome outcome = Outcome::step_cap_exceeded;
  std::uint64_t turn = 0;
};

/// Re-checks every half-move of a transcript and the recorded outcome.
inline ReplayReport replay_transcript(const nlohmann::json& j) {
  ReplayReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.message = msg;
    return rep;
  };
  try {
    const auto inst = instance_from_json(j.at("instance"));
    const auto& g = inst.group();
    auto pts = [&](const nlohmann::json& a) {
      std::vector<Element> out;
      for (const auto& c : a) out.push_back(g.element(c.get<Coords>()));
      return out;
    };
    auto cops = pts(j.at("cop_starts"));
    Element robber = g.element(j.at("robber_start").get<Coords>());
    const auto& result = j.at("outcome").at("result").get_ref<const std::string&>();
    if (result != "Captured" && result != "StepCapExceeded") return fail("unknown outcome '" + result + "'");
    rep.outcome = result == "Captured" ? Outcome::captured : Outcome::step_cap_exceeded;
    rep.turn = j.at("outcome").at("turn").get<std::uint64_t>();

    std::optional<std::uint64_t> captured_at;
    if (detail::occupied(cops, robber)) captured_at = 0;
    Side expect = Side::cop;
    std::uint64_t t = 0;
    for (const auto& m : j.at("moves")) {
      if (captured_at) return fail("moves recorded after capture at half-move " + std::to_string(*captured_at));
      ++t;
      const auto side = m.at("side").get<std::string>() == "cop" ? Side::cop : Side::robber;
      if (side != expect) return fail("half-move " + std::to_string(t) + " has the wrong side");
      const auto next_cops = pts(m.at("positions").at("cops"));
      const Element next_robber = g.element(m.at("positions").at("robber").get<Coords>());
      if (next_cops.size() != cops.size()) return fail("cop count changed at half-move " + std::to_string(t));
      if (side == Side::cop) {
        if (next_robber != robber) return fail("robber moved on a cop turn at half-move " + std::to_string(t));
        for (std::size_t i = 0; i < cops.size(); ++i) {
          const Element s = g.sub(next_cops[i], cops[i]);
          if (s != g.zero() && !inst.in_s(s))
            return fail("illegal cop move at half-move " + std::to_string(t));
        }
      } else {
        if (next_cops != cops) return fail("cops moved on a robber turn at half-move " + std::to_string(t));
        const Element s = g.sub(next_robber, robber);
        if (s != g.zero() && !inst.in_t(s)) return fail("illegal robber move at half-move " + std::to_string(t));
      }
      cops = next_cops;
      robber = next_robber;
      if (detail::occupied(cops, robber)) captured_at = t;
      expect = side == Side::cop ? Side::robber : Side::cop;
      ++rep.moves;
    }
    if (rep.outcome == Outcome::captured) {
      if (!captured_at) return fail("outcome says Captured but no capture occurs");
      if (*captured_at != rep.turn) return fail("capture turn does not match the recorded outcome");
    } else if (captured_at) {
      return fail("outcome says StepCapExceeded but a capture occurs");
    }
    rep.message = "ok";
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

}  // namespace copnum
