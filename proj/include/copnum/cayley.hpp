#pragma once

// Game instances (G, S, T) on abelian Cayley graphs and their serialization.
//
// S is the cop moveset and T ⊆ S the robber moveset. The identity is never
// stored in S: every vertex carries an implicit loop, so staying put is legal
// for both sides on every turn.

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "copnum/abelian.hpp"
#include "copnum/error.hpp"

namespace copnum {

enum class BoundaryKind { not_boundary, empty_t, complete_graph, tiny_group, inverse_pair, singleton_t };

inline const char* boundary_name(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::not_boundary: return "NotBoundary";
    case BoundaryKind::empty_t: return "EmptyT";
    case BoundaryKind::complete_graph: return "CompleteGraph";
    case BoundaryKind::tiny_group: return "TinyGroup";
    case BoundaryKind::inverse_pair: return "InversePair";
    case BoundaryKind::singleton_t: return "SingletonT";
  }
  return "?";
}

enum class Side { cop, robber };

class GameInstance {
 public:
  /// Validates and normalizes (G, S, T). 0_G is stripped from both sets;
  /// `directed_hint`, when given, must agree with S != -S.
  static GameInstance build(const AbelianGroup& group, std::vector<Element> s, std::vector<Element> t,
                            std::optional<bool> directed_hint = std::nullopt) {
    auto normalize = [&](std::vector<Element>& v) {
      for (Element e : v)
        if (!group.contains(e)) throw Error(Errc::invalid_argument, "element outside the group");
      std::erase(v, group.zero());
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    normalize(s);
    normalize(t);
    if (s.empty() && group.order() > 1) throw Error(Errc::empty_s, "cop moveset is empty");
    if (!std::includes(s.begin(), s.end(), t.begin(), t.end()))
      throw Error(Errc::t_not_subset, "robber moveset is not a subset of the cop moveset");
    if (!is_generating(group, s)) throw Error(Errc::non_generating, "S does not generate the group");

    GameInstance inst(group, std::move(s), std::move(t));
    if (directed_hint && *directed_hint != inst.directed_)
      throw Error(Errc::invalid_argument,
                  std::string("directed hint contradicts S: S is ") + (inst.directed_ ? "not " : "") +
                      "closed under negation");
    return inst;
  }

  const AbelianGroup& group() const { return group_; }
  const std::vector<Element>& cop_moves() const { return s_; }
  const std::vector<Element>& robber_moves() const { return t_; }
  bool directed() const { return directed_; }
  std::size_t n() const { return group_.order(); }

  bool in_s(Element e) const { return in_s_[e.index] != 0; }
  bool in_t(Element e) const { return in_t_[e.index] != 0; }

  /// Same group and S, robber restricted to `t`.
  GameInstance with_robber_moves(std::vector<Element> t) const { return build(group_, s_, std::move(t)); }

 private:
  GameInstance(AbelianGroup g, std::vector<Element> s, std::vector<Element> t)
      : group_(std::move(g)), s_(std::move(s)), t_(std::move(t)) {
    in_s_.assign(group_.order(), 0);
    in_t_.assign(group_.order(), 0);
    for (Element e : s_) in_s_[e.index] = 1;
    for (Element e : t_) in_t_[e.index] = 1;
    directed_ = false;
    for (Element e : s_)
      if (!in_s_[group_.neg(e).index]) directed_ = true;
  }

  AbelianGroup group_;
  std::vector<Element> s_;
  std::vector<Element> t_;
  std::vector<char> in_s_;
  std::vector<char> in_t_;
  bool directed_ = false;
};

inline BoundaryKind classify_boundary(const GameInstance& inst) {
  const auto n = inst.n();
  const auto& t = inst.robber_moves();
  if (t.empty()) return BoundaryKind::empty_t;
  if (inst.cop_moves().size() + 1 == n) return BoundaryKind::complete_graph;
  if (n <= 2) return BoundaryKind::tiny_group;
  if (!inst.directed()) {
    const auto& g = inst.group();
    if (t.size() == 2 && g.neg(t[0]) == t[1]) return BoundaryKind::inverse_pair;
    if (t.size() == 1) return BoundaryKind::singleton_t;
  }
  return BoundaryKind::not_boundary;
}

/// Closed out-neighborhood: v itself plus v + m for each move m of the side.
inline std::vector<Element> out_neighbors(const GameInstance& inst, Element v, Side side) {
  const auto& moves = side == Side::cop ? inst.cop_moves() : inst.robber_moves();
  std::vector<Element> out{v};
  for (Element m : moves) out.push_back(inst.group().add(v, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Shortest-path distances in Cay(G, moves) from every vertex to the set
/// `targets`, i.e. the fewest additions of moves that land in the set.
inline std::vector<std::uint32_t> distances_to(const AbelianGroup& g, const std::vector<Element>& moves,
                                               const std::vector<Element>& targets) {
  constexpr std::uint32_t inf = ~std::uint32_t{0};
  std::vector<std::uint32_t> dist(g.order(), inf);
  std::deque<Element> queue;
  for (Element x : targets) {
    if (dist[x.index] == inf) {
      dist[x.index] = 0;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element m : moves) {
      const Element y = g.sub(x, m);
      if (dist[y.index] == inf) {
        dist[y.index] = dist[x.index] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

enum class GraphFormat { dot, json };

inline GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw Error(Errc::unknown_format, "unknown graph format '" + std::string(name) + "'");
}

inline nlohmann::json instance_to_json(const GameInstance& inst) {
  const auto& g = inst.group();
  if (!g.is_product()) throw Error(Errc::invalid_argument, "only product-group instances serialize");
  nlohmann::json j;
  j["factors"] = g.factors();
  j["S"] = nlohmann::json::array();
  j["T"] = nlohmann::json::array();
  for (Element e : inst.cop_moves()) j["S"].push_back(g.coords(e));
  for (Element e : inst.robber_moves()) j["T"].push_back(g.coords(e));
  return j;
}

inline GameInstance instance_from_json(const nlohmann::json& j) {
  try {
    const auto factors = j.at("factors").get<std::vector<std::int64_t>>();
    const auto g = AbelianGroup::product(factors);
    auto read = [&](const char* key) {
      std::vector<Element> out;
      for (const auto& c : j.at(key)) out.push_back(g.element(c.get<Coords>()));
      return out;
    };
    auto s = read("S");
    auto t = j.contains("T") ? read("T") : s;
    std::optional<bool> hint;
    if (j.contains("directed")) hint = j.at("directed").get<bool>();
    return GameInstance::build(g, std::move(s), std::move(t), hint);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

inline std::string export_graph(const GameInstance& inst, GraphFormat format) {
  const auto& g = inst.group();
  if (format == GraphFormat::json) return instance_to_json(inst).dump() + "\n";

  std::ostringstream os;
  const bool undirected = !inst.directed();
  os << (undirected ? "graph" : "digraph") << " cayley {\n";
  os << "  graph [reflexive=true];\n";
  for (Element v : g.elements()) os << "  \"" << g.to_string(v) << "\";\n";
  const char* arrow = undirected ? " -- " : " -> ";
  for (Element u : g.elements()) {
    std::vector<Element> heads;
    for (Element s : inst.cop_moves()) {
      const Element v = g.add(u, s);
      if (undirected && v < u) continue;
      heads.push_back(v);
    }
    std::sort(heads.begin(), heads.end());
    heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
    for (Element v : heads) os << "  \"" << g.to_string(u) << "\"" << arrow << "\"" << g.to_string(v) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

/// A reflexive digraph without group structure; used for graphs that are not
/// vertex-transitive, such as a Cayley graph with a path attached.
struct GeneralGraph {
  std::uint32_t vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;  // sorted, no loops
  std::vector<std::string> labels;                            // optional, one per vertex

  std::vector<std::vector<std::uint32_t>> out_lists() const {
    std::vector<std::vector<std::uint32_t>> out(vertices);
    for (auto [u, v] : arcs) out[u].push_back(v);
    return out;
  }

  bool has_arc(std::uint32_t u, std::uint32_t v) const {
    return std::binary_search(arcs.begin(), arcs.end(), std::pair{u, v});
  }

  bool strongly_connected() const {
    if (vertices == 0) return true;
    auto reach_all = [&](bool reverse) {
      std::vector<std::vector<std::uint32_t>> adj(vertices);
      for (auto [u, v] : arcs) (reverse ? adj[v] : adj[u]).push_back(reverse ? u : v);
      std::vector<char> seen(vertices, 0);
      std::vector<std::uint32_t> stack{0};
      seen[0] = 1;
      std::size_t count = 1;
      while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (auto y : adj[x])
          if (!seen[y]) {
            seen[y] = 1;
            ++count;
            stack.push_back(y);
          }
      }
      return count == vertices;
    };
    return reach_all(false) && reach_all(true);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["vertices"] = vertices;
    j["arcs"] = nlohmann::json::array();
    for (auto [u, v] : arcs) j["arcs"].push_back({u, v});
    if (!labels.empty()) j["labels"] = labels;
    return j;
  }

  static GeneralGraph from_json(const nlohmann::json& j) {
    try {
      GeneralGraph g;
      g.vertices = j.at("vertices").get<std::uint32_t>();
      for (const auto& a : j.at("arcs")) {
        const auto u = a.at(0).get<std::uint32_t>(), v = a.at(1).get<std::uint32_t>();
        if (u >= g.vertices || v >= g.vertices) throw Error(Errc::parse_error, "arc endpoint out of range");
        if (u != v) g.arcs.emplace_back(u, v);
      }
      std::sort(g.arcs.begin(), g.arcs.end());
      g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
      if (j.contains("labels")) g.labels = j.at("labels").get<std::vector<std::string>>();
      return g;
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::parse_error, e.what());
    }
  }

  static GeneralGraph from_instance(const GameInstance& inst) {
    GeneralGraph out;
    const auto& g = inst.group();
    out.vertices = static_cast<std::uint32_t>(g.order());
    for (Element u : g.elements()) {
      out.labels.push_back(g.to_string(u));
      for (Element s : inst.cop_moves()) out.arcs.emplace_back(u.index, g.add(u, s).index);
    }
    std::sort(out.arcs.begin(), out.arcs.end());
    out.arcs.erase(std::unique(out.arcs.begin(), out.arcs.end()), out.arcs.end());
    return out;
  }
};

}  // namespace copnum
