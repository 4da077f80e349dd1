#pragma once

// Finite abelian groups given as products of cyclic factors, plus quotients
// by cyclic subgroups realized on canonical coset representatives.
//
// Elements are addressed by their index in the group's enumeration order.
// For a product group that order is lexicographic on coordinate tuples (first
// factor most significant); a quotient group enumerates its representatives
// in the source group's order, so index order is lexicographic order at every
// level.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "copnum/error.hpp"

namespace copnum {

inline constexpr std::size_t kDefaultElementLimit = 1'000'000;

struct Element {
  std::uint32_t index = 0;

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

using Coords = std::vector<std::int64_t>;

class AbelianGroup {
 public:
  /// Z/m1 x ... x Z/mr. Rejects factors < 1 and orders above `limit`.
  static AbelianGroup product(const std::vector<std::int64_t>& factors,
                              std::size_t limit = kDefaultElementLimit) {
    if (factors.empty()) throw Error(Errc::invalid_argument, "a group needs at least one factor");
    std::uint64_t order = 1;
    for (auto m : factors) {
      if (m < 1) throw Error(Errc::invalid_argument, "factor " + std::to_string(m) + " is not >= 1");
      order *= static_cast<std::uint64_t>(m);
      if (order > limit)
        throw Error(Errc::resource_limit, "group order exceeds element limit " + std::to_string(limit));
    }
    auto impl = std::make_shared<Impl>();
    impl->order = static_cast<std::uint32_t>(order);
    impl->factors.assign(factors.begin(), factors.end());
    impl->strides.assign(factors.size(), 1);
    for (std::size_t i = factors.size() - 1; i > 0; --i)
      impl->strides[i - 1] = impl->strides[i] * factors[i];
    return AbelianGroup(std::move(impl));
  }

  std::size_t order() const { return impl_->order; }

  /// Moduli of the ambient coordinate system in which elements are labeled.
  /// For a quotient group these are the factors of the root product group.
  const std::vector<std::int64_t>& factors() const {
    return impl_->source ? impl_->source->factors() : impl_->factors;
  }

  bool is_product() const { return !impl_->source; }

  Element zero() const { return Element{0}; }

  bool contains(Element e) const { return e.index < impl_->order; }

  Element add(Element a, Element b) const {
    if (impl_->source) {
      const auto& q = *impl_;
      return Element{q.projection[q.source->add(Element{q.reps[a.index]}, Element{q.reps[b.index]}).index]};
    }
    std::uint64_t result = 0;
    std::uint64_t ra = a.index, rb = b.index;
    for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
      const auto stride = static_cast<std::uint64_t>(impl_->strides[i]);
      const auto m = static_cast<std::uint64_t>(impl_->factors[i]);
      const std::uint64_t ca = ra / stride, cb = rb / stride;
      ra %= stride;
      rb %= stride;
      result += ((ca + cb) % m) * stride;
    }
    return Element{static_cast<std::uint32_t>(result)};
  }

  Element neg(Element a) const {
    if (impl_->source) {
      const auto& q = *impl_;
      return Element{q.projection[q.source->neg(Element{q.reps[a.index]}).index]};
    }
    std::uint64_t result = 0;
    std::uint64_t ra = a.index;
    for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
      const auto stride = static_cast<std::uint64_t>(impl_->strides[i]);
      const auto m = static_cast<std::uint64_t>(impl_->factors[i]);
      const std::uint64_t c = ra / stride;
      ra %= stride;
      result += ((m - c) % m) * stride;
    }
    return Element{static_cast<std::uint32_t>(result)};
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  /// m·a for m >= 0, by doubling.
  Element times(std::uint64_t m, Element a) const {
    Element acc = zero();
    Element base = a;
    while (m > 0) {
      if (m & 1u) acc = add(acc, base);
      base = add(base, base);
      m >>= 1u;
    }
    return acc;
  }

  /// Coordinate label in the ambient coordinate system.
  Coords coords(Element e) const {
    if (impl_->source) return impl_->source->coords(Element{impl_->reps[e.index]});
    Coords out(impl_->factors.size());
    std::uint64_t r = e.index;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = static_cast<std::int64_t>(r / impl_->strides[i]);
      r %= impl_->strides[i];
    }
    return out;
  }

  /// Element from a coordinate tuple. Product groups reduce each coordinate
  /// modulo its factor; quotient groups accept only representative labels.
  Element element(std::span<const std::int64_t> coords) const {
    if (impl_->source) {
      const Element in_source = impl_->source->element(coords);
      const Element img{impl_->projection[in_source.index]};
      if (impl_->reps[img.index] != in_source.index)
        throw Error(Errc::invalid_argument, "coordinates are not a coset representative");
      return img;
    }
    if (coords.size() != impl_->factors.size())
      throw Error(Errc::invalid_argument, "expected " + std::to_string(impl_->factors.size()) +
                                              " coordinates, got " + std::to_string(coords.size()));
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const std::int64_t m = impl_->factors[i];
      const std::int64_t c = ((coords[i] % m) + m) % m;
      idx += static_cast<std::uint64_t>(c) * static_cast<std::uint64_t>(impl_->strides[i]);
    }
    return Element{static_cast<std::uint32_t>(idx)};
  }

  Element element(std::initializer_list<std::int64_t> coords) const {
    const Coords v(coords);
    return element(std::span<const std::int64_t>(v));
  }

  std::string to_string(Element e) const {
    std::ostringstream os;
    os << '(';
    const auto c = coords(e);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
  }

  std::vector<Element> elements() const {
    std::vector<Element> out(order());
    for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = Element{i};
    return out;
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.impl_ == b.impl_; }

 private:
  struct Impl {
    std::uint32_t order = 1;
    // product groups
    std::vector<std::int64_t> factors;
    std::vector<std::int64_t> strides;
    // quotient groups
    std::shared_ptr<const AbelianGroup> source;
    std::vector<std::uint32_t> reps;        // target index -> source index
    std::vector<std::uint32_t> projection;  // source index -> target index
  };

  explicit AbelianGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;

  friend class QuotientMap;
};

inline std::uint64_t element_order(const AbelianGroup& g, Element e) {
  if (g.is_product()) {
    const auto c = g.coords(e);
    const auto& f = g.factors();
    std::uint64_t l = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto m = static_cast<std::uint64_t>(f[i]);
      const auto part = m / std::gcd(static_cast<std::uint64_t>(c[i]), m);
      l = std::lcm(l, part);
    }
    return l;
  }
  std::uint64_t d = 1;
  for (Element x = e; x != g.zero(); x = g.add(x, e)) ++d;
  return d;
}

/// {0, k, 2k, ...} in generation order.
inline std::vector<Element> cyclic_subgroup(const AbelianGroup& g, Element k) {
  std::vector<Element> out{g.zero()};
  for (Element x = k; x != g.zero(); x = g.add(x, k)) out.push_back(x);
  return out;
}

/// Canonical projection G -> G/<k>.
class QuotientMap {
 public:
  QuotientMap(const AbelianGroup& source, Element k) : source_(source), kernel_generator_(k), target_(source) {
    if (k == source.zero()) throw Error(Errc::zero_k, "quotient by the trivial subgroup is not supported");
    const auto sub = cyclic_subgroup(source, k);
    const std::uint32_t n = static_cast<std::uint32_t>(source.order());
    constexpr std::uint32_t unset = ~std::uint32_t{0};
    auto impl = std::make_shared<AbelianGroup::Impl>();
    impl->projection.assign(n, unset);
    for (std::uint32_t x = 0; x < n; ++x) {
      if (impl->projection[x] != unset) continue;
      const auto id = static_cast<std::uint32_t>(impl->reps.size());
      impl->reps.push_back(x);
      for (Element h : sub) impl->projection[source.add(Element{x}, h).index] = id;
    }
    impl->order = static_cast<std::uint32_t>(impl->reps.size());
    impl->source = std::make_shared<const AbelianGroup>(source);
    projection_ = impl->projection;
    target_ = AbelianGroup(std::move(impl));
  }

  const AbelianGroup& source() const { return source_; }
  const AbelianGroup& target() const { return target_; }
  Element kernel_generator() const { return kernel_generator_; }

  Element operator()(Element x) const { return Element{projection_[x.index]}; }

  /// Source index -> target index.
  const std::vector<std::uint32_t>& table() const { return projection_; }

  /// The canonical (lexicographically smallest) member of the coset of x.
  Element representative(Element y) const { return Element{target_.impl_->reps[y.index]}; }

 private:
  AbelianGroup source_;
  Element kernel_generator_;
  AbelianGroup target_;
  std::vector<std::uint32_t> projection_;
};

inline QuotientMap quotient_by_cyclic(const AbelianGroup& g, Element k) { return QuotientMap(g, k); }

/// True iff the subgroup generated by `gens` is all of g.
inline bool is_generating(const AbelianGroup& g, std::span<const Element> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> frontier{g.zero()};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (Element s : gens) {
      const Element y = g.add(x, s);
      if (!seen[y.index]) {
        seen[y.index] = 1;
        ++reached;
        frontier.push_back(y);
      }
    }
  }
  return reached == g.order();
}

/// Smallest prime factor by trial division; 1 for n <= 1.
inline std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n <= 1) return 1;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

}  // namespace copnum
