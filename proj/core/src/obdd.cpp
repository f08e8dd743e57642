#include "partialsat/obdd.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "partialsat/errors.hpp"

namespace partialsat {

namespace {

struct TripleHash {
  std::size_t operator()(const std::tuple<std::uint32_t, std::uint32_t,
                                          std::uint32_t>& t) const noexcept {
    auto [a, b, c] = t;
    std::uint64_t h = a;
    h = h * 0x9E3779B97F4A7C15ULL + b;
    h = h * 0x9E3779B97F4A7C15ULL + c;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

using Key = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;

// Mutable construction state; discarded once the diagram is built.
class Builder {
 public:
  Builder(std::vector<Obdd::Node>& nodes, std::size_t budget)
      : nodes_(nodes), budget_(budget) {}

  Obdd::Ref make(std::uint32_t level, Obdd::Ref low, Obdd::Ref high) {
    if (low == high) return low;
    Key key{level, low, high};
    if (auto it = unique_.find(key); it != unique_.end()) return it->second;
    if (nodes_.size() >= budget_ + 2) {  // terminals are free
      throw ResourceLimitError("OBDD node budget of " +
                               std::to_string(budget_) + " exceeded");
    }
    nodes_.push_back({level, low, high});
    auto ref = static_cast<Obdd::Ref>(nodes_.size() - 1);
    unique_.emplace(key, ref);
    return ref;
  }

  std::uint32_t level(Obdd::Ref r) const { return nodes_[r].level; }

  Obdd::Ref negate(Obdd::Ref r) {
    if (r == Obdd::kFalse) return Obdd::kTrue;
    if (r == Obdd::kTrue) return Obdd::kFalse;
    if (auto it = neg_memo_.find(r); it != neg_memo_.end()) return it->second;
    const Obdd::Node n = nodes_[r];
    Obdd::Ref out = make(n.level, negate(n.low), negate(n.high));
    neg_memo_.emplace(r, out);
    return out;
  }

  Obdd::Ref apply(Op op, Obdd::Ref a, Obdd::Ref b) {
    if (auto t = terminal_case(op, a, b)) return *t;
    Key key{static_cast<std::uint32_t>(op), a, b};
    if (auto it = apply_memo_.find(key); it != apply_memo_.end()) {
      return it->second;
    }
    const std::uint32_t la = level(a);
    const std::uint32_t lb = level(b);
    const std::uint32_t top = std::min(la, lb);
    auto [a0, a1] = cofactors(a, top);
    auto [b0, b1] = cofactors(b, top);
    Obdd::Ref low = apply(op, a0, b0);
    Obdd::Ref high = apply(op, a1, b1);
    Obdd::Ref out = make(top, low, high);
    apply_memo_.emplace(key, out);
    return out;
  }

 private:
  std::pair<Obdd::Ref, Obdd::Ref> cofactors(Obdd::Ref r, std::uint32_t lvl) {
    if (level(r) != lvl) return {r, r};
    return {nodes_[r].low, nodes_[r].high};
  }

  std::optional<Obdd::Ref> terminal_case(Op op, Obdd::Ref a, Obdd::Ref b) {
    switch (op) {
      case Op::And:
        if (a == Obdd::kFalse || b == Obdd::kFalse) return Obdd::kFalse;
        if (a == Obdd::kTrue) return b;
        if (b == Obdd::kTrue || a == b) return a;
        break;
      case Op::Or:
        if (a == Obdd::kTrue || b == Obdd::kTrue) return Obdd::kTrue;
        if (a == Obdd::kFalse) return b;
        if (b == Obdd::kFalse || a == b) return a;
        break;
      case Op::Implies:
        if (a == Obdd::kFalse || b == Obdd::kTrue || a == b) return Obdd::kTrue;
        if (a == Obdd::kTrue) return b;
        if (b == Obdd::kFalse) return negate(a);
        break;
      case Op::Iff:
        if (a == b) return Obdd::kTrue;
        if (a == Obdd::kTrue) return b;
        if (b == Obdd::kTrue) return a;
        if (a == Obdd::kFalse) return negate(b);
        if (b == Obdd::kFalse) return negate(a);
        break;
      default:
        break;
    }
    return std::nullopt;
  }

  std::vector<Obdd::Node>& nodes_;
  std::size_t budget_;
  std::unordered_map<Key, Obdd::Ref, TripleHash> unique_;
  std::unordered_map<Key, Obdd::Ref, TripleHash> apply_memo_;
  std::unordered_map<Obdd::Ref, Obdd::Ref> neg_memo_;
};

}  // namespace

Obdd Obdd::build(const Formula& f, std::size_t node_budget) {
  AtomSet set = atoms(f);
  return build(f, std::vector<Atom>(set.begin(), set.end()), node_budget);
}

Obdd Obdd::build(const Formula& f, std::vector<Atom> order,
                 std::size_t node_budget) {
  std::map<Atom, std::uint32_t> level_of;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!level_of.emplace(order[i], static_cast<std::uint32_t>(i)).second) {
      throw PreconditionError("variable order lists " + order[i].name() +
                              " twice");
    }
  }
  for (const auto& a : atoms(f)) {
    if (!level_of.contains(a)) {
      throw PreconditionError("variable order does not cover atom " + a.name());
    }
  }

  Obdd out;
  out.order_ = std::move(order);
  const auto terminal_level = static_cast<std::uint32_t>(out.order_.size());
  out.nodes_.push_back({terminal_level, kFalse, kFalse});
  out.nodes_.push_back({terminal_level, kTrue, kTrue});
  Builder builder(out.nodes_, node_budget);

  std::unordered_map<const void*, Ref> memo;
  std::function<Ref(const Formula&)> go = [&](const Formula& g) -> Ref {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    Ref r = kFalse;
    switch (g.op()) {
      case Op::True:
        r = kTrue;
        break;
      case Op::False:
        r = kFalse;
        break;
      case Op::Var:
        r = builder.make(level_of.at(g.atom()), kFalse, kTrue);
        break;
      case Op::Not:
        r = builder.negate(go(g.lhs()));
        break;
      default:
        r = builder.apply(g.op(), go(g.lhs()), go(g.rhs()));
    }
    memo.emplace(g.id(), r);
    return r;
  };
  out.root_ = go(f);
  return out;
}

std::size_t Obdd::internal_node_count() const {
  std::unordered_set<Ref> seen;
  std::vector<Ref> stack{root_};
  while (!stack.empty()) {
    Ref r = stack.back();
    stack.pop_back();
    if (is_terminal(r) || !seen.insert(r).second) continue;
    stack.push_back(nodes_[r].low);
    stack.push_back(nodes_[r].high);
  }
  return seen.size();
}

std::vector<Assignment> Obdd::paths() const {
  std::vector<Assignment> out;
  std::function<void(Ref, const Assignment&)> walk = [&](Ref r,
                                                         const Assignment& mu) {
    if (r == kFalse) return;
    if (r == kTrue) {
      out.push_back(mu);
      return;
    }
    const Node& n = nodes_[r];
    const Atom& a = order_[n.level];
    walk(n.high, mu.with(a, true));
    walk(n.low, mu.with(a, false));
  };
  walk(root_, Assignment{});
  return out;
}

bool same_diagram(const Obdd& a, const Obdd& b) {
  if (a.order_ != b.order_) return false;
  std::unordered_map<Obdd::Ref, Obdd::Ref> iso;
  std::function<bool(Obdd::Ref, Obdd::Ref)> eq = [&](Obdd::Ref x,
                                                     Obdd::Ref y) -> bool {
    if (a.is_terminal(x) || b.is_terminal(y)) return x == y;
    if (auto it = iso.find(x); it != iso.end()) return it->second == y;
    const auto& nx = a.nodes_[x];
    const auto& ny = b.nodes_[y];
    if (nx.level != ny.level) return false;
    if (!eq(nx.low, ny.low) || !eq(nx.high, ny.high)) return false;
    iso.emplace(x, y);
    return true;
  };
  return eq(a.root_, b.root_);
}

}  // namespace partialsat
