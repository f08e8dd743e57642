#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "partialsat/assignment.hpp"
#include "partialsat/formula.hpp"

namespace partialsat {

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

// Reduced ordered BDD over a fixed variable order. Nodes are hash-consed
// inside one diagram; the diagram is immutable once built.
class Obdd {
 public:
  using Ref = std::uint32_t;
  static constexpr Ref kFalse = 0;
  static constexpr Ref kTrue = 1;

  struct Node {
    std::uint32_t level;  // index into order(); terminals use order().size()
    Ref low;
    Ref high;
  };

  // Builds the diagram of f by recursive apply. `order` must contain every
  // atom of f (extra atoms are allowed). Throws ResourceLimitError when more
  // than `node_budget` nodes would be allocated.
  static Obdd build(const Formula& f, std::vector<Atom> order,
                    std::size_t node_budget = kDefaultNodeBudget);
  // Lexicographic order over atoms(f).
  static Obdd build(const Formula& f,
                    std::size_t node_budget = kDefaultNodeBudget);

  Ref root() const noexcept { return root_; }
  const std::vector<Atom>& order() const noexcept { return order_; }
  const Node& node(Ref r) const { return nodes_.at(r); }
  bool is_terminal(Ref r) const noexcept { return r <= kTrue; }

  // Internal nodes reachable from the root.
  std::size_t internal_node_count() const;

  // One partial assignment per root-to-true path (high edge explored first).
  std::vector<Assignment> paths() const;

  // True if both diagrams have the same order and isomorphic reachable graphs.
  friend bool same_diagram(const Obdd& a, const Obdd& b);

 private:
  Obdd() = default;

  std::vector<Atom> order_;
  std::vector<Node> nodes_;
  Ref root_ = kFalse;
};

}  // namespace partialsat
