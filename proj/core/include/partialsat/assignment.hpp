#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partialsat/formula.hpp"

namespace partialsat {

// A partial (or total) truth assignment: an immutable map Atom -> bool.
// Views: map (bindings), literal set (literals), cube (to_cube).
class Assignment {
 public:
  Assignment() = default;

  // Throws PreconditionError on a complementary pair {A, !A}.
  static Assignment from_literals(const std::vector<Literal>& lits);
  // Parses `A1, !A3`.
  static Assignment parse(std::string_view text);

  const std::map<Atom, bool>& bindings() const noexcept { return bindings_; }
  std::size_t size() const noexcept { return bindings_.size(); }
  bool empty() const noexcept { return bindings_.empty(); }

  std::optional<bool> value(const Atom& a) const;
  bool binds(const Atom& a) const { return bindings_.contains(a); }

  AtomSet domain() const;
  bool is_total_for(const AtomSet& atoms) const;

  // Literals in atom order.
  std::vector<Literal> literals() const;
  Formula to_cube() const;

  // A copy with one more binding. Throws on a conflicting rebind.
  Assignment with(const Atom& a, bool value) const;
  Assignment with(const Literal& l) const { return with(l.atom, l.positive); }

  // Bindings restricted to `keep`.
  Assignment restrict_to(const AtomSet& keep) const;

  // True if every binding of *this is also in `other`.
  bool subset_of(const Assignment& other) const;
  // True if some atom is bound to opposite values.
  bool conflicts_with(const Assignment& other) const;

  // `A1, !A3` (empty string for the empty assignment).
  std::string str() const;
  std::vector<std::string> literal_strings() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment& a, const Assignment& b) {
    return a.literals() <=> b.literals();
  }

 private:
  std::map<Atom, bool> bindings_;
};

// mu ∪ delta. Throws PreconditionError on a conflicting binding.
Assignment unite(const Assignment& mu, const Assignment& delta);

// Lazy, single-consumer stream of every total extension of `base` over
// `atoms`, in lexicographic order: the smallest free atom is the most
// significant position and `true` precedes `false`.
class ExtensionStream {
 public:
  // Throws PreconditionError if base binds an atom outside `atoms`, and
  // ResourceLimitError if more than 63 atoms are free.
  ExtensionStream(Assignment base, const AtomSet& atoms);

  std::optional<Assignment> next();

  std::size_t free_count() const noexcept { return free_.size(); }
  // 2^free_count().
  std::uint64_t total() const noexcept { return total_; }

 private:
  Assignment base_;
  std::vector<Atom> free_;
  std::uint64_t total_ = 1;
  std::uint64_t index_ = 0;
};

inline ExtensionStream extensions(const Assignment& mu, const AtomSet& atoms) {
  return ExtensionStream(mu, atoms);
}

}  // namespace partialsat
