#include "partialsat/assignment.hpp"

#include "partialsat/errors.hpp"

namespace partialsat {

Assignment Assignment::from_literals(const std::vector<Literal>& lits) {
  Assignment mu;
  for (const auto& l : lits) {
    auto [it, inserted] = mu.bindings_.emplace(l.atom, l.positive);
    if (!inserted && it->second != l.positive) {
      throw PreconditionError("inconsistent literal set: both " +
                              l.atom.name() + " and !" + l.atom.name());
    }
  }
  return mu;
}

std::optional<bool> Assignment::value(const Atom& a) const {
  auto it = bindings_.find(a);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

AtomSet Assignment::domain() const {
  AtomSet out;
  for (const auto& [a, v] : bindings_) out.insert(a);
  return out;
}

bool Assignment::is_total_for(const AtomSet& atoms) const {
  for (const auto& a : atoms) {
    if (!binds(a)) return false;
  }
  return true;
}

std::vector<Literal> Assignment::literals() const {
  std::vector<Literal> out;
  out.reserve(bindings_.size());
  for (const auto& [a, v] : bindings_) out.push_back({a, v});
  return out;
}

Formula Assignment::to_cube() const { return cube_of(literals()); }

Assignment Assignment::with(const Atom& a, bool v) const {
  Assignment out = *this;
  auto [it, inserted] = out.bindings_.emplace(a, v);
  if (!inserted && it->second != v) {
    throw PreconditionError("conflicting binding for " + a.name());
  }
  return out;
}

Assignment Assignment::restrict_to(const AtomSet& keep) const {
  Assignment out;
  for (const auto& [a, v] : bindings_) {
    if (keep.contains(a)) out.bindings_.emplace(a, v);
  }
  return out;
}

bool Assignment::subset_of(const Assignment& other) const {
  for (const auto& [a, v] : bindings_) {
    auto w = other.value(a);
    if (!w || *w != v) return false;
  }
  return true;
}

bool Assignment::conflicts_with(const Assignment& other) const {
  for (const auto& [a, v] : bindings_) {
    auto w = other.value(a);
    if (w && *w != v) return true;
  }
  return false;
}

std::vector<std::string> Assignment::literal_strings() const {
  std::vector<std::string> out;
  for (const auto& l : literals()) out.push_back(l.str());
  return out;
}

std::string Assignment::str() const {
  std::string out;
  for (const auto& l : literals()) {
    if (!out.empty()) out += ", ";
    out += l.str();
  }
  return out;
}

Assignment unite(const Assignment& mu, const Assignment& delta) {
  Assignment out = mu;
  for (const auto& [a, v] : delta.bindings()) out = out.with(a, v);
  return out;
}

ExtensionStream::ExtensionStream(Assignment base, const AtomSet& atoms)
    : base_(std::move(base)) {
  for (const auto& [a, v] : base_.bindings()) {
    if (!atoms.contains(a)) {
      throw PreconditionError("assignment binds " + a.name() +
                              " outside the extension domain");
    }
  }
  for (const auto& a : atoms) {
    if (!base_.binds(a)) free_.push_back(a);
  }
  if (free_.size() > 63) {
    throw ResourceLimitError("too many free atoms to enumerate extensions");
  }
  total_ = std::uint64_t{1} << free_.size();
}

std::optional<Assignment> ExtensionStream::next() {
  if (index_ >= total_) return std::nullopt;
  Assignment out = base_;
  const std::size_t n = free_.size();
  for (std::size_t i = 0; i < n; ++i) {
    // bit set => false, so index 0 is the all-true extension
    const bool bit = (index_ >> (n - 1 - i)) & 1U;
    out = out.with(free_[i], !bit);
  }
  ++index_;
  return out;
}

}  // namespace partialsat
