#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "partialsat/assignment.hpp"
#include "partialsat/formula.hpp"

namespace partialsat {

// Three-valued truth: true, false, unknown.
enum class TruthValue3 : std::uint8_t { T, F, U };

std::string_view to_string(TruthValue3 v) noexcept;

// Kleene-style evaluation. Unbound atoms are U.
TruthValue3 eval3(const Formula& f, const Assignment& mu);

// Connective tables used by eval3.
TruthValue3 not3(TruthValue3 a) noexcept;
TruthValue3 apply3(Op op, TruthValue3 a, TruthValue3 b) noexcept;

// f|mu: substitute every bound atom by its constant, then propagate
// constants bottom-up. No other simplification is performed. The result
// contains no constant unless it is exactly `true` or `false`.
Formula residual(const Formula& f, const Assignment& mu);

// Constant propagation of a single node whose operands are already folded.
Formula fold_not(const Formula& operand);
Formula fold_binary(Op op, const Formula& lhs, const Formula& rhs);

// Classical satisfaction by a total assignment. Throws PreconditionError if
// eta leaves an atom of f unbound.
bool sat_total(const Formula& f, const Assignment& eta);

inline constexpr std::size_t kDefaultBruteCap = 22;

// Exhaustive truth-table sweeps. Throw ResourceLimitError above `cap` atoms.
bool brute_valid(const Formula& f, std::size_t cap = kDefaultBruteCap);
bool brute_satisfiable(const Formula& f, std::size_t cap = kDefaultBruteCap);
bool brute_equivalent(const Formula& f, const Formula& g,
                      std::size_t cap = kDefaultBruteCap);

// First total assignment over atoms(f) (sweep order as ExtensionStream) with
// the requested truth value, if any.
std::optional<Assignment> brute_find(const Formula& f, bool want,
                                     std::size_t cap = kDefaultBruteCap);

// Flat, index-based evaluator for fast truth-table sweeps. Atom i of
// `order()` is bit (n-1-i) of the row index; bit set means false.
class TruthTable {
 public:
  TruthTable(const Formula& f, std::vector<Atom> order);

  const std::vector<Atom>& order() const noexcept { return order_; }
  bool eval_row(std::uint64_t row) const;
  Assignment row_assignment(std::uint64_t row) const;

 private:
  struct Instr {
    Op op;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
  };
  std::uint32_t compile(const Formula& f);

  std::vector<Atom> order_;
  std::vector<Instr> code_;
  mutable std::vector<std::uint8_t> scratch_;
};

}  // namespace partialsat
