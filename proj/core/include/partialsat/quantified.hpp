#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "partialsat/assignment.hpp"
#include "partialsat/formula.hpp"
#include "partialsat/semantics.hpp"

namespace partialsat {

// exists B . matrix. Quantifying an atom absent from the matrix is allowed.
struct ExistentialFormula {
  Formula matrix = Formula::top();
  AtomSet quantified;

  // atoms(matrix) \ quantified
  AtomSet free_atoms() const;
};

// `exists B1 B2 . <formula>`; text without the prefix quantifies nothing.
ExistentialFormula parse_existential(std::string_view text);
std::string print(const ExistentialFormula& ef);

inline constexpr std::size_t kDefaultExpansionCap = 12;

struct ShannonOptions {
  std::size_t cap = kDefaultExpansionCap;
  // Keep `false` disjuncts instead of dropping them.
  bool keep_bottom = false;
};

// Disjunction over all total delta on the quantified atoms (sweep order of
// ExtensionStream) of matrix|delta. A disjunct that is a conjunction with
// literal conjuncts is tidied: repeated literals are dropped and, when the
// literals are consistent, the remaining conjuncts are reduced under them.
// This preserves both the disjunct's equivalence class and its three-valued
// truth wherever it is T. A `true` disjunct makes the whole expansion
// `true`; no disjuncts yield `false`.
Formula shannon_expand(const ExistentialFormula& ef,
                       const ShannonOptions& opts = {});

struct ExistsValidation {
  bool holds = false;
  // First delta (sweep order) with mu ∪ delta validating the matrix.
  std::optional<Assignment> delta;
};

// Some total delta over the quantified atoms has mu ∪ delta validate the
// matrix. Throws PreconditionError if mu binds a quantified atom.
ExistsValidation exists_validates(const Assignment& mu,
                                  const ExistentialFormula& ef,
                                  std::size_t cap = kDefaultBruteCap);

struct ExistsEntailment {
  bool holds = false;
  // A total eta over the free atoms extending mu with no satisfying delta.
  std::optional<Assignment> falsifying;
};

// Every total eta over the free atoms extending mu admits some delta with
// eta ∪ delta satisfying the matrix (delta may depend on eta).
ExistsEntailment exists_entails(const Assignment& mu,
                                const ExistentialFormula& ef,
                                std::size_t cap = kDefaultBruteCap);

}  // namespace partialsat
