#include "partialsat/cnfize.hpp"

#include <map>
#include <sstream>

#include "partialsat/enumeration.hpp"
#include "partialsat/errors.hpp"
#include "partialsat/semantics.hpp"

namespace partialsat {

Formula TseitinDefinition::defining_formula() const {
  return Formula::iff(Formula::var(label),
                      Formula::binary(op, lhs.to_formula(), rhs.to_formula()));
}

std::vector<std::vector<Literal>> definition_clauses(const TseitinDefinition& d) {
  const Literal b{d.label, true};
  const Literal nb = b.negate();
  const Literal& l1 = d.lhs;
  const Literal& l2 = d.rhs;
  switch (d.op) {
    case Op::And:
      return {{nb, l1}, {nb, l2}, {b, l1.negate(), l2.negate()}};
    case Op::Or:
      return {{nb, l1, l2}, {b, l1.negate()}, {b, l2.negate()}};
    case Op::Implies:
      return {{nb, l1.negate(), l2}, {b, l1}, {b, l2.negate()}};
    case Op::Iff:
      return {{nb, l1.negate(), l2},
              {nb, l1, l2.negate()},
              {b, l1, l2},
              {b, l1.negate(), l2.negate()}};
    default:
      throw PreconditionError("not a binary connective");
  }
}

namespace {

class Encoder {
 public:
  explicit Encoder(AtomSet taken) : taken_(std::move(taken)) {}

  Literal label(const Formula& g) {
    if (auto l = as_literal(g)) return *l;
    if (g.op() == Op::Not) return label(g.lhs()).negate();
    const Literal l1 = label(g.lhs());
    const Literal l2 = label(g.rhs());
    Atom b = fresh();
    result_.definitions.push_back({b, g.op(), l1, l2});
    return {b, true};
  }

  TseitinResult finish(std::vector<std::vector<Literal>> top) {
    for (const auto& d : result_.definitions) {
      for (auto& c : definition_clauses(d)) top.push_back(std::move(c));
    }
    result_.cnf = from_clauses(top);
    return std::move(result_);
  }

 private:
  Atom fresh() {
    for (;;) {
      Atom candidate("B" + std::to_string(++counter_));
      if (!taken_.contains(candidate)) {
        result_.fresh_atoms.push_back(candidate);
        return candidate;
      }
    }
  }

  AtomSet taken_;
  std::size_t counter_ = 0;
  TseitinResult result_;
};

}  // namespace

TseitinResult tseitin(const Formula& f) {
  const Formula g = residual(f, {});
  if (g.is_const() || as_literal(g)) {
    TseitinResult r;
    r.cnf = g;
    return r;
  }
  Encoder enc(atoms(g));
  std::vector<std::vector<Literal>> top;
  for (const auto& c : conjuncts(g)) {
    std::vector<Literal> clause;
    for (const auto& d : disjuncts(c)) clause.push_back(enc.label(d));
    top.push_back(std::move(clause));
  }
  return enc.finish(std::move(top));
}

Formula strip_tautologies(const Formula& cnf) {
  auto cls = clauses(cnf);
  std::vector<std::vector<Literal>> kept;
  for (auto& c : cls) {
    bool taut = false;
    for (std::size_t i = 0; i < c.size() && !taut; ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (c[i].atom == c[j].atom && c[i].positive != c[j].positive) {
          taut = true;
          break;
        }
      }
    }
    if (!taut) kept.push_back(std::move(c));
  }
  if (kept.size() == cls.size()) return cnf;
  return from_clauses(kept);
}

std::string_view to_string(DeltaOutcome o) noexcept {
  switch (o) {
    case DeltaOutcome::Holds:
      return "holds";
    case DeltaOutcome::NotValidated:
      return "not-validated";
    case DeltaOutcome::FalsifiedByExtension:
      return "falsified";
    default:
      return "inconsistent";
  }
}

namespace {

AtomSet fresh_set(const TseitinResult& enc, std::size_t cap) {
  if (enc.fresh_atoms.size() > cap) {
    throw ResourceLimitError("fresh-atom sweep over " +
                             std::to_string(enc.fresh_atoms.size()) +
                             " atoms exceeds cap " + std::to_string(cap));
  }
  return {enc.fresh_atoms.begin(), enc.fresh_atoms.end()};
}

bool satisfiable(const Formula& g, const EntailOptions& opts) {
  if (atoms(g).size() <= opts.brute_cap) return brute_satisfiable(g, opts.brute_cap);
  return dpll_solve(g).has_value();
}

}  // namespace

LossReport check_validation_loss(const Assignment& mu, const Formula& f,
                                 std::size_t sweep_cap) {
  if (!validates(mu, f)) {
    throw PreconditionError("assignment {" + mu.str() +
                            "} does not validate the formula");
  }
  LossReport rep;
  rep.encoding = tseitin(f);
  ExtensionStream deltas({}, fresh_set(rep.encoding, sweep_cap));
  rep.loss = true;
  while (auto delta = deltas.next()) {
    DeltaCase dc{*delta, DeltaOutcome::NotValidated, std::nullopt};
    if (validates(unite(mu, *delta), rep.encoding.cnf)) {
      dc.outcome = DeltaOutcome::Holds;
      rep.loss = false;
    }
    rep.cases.push_back(std::move(dc));
  }
  return rep;
}

LossReport check_entailment_loss(const Assignment& mu, const Formula& f,
                                 std::size_t sweep_cap,
                                 const EntailOptions& opts) {
  if (!entails(mu, f, opts).entails) {
    throw PreconditionError("assignment {" + mu.str() +
                            "} does not entail the formula");
  }
  LossReport rep;
  rep.encoding = tseitin(f);
  ExtensionStream deltas({}, fresh_set(rep.encoding, sweep_cap));
  rep.loss = true;
  while (auto delta = deltas.next()) {
    const Assignment extended = unite(mu, *delta);
    DeltaCase dc{*delta, DeltaOutcome::Holds, std::nullopt};
    auto e = entails(extended, rep.encoding.cnf, opts);
    if (e.entails) {
      rep.loss = false;
    } else if (!satisfiable(residual(rep.encoding.cnf, extended), opts)) {
      dc.outcome = DeltaOutcome::Inconsistent;
    } else {
      dc.outcome = DeltaOutcome::FalsifiedByExtension;
      dc.witness = std::move(e.witness);
    }
    rep.cases.push_back(std::move(dc));
  }
  return rep;
}

std::string to_dimacs(const Formula& cnf) {
  auto cls = clauses(cnf);
  std::map<Atom, std::size_t> index;
  std::vector<Atom> numbered;
  for (const auto& c : cls) {
    for (const auto& l : c) {
      if (index.emplace(l.atom, numbered.size() + 1).second) {
        numbered.push_back(l.atom);
      }
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < numbered.size(); ++i) {
    out << "c " << (i + 1) << ' ' << numbered[i].name() << '\n';
  }
  out << "p cnf " << numbered.size() << ' ' << cls.size() << '\n';
  for (const auto& c : cls) {
    for (const auto& l : c) {
      out << (l.positive ? "" : "-") << index.at(l.atom) << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

}  // namespace partialsat
