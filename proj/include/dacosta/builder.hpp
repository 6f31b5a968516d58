#ifndef DACOSTA_BUILDER_HPP
#define DACOSTA_BUILDER_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dacosta/calculus.hpp"

namespace dacosta {

/// Assembles Hilbert proofs from hypothetical reasoning.
///
/// Steps form a DAG. A step may depend on open hypotheses; `discharge` turns
/// a hypothetical step into an implication using only axioms (1) and (2) and
/// the identity lemma, so the emitted script contains nothing but axiom
/// instances, modus ponens and theorem citations.
class ProofBuilder {
 public:
  using Step = int;

  /// With `cite_identity`, discharging a hypothesis against itself cites the
  /// theorem ID instead of re-deriving A -> A inline.
  explicit ProofBuilder(bool cite_identity = true) : cite_identity_(cite_identity) {}

  Step hyp(const Formula& f);
  /// Throws UnknownAxiom for names outside the catalog, ParameterError if a
  /// parametric schema comes without n.
  Step axiom(const std::string& schema, const Substitution& s, std::optional<int> n = std::nullopt);
  /// Cites a theorem with the given schematic statement. Whether the name is
  /// actually registered is for the checker to decide.
  Step theorem(const std::string& name, const MetaFormula& statement, const Substitution& s);
  /// `major` must prove formula(minor) -> Y; the new step proves Y.
  Step mp(Step minor, Step major);
  /// Proves formula(h) -> formula(body) with h no longer open.
  Step discharge(Step h, Step body);

  const Formula& formula(Step s) const { return nodes_.at(static_cast<std::size_t>(s)).f; }
  bool is_closed(Step s) const { return nodes_.at(static_cast<std::size_t>(s)).hyps.empty(); }
  std::size_t size() const { return nodes_.size(); }

  /// Linearizes everything `goal` depends on, one line per distinct formula.
  ProofScript finish(Step goal, const std::string& name, const SystemDef& system) const;

 private:
  enum class Kind { Hyp, Axiom, Theorem, MP };
  struct Node {
    Formula f;
    Kind kind;
    std::optional<Justification> just;
    Step minor = -1;
    Step major = -1;
    std::vector<Step> hyps;  // sorted
  };

  Step push(Node node);
  Step identity(const Formula& f);

  std::vector<Node> nodes_;
  std::map<std::pair<Step, Step>, Step> discharged_;
  bool cite_identity_;
};

}  // namespace dacosta

#endif  // DACOSTA_BUILDER_HPP
