#include "dacosta/builder.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace dacosta {

ProofBuilder::Step ProofBuilder::push(Node node) {
  nodes_.push_back(std::move(node));
  return static_cast<Step>(nodes_.size() - 1);
}

ProofBuilder::Step ProofBuilder::hyp(const Formula& f) {
  Step id = static_cast<Step>(nodes_.size());
  return push({f, Kind::Hyp, std::nullopt, -1, -1, {id}});
}

ProofBuilder::Step ProofBuilder::axiom(const std::string& schema, const Substitution& s, std::optional<int> n) {
  const AxiomSchema* ax = find_schema(schema);
  if (ax == nullptr) throw UnknownAxiom(schema, "the catalog");
  if (ax->parametric && !n) throw ParameterError("axiom " + schema + " needs a parameter n");
  Formula f = apply_subst_partial(expand_parameter(ax->pattern, n.value_or(1)), s);
  return push({f, Kind::Axiom, AxiomJust{schema, s, ax->parametric ? n : std::nullopt}, -1, -1, {}});
}

ProofBuilder::Step ProofBuilder::theorem(const std::string& name, const MetaFormula& statement,
                                         const Substitution& s) {
  Formula f = apply_subst_partial(statement, s);
  return push({f, Kind::Theorem, TheoremJust{name, s}, -1, -1, {}});
}

ProofBuilder::Step ProofBuilder::mp(Step minor, Step major) {
  const Formula& imp = formula(major);
  if (imp.kind() != Connective::Imp || imp.left() != formula(minor))
    throw InternalError("modus ponens on " + render(formula(minor)) + " and " + render(imp));
  std::vector<Step> hyps;
  const auto& a = nodes_.at(static_cast<std::size_t>(minor)).hyps;
  const auto& b = nodes_.at(static_cast<std::size_t>(major)).hyps;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(hyps));
  Formula result = imp.right();
  return push({result, Kind::MP, std::nullopt, minor, major, std::move(hyps)});
}

ProofBuilder::Step ProofBuilder::identity(const Formula& f) {
  if (cite_identity_) return theorem("ID", parse_schema("A -> A"), {{"A", f}});
  const Formula ff = implies(f, f);
  Step s1 = axiom("1", {{"A", f}, {"B", f}});
  Step s2 = axiom("1", {{"A", f}, {"B", ff}});
  Step s3 = axiom("2", {{"A", f}, {"B", ff}, {"C", f}});
  return mp(s2, mp(s1, s3));
}

ProofBuilder::Step ProofBuilder::discharge(Step h, Step body) {
  if (nodes_.at(static_cast<std::size_t>(h)).kind != Kind::Hyp)
    throw InternalError("discharge of a step that is not a hypothesis");
  if (auto it = discharged_.find({h, body}); it != discharged_.end()) return it->second;

  const Formula hf = formula(h);
  const Node node = nodes_.at(static_cast<std::size_t>(body));
  Step result;
  if (body == h) {
    result = identity(hf);
  } else if (!std::binary_search(node.hyps.begin(), node.hyps.end(), h)) {
    result = mp(body, axiom("1", {{"A", node.f}, {"B", hf}}));
  } else {
    // body = mp(minor, major) with h open in at least one of them.
    Step da = discharge(h, node.minor);
    Step db = discharge(h, node.major);
    Step k = axiom("2", {{"A", hf}, {"B", formula(node.minor)}, {"C", node.f}});
    result = mp(db, mp(da, k));
  }
  discharged_[{h, body}] = result;
  return result;
}

ProofScript ProofBuilder::finish(Step goal, const std::string& name, const SystemDef& system) const {
  if (!is_closed(goal)) throw InternalError("goal still depends on open hypotheses");
  ProofScript script;
  script.theorem = name;
  script.system = system;
  script.goal = formula(goal);

  std::unordered_map<Formula, int, FormulaHash> line_of_formula;
  std::unordered_map<Step, int> line_of_step;
  std::function<int(Step)> emit = [&](Step s) -> int {
    if (auto it = line_of_step.find(s); it != line_of_step.end()) return it->second;
    const Node& node = nodes_.at(static_cast<std::size_t>(s));
    if (auto it = line_of_formula.find(node.f); it != line_of_formula.end()) {
      line_of_step[s] = it->second;
      return it->second;
    }
    Justification just;
    if (node.kind == Kind::MP) {
      int a = emit(node.minor);
      int b = emit(node.major);
      just = MPJust{a, b};
    } else if (node.kind == Kind::Hyp) {
      throw InternalError("open hypothesis reached during linearization");
    } else {
      just = *node.just;
    }
    // A dependency may already have proved this very formula.
    if (auto it = line_of_formula.find(node.f); it != line_of_formula.end()) {
      line_of_step[s] = it->second;
      return it->second;
    }
    int index = static_cast<int>(script.lines.size()) + 1;
    script.lines.push_back({index, node.f, just});
    line_of_formula.emplace(node.f, index);
    line_of_step[s] = index;
    return index;
  };
  int last = emit(goal);
  if (last != static_cast<int>(script.lines.size())) {
    // The goal was proved early as a side result; repeat it at the end.
    ProofLine copy = script.lines.at(static_cast<std::size_t>(last - 1));
    copy.index = static_cast<int>(script.lines.size()) + 1;
    script.lines.push_back(std::move(copy));
  }
  return script;
}

}  // namespace dacosta
