#ifndef DACOSTA_CALCULUS_HPP
#define DACOSTA_CALCULUS_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dacosta/syntax.hpp"

namespace dacosta {

struct AxiomSchema {
  std::string name;
  MetaFormula pattern;  // may contain ParamPow/ParamCPow nodes
  bool parametric = false;
};

/// All schemas in catalog order: 1..8, 9, 10, 11, 12, 10c, 11c, 12c.1, 12c.2,
/// 9b, 10b.1, 10b.2, 11b.1, 11b.2, 12b, 13b.
const std::vector<AxiomSchema>& axiom_catalog();
/// Catalog lookup; nullptr for an unknown name.
const AxiomSchema* find_schema(const std::string& name);

/// A named axiom system. Parametric systems are always fixed at some n >= 1.
struct SystemDef {
  std::string name;
  std::vector<std::string> schemas;  // catalog order
  bool parametric = false;
  int n = 1;

  bool contains(const std::string& schema) const;
  /// "mZn n=2" for parametric systems, the bare name otherwise.
  std::string label() const;
};

/// Builtin systems: IPCplus, CPL, INT, Cn, Zn, CZn, mZn, mCZn, ZnMinus, plus
/// the restricted signatures mZnAnti (IPCplus + 9b) and mZnSplit
/// (IPCplus + 9b + 12b). Throws UnknownSystem, ParameterError for n < 1.
SystemDef builtin_system(const std::string& name, int n = 1);
std::vector<std::string> builtin_system_names();

/// True iff every axiom instance of `sub` is an axiom instance of `super`.
bool is_subsystem(const SystemDef& sub, const SystemDef& super);

/// The schema `name` of `system` expanded at n and substituted. Metavariables
/// missing from `s` are left in place. `n` defaults to the system's n and, if
/// given, must agree with it. Throws UnknownAxiom, ParameterError.
MetaFormula instantiate_axiom(const SystemDef& system, const std::string& name, const Substitution& s,
                              std::optional<int> n = std::nullopt);

/// (name, pattern at the system's n) in catalog order.
std::vector<std::pair<std::string, MetaFormula>> list_axioms(const SystemDef& system);
std::vector<std::pair<std::string, MetaFormula>> list_axioms(const std::string& system, int n);

// ---------------------------------------------------------------------------
// Proof scripts

struct AxiomJust {
  std::string schema;
  /// Absent: the substitution is recovered by matching the line.
  std::optional<Substitution> subst;
  std::optional<int> n;
};

struct MPJust {
  int minor = 0;  // line holding X
  int major = 0;  // line holding X -> Y
};

struct TheoremJust {
  std::string name;
  Substitution subst;  // unbound metavariables of the theorem stay as they are
};

using Justification = std::variant<AxiomJust, MPJust, TheoremJust>;

struct ProofLine {
  int index = 0;
  MetaFormula statement;
  Justification just;
};

struct ProofScript {
  std::string theorem;  // may be empty for anonymous scripts
  SystemDef system;
  MetaFormula goal;
  std::vector<ProofLine> lines;
};

enum class FailureKind { SchemaMismatch, BadMP, UnknownTheorem, SystemViolation, GoalMismatch, Malformed };
const char* to_string(FailureKind kind);

struct Failure {
  int line = 0;
  FailureKind kind = FailureKind::Malformed;
  std::string reason;
};

struct Verdict {
  bool accepted() const { return failures.empty(); }
  std::vector<Failure> failures;
};

struct TheoremEntry {
  std::string name;
  SystemDef system;
  MetaFormula statement;
  ProofScript script;
};

/// Registered theorems, namespaced by system. A plain value: copying it is
/// cheap enough for the corpus sizes involved, and nothing mutates shared state.
class TheoremRegistry {
 public:
  enum class Lookup { Found, Incompatible, Unknown };

  /// Entry named `name` usable inside `system`: one registered for the same
  /// system if any, else the earliest registered for a subsystem.
  std::pair<Lookup, const TheoremEntry*> lookup(const std::string& name, const SystemDef& system) const;
  bool contains(const std::string& name, const SystemDef& system) const;
  const std::vector<TheoremEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Appends without checking; register_theorem is the checked entry point.
  void add_unchecked(TheoremEntry entry);

 private:
  std::vector<TheoremEntry> entries_;
};

/// Line-by-line check. Never throws for a bad proof: every problem becomes a
/// Failure, and later lines are still checked.
Verdict check_proof(const ProofScript& script, const TheoremRegistry& registry);

/// Checks `script` and returns `registry` extended by it. Throws DuplicateName
/// if `name` already exists for the same system, RejectedProof otherwise.
TheoremRegistry register_theorem(const std::string& name, const ProofScript& script,
                                 const TheoremRegistry& registry);

/// Replaces the TheoremInst line `line_index` by the cited theorem's own
/// proof, instantiated and renumbered. Lines are renumbered 1..N.
ProofScript splice_theorem(const ProofScript& script, int line_index, const TheoremRegistry& registry);

// ---------------------------------------------------------------------------
// Script files

ProofScript parse_script(std::string_view text);
ProofScript read_script_file(const std::string& path);
std::string render_script(const ProofScript& script);
std::string render_justification(const Justification& just);

}  // namespace dacosta

#endif  // DACOSTA_CALCULUS_HPP
