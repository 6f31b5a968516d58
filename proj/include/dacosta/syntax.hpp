#ifndef DACOSTA_SYNTAX_HPP
#define DACOSTA_SYNTAX_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "dacosta/error.hpp"

namespace dacosta {

enum class Connective : std::uint8_t {
  Atom,
  MetaVar,
  Bot,
  Top,
  And,
  Or,
  Imp,
  Neg,
  // Open-parameter suffix nodes; only appear in parametric axiom schemas.
  ParamPow,
  ParamCPow,
};

/// Immutable propositional formula over atoms, 0, 1, &, |, ->, ~.
///
/// Nodes are shared and never mutated, so copies are cheap and values are safe
/// to hand between threads. Equality is structural. Derived connectives
/// (A^o, A^n, A^(n), <->) never appear as nodes: they are expanded when built.
///
/// The same type carries schema patterns: `MetaVar` leaves stand for the
/// schematic letters, and `ParamPow`/`ParamCPow` mark a still-open `n`.
class Formula {
 public:
  Formula();  // the constant 0

  static Formula atom(std::string name);
  static Formula metavar(std::string name);
  static Formula bot();
  static Formula top();
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula imp(Formula left, Formula right);
  static Formula neg(Formula inner);
  static Formula param_pow(Formula base);
  static Formula param_cpow(Formula base);

  Connective kind() const noexcept;
  bool is_binary() const noexcept;
  bool is_leaf() const noexcept;

  /// Name of an Atom or MetaVar; empty otherwise.
  const std::string& name() const noexcept;
  /// Left operand of a binary node, operand of Neg / Param* nodes.
  const Formula& left() const;
  const Formula& right() const;
  const Formula& inner() const { return left(); }

  std::size_t hash() const noexcept;
  /// Number of nodes counted as a tree (shared subterms count each time).
  std::size_t tree_size() const noexcept;
  bool has_metavars() const noexcept;
  bool has_open_parameter() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend bool operator!=(const Formula& a, const Formula& b) noexcept { return !(a == b); }
  /// Total order (by hash, then structure); used for ordered containers.
  friend bool operator<(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Connective kind, std::string name, const Formula* l, const Formula* r);

  std::shared_ptr<const Node> node_;
};

/// A schema pattern: a Formula that may contain metavariables and open `n`.
using MetaFormula = Formula;

/// Simultaneous replacement of metavariables by formulas.
using Substitution = std::map<std::string, Formula>;

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

inline Formula operator~(const Formula& a) { return Formula::neg(a); }
inline Formula operator&(const Formula& a, const Formula& b) { return Formula::conj(a, b); }
inline Formula operator|(const Formula& a, const Formula& b) { return Formula::disj(a, b); }
inline Formula implies(const Formula& a, const Formula& b) { return Formula::imp(a, b); }

// Derived forms, desugared on construction.

/// A^o = ~(A & ~A).
Formula circ(const Formula& base);
/// A^n = A^o...o (n times), n >= 1.
Formula pow(const Formula& base, int n);
/// A^(n) = A^1 & A^2 & ... & A^n, left-nested; A^(1) = A^1.
Formula cpow(const Formula& base, int n);
/// A <-> B = (A -> B) & (B -> A).
Formula equiv(const Formula& a, const Formula& b);

enum class DerivedKind { Circ, Pow, CPow, Equiv };
/// Dispatching form of the derived constructors; `arg` is the integer for
/// Pow/CPow and the second operand for Equiv.
Formula derived_form(DerivedKind kind, const Formula& base, int n);
Formula derived_form(DerivedKind kind, const Formula& a, const Formula& b);

/// Replaces every open parameter node by the corresponding power at `n`.
Formula expand_parameter(const Formula& pattern, int n);

enum class ParseMode {
  /// Every identifier is an atom.
  Plain,
  /// Single uppercase letters are metavariables (schema files, scripts).
  Schema,
};

/// Parses the concrete ASCII syntax. Throws SyntaxError / ParameterError.
Formula parse(std::string_view text, ParseMode mode = ParseMode::Plain);
inline Formula parse_schema(std::string_view text) { return parse(text, ParseMode::Schema); }

/// Minimal-parenthesis rendering; parse(render(f)) == f.
std::string render(const Formula& f);
/// Constructor-style dump, e.g. "Imp(p, Imp(q, p))".
std::string to_tree_string(const Formula& f);

std::set<std::string> metavars(const Formula& f);
/// Names of Atom and MetaVar leaves alike.
std::set<std::string> leaf_names(const Formula& f);

/// Strict simultaneous substitution: throws UnboundMetaVar for a metavariable
/// missing from `s`, ParameterError for an open parameter.
Formula apply_subst(const MetaFormula& pattern, const Substitution& s);
/// Like apply_subst but leaves unbound metavariables in place.
MetaFormula apply_subst_partial(const MetaFormula& pattern, const Substitution& s);

/// Unique substitution s with apply_subst(pattern, s) == target, if any.
std::optional<Substitution> match_pattern(const MetaFormula& pattern, const Formula& target);

std::string render(const Substitution& s);

}  // namespace dacosta

#endif  // DACOSTA_SYNTAX_HPP
