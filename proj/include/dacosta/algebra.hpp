#ifndef DACOSTA_ALGEBRA_HPP
#define DACOSTA_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dacosta/syntax.hpp"

namespace dacosta {

/// Finite bounded distributive lattice with elements 0..size-1.
class FiniteLattice {
 public:
  int size() const { return size_; }
  int bot() const { return bot_; }
  int top() const { return top_; }
  bool leq(int a, int b) const { return leq_[idx(a, b)] != 0; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int a) const { return names_.at(static_cast<std::size_t>(a)); }
  /// Index of the element called `name`, or -1.
  int find(const std::string& name) const;
  /// Pairs (a, b) with b covering a, ordered by (a, b).
  std::vector<std::pair<int, int>> covers() const;

 private:
  friend class HeytingAlgebra;
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * size_ + b); }

  int size_ = 0;
  int bot_ = 0;
  int top_ = 0;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<int> meet_;
  std::vector<int> join_;
};

/// A lattice plus its relative pseudocomplement, precomputed as a table.
class HeytingAlgebra {
 public:
  const FiniteLattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }
  int imp(int a, int b) const { return imp_[lattice_.idx(a, b)]; }

  /// Validates a poset given as element names and order pairs (a <= b; the
  /// reflexive-transitive closure is taken), then computes the lattice
  /// operations and implication. Throws NotALattice, NotDistributive;
  /// ResiduationFailure would be an internal bug.
  static HeytingAlgebra build(const std::vector<std::string>& names,
                              const std::vector<std::pair<int, int>>& order);

 private:
  FiniteLattice lattice_;
  std::vector<int> imp_;
};

/// Input for build_algebra: element names and order pairs a <= b by name.
struct LatticeSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
};

HeytingAlgebra build_algebra(const LatticeSpec& spec);

using NegationOp = std::vector<int>;

struct NegationModel {
  HeytingAlgebra algebra;
  NegationOp neg;

  int size() const { return algebra.size(); }
  const FiniteLattice& lattice() const { return algebra.lattice(); }
};

/// Checks that `neg` is a total table over the model's elements.
NegationModel make_model(HeytingAlgebra algebra, NegationOp neg);

/// Atom (or metavariable) name to element index.
using Valuation = std::map<std::string, int>;
/// "A=1,B=0" using element names.
std::string render_valuation(const Valuation& v, const FiniteLattice& lattice);

/// A formula compiled for repeated evaluation. Atoms and metavariables are
/// both variables, numbered in name order.
class CompiledFormula {
 public:
  explicit CompiledFormula(const Formula& f);
  /// Uses the given variable numbering, which must cover the leaves of `f`.
  CompiledFormula(const Formula& f, std::vector<std::string> variables);
  const std::vector<std::string>& variables() const { return vars_; }
  /// `values[i]` is the element assigned to variables()[i].
  int run(const NegationModel& m, const std::vector<int>& values, std::vector<int>& scratch) const;
  int run(const NegationModel& m, const std::vector<int>& values) const;

 private:
  struct Instr {
    Connective op;
    int a;
    int b;
  };
  std::vector<std::string> vars_;
  std::vector<Instr> code_;
};

/// Throws UnboundAtom when `v` misses an atom of `f`.
int eval(const Formula& f, const NegationModel& m, const Valuation& v);

struct ValidityResult {
  bool valid = true;
  std::optional<Valuation> falsifier;  // lexicographically first
};

ValidityResult is_valid(const Formula& f, const NegationModel& m);
ValidityResult entails(const std::vector<Formula>& premises, const Formula& conclusion, const NegationModel& m);

// ---------------------------------------------------------------------------
// Negation hierarchy

enum class NegationClass { None = 0, General = 1, Split = 2, Constructive = 3, DeMorgan = 4 };
const char* to_string(NegationClass c);

struct NegationProperty {
  std::string name;
  NegationClass required;  // the class at which the property is claimed to hold
  bool holds = true;
  std::string counterexample;  // empty when it holds
};

struct ClassReport {
  NegationClass cls = NegationClass::None;
  // Defining conditions.
  bool antitone = false;
  bool top_in_image = false;
  bool join_to_meet = false;
  bool bot_to_top = false;
  bool meet_to_join = false;
  bool involutive = false;
  std::vector<NegationProperty> properties;

  /// Properties required at or below the model's class that fail.
  std::vector<const NegationProperty*> violations() const;
};

ClassReport classify_negation(const NegationModel& m);

struct AdjointResult {
  NegationOp table;
  bool selfadjoint = false;  // adjoint equals neg
};

/// The right adjoint of a Split (or stronger) negation; nullopt below Split.
/// Throws AdjointLawFailure if the Galois laws fail.
std::optional<AdjointResult> right_adjoint(const NegationModel& m);

// ---------------------------------------------------------------------------
// Enumeration and search

/// A finite poset as an order matrix: leq[i][j] for i, j < points.
struct Poset {
  int points = 0;
  std::vector<std::vector<bool>> leq;
};

/// All posets on `points` elements up to isomorphism, deterministic order.
std::vector<Poset> enumerate_posets(int points);

/// Up-sets of `p` as bitmasks (bit i = point i), by size then
/// lexicographically by member list.
std::vector<unsigned> sorted_upsets(const Poset& p);

/// The lattice of up-sets of `p`, elements ordered by size then
/// lexicographically; `names` optionally labels the points.
HeytingAlgebra upset_lattice(const Poset& p, const std::vector<std::string>& point_names = {});

struct EnumerationBounds {
  int max_points = 4;   // ground set size of the posets
  int max_lattice = 6;  // largest lattice that gets negation tables
};

constexpr int kHardMaxPoints = 6;
constexpr int kHardMaxLattice = 8;

/// Distributive lattices of size <= bounds.max_lattice from posets of at most
/// bounds.max_points points, non-isomorphic, by size then poset order.
/// Throws BoundExceeded beyond the hard limits.
std::vector<HeytingAlgebra> enumerate_distributive_lattices(const EnumerationBounds& bounds);

/// Calls `visit` for every negation table passing `filter` on every lattice;
/// stops early when `visit` returns false.
void for_each_model(const EnumerationBounds& bounds, NegationClass filter,
                    const std::function<bool(const NegationModel&)>& visit);
std::vector<NegationModel> enumerate_models(const EnumerationBounds& bounds, NegationClass filter);

struct SearchResult {
  bool found = false;
  std::optional<NegationModel> model;
  Valuation valuation;
  std::size_t lattices_scanned = 0;
  std::size_t models_scanned = 0;
  std::size_t models_validating = 0;  // models where every axiom holds
};

/// First enumerated model validating every axiom while falsifying `target`.
/// `filter` restricts the negation tables; it must not exclude any model of
/// the axioms for the result to be exhaustive.
SearchResult countermodel_search(const std::vector<Formula>& axioms, const Formula& target,
                                 const EnumerationBounds& bounds, NegationClass filter = NegationClass::None);

/// True iff every formula in `axioms` is valid in `m`.
bool validates_all(const std::vector<CompiledFormula>& axioms, const NegationModel& m);

}  // namespace dacosta

#endif  // DACOSTA_ALGEBRA_HPP
