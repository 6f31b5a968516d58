#ifndef DACOSTA_POLARITY_HPP
#define DACOSTA_POLARITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dacosta/algebra.hpp"
#include "dacosta/syntax.hpp"

namespace dacosta {

/// Subset of the worlds of a frame: bit i stands for world i.
using WorldSet = std::uint32_t;

constexpr int kMaxWorlds = 16;

/// Input for build_frame. Order pairs are u <= w (the reflexive-transitive
/// closure is taken); relation pairs are (u, w) in R.
struct FrameSpec {
  std::vector<std::string> worlds;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<std::pair<std::string, std::string>> relation;
};

/// A finite poset of worlds with a hereditary incompatibility relation.
class PolarityFrame {
 public:
  int size() const { return static_cast<int>(worlds_.size()); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::string& world(int i) const { return worlds_.at(static_cast<std::size_t>(i)); }
  /// Index of the world called `name`, or -1.
  int find(const std::string& name) const;
  bool leq(int u, int w) const { return leq_[idx(u, w)] != 0; }
  bool related(int u, int w) const { return rel_[idx(u, w)] != 0; }
  WorldSet all() const { return size() == 0 ? 0 : static_cast<WorldSet>((std::uint64_t{1} << size()) - 1); }
  bool is_upset(WorldSet s) const;
  /// "{a,b}"; "{}" for the empty set.
  std::string render(WorldSet s) const;
  /// Non-reflexive order pairs u < w whose w covers u.
  std::vector<std::pair<int, int>> covers() const;
  /// Pairs of R in (u, w) order.
  std::vector<std::pair<int, int>> relation() const;
  Poset poset() const;

 private:
  friend PolarityFrame build_frame(const FrameSpec& spec);
  std::size_t idx(int u, int w) const { return static_cast<std::size_t>(u * size() + w); }

  std::vector<std::string> worlds_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint8_t> rel_;
};

/// Throws NotAPoset for unknown or duplicate worlds and order cycles, and
/// NotHereditary with a violating quadruple.
PolarityFrame build_frame(const FrameSpec& spec);

/// Frame from index data; worlds are named a, b, c, ...
PolarityFrame build_frame(const Poset& order, const std::vector<std::pair<int, int>>& relation);

enum class Side { Lambda, Rho };

/// lambda U = {w | (u,w) in R for all u in U}, rho V = {w | (w,v) in R for all v in V}.
WorldSet polar(const PolarityFrame& f, WorldSet s, Side side);
inline WorldSet lambda(const PolarityFrame& f, WorldSet s) { return polar(f, s, Side::Lambda); }
inline WorldSet rho(const PolarityFrame& f, WorldSet s) { return polar(f, s, Side::Rho); }

struct LawCheck {
  std::string name;
  bool holds = true;
  std::size_t instances = 0;
  std::string counterexample;  // first failing instance
};

struct GaloisReport {
  bool hereditary_only = false;
  std::vector<LawCheck> laws;

  bool all_hold() const;
  const LawCheck* find(const std::string& name) const;
};

/// Checks galois (V <= lambda U iff U <= rho V), antitonicity of both polars,
/// additivity, lambda of the empty set, and up-set closure of lambda, over
/// all subsets or only over up-sets.
GaloisReport check_galois(const PolarityFrame& f, bool hereditary_only = false);

struct UpSetAlgebra {
  NegationModel model;
  std::vector<WorldSet> upsets;  // element i of the model is upsets[i]

  int index_of(WorldSet s) const;
};

/// The up-set algebra with negation lambda. Throws ClosureFailure if lambda
/// leaves the up-sets or the negation is not at least Split.
UpSetAlgebra upset_algebra(const PolarityFrame& f);

/// lambda U == rho U for every up-set U.
bool is_selfadjoint(const PolarityFrame& f);

/// Atom name to an up-set of worlds.
using KripkeValuation = std::map<std::string, WorldSet>;

/// Worlds forcing `formula`. Throws NonHereditaryValuation and UnboundAtom.
WorldSet kripke_truth_set(const PolarityFrame& f, const KripkeValuation& v, const Formula& formula);
bool kripke_eval(const PolarityFrame& f, const KripkeValuation& v, int world, const Formula& formula);

struct AxiomStatus {
  std::string name;
  bool valid = true;
  std::string falsifier;  // rendered valuation of the first counterexample
};

struct FrameAxiomReport {
  std::string system;  // label, e.g. "mZn n=1"
  bool selfadjoint = false;
  bool selfadjoint_required = false;
  std::vector<AxiomStatus> axioms;

  bool all_valid() const;
  std::vector<std::string> failing() const;
};

/// Validity of every axiom of the system in the up-set algebra of `f`. For
/// mCZn the frame must also be selfadjoint.
FrameAxiomReport verify_frame_axioms(const PolarityFrame& f, const std::string& system, int n);

/// Every unlabeled poset with 1..max_worlds worlds paired with every
/// hereditary relation on it, in enumeration order.
std::vector<PolarityFrame> enumerate_frames(int max_worlds);

}  // namespace dacosta

#endif  // DACOSTA_POLARITY_HPP
