#include "dacosta/polarity.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "dacosta/calculus.hpp"

namespace dacosta {

namespace {

bool member(WorldSet s, int i) { return (s >> i & 1U) != 0; }

WorldSet bit(int i) { return WorldSet{1} << i; }

bool subset(WorldSet a, WorldSet b) { return (a & ~b) == 0; }

std::string default_world_name(int i) {
  std::string s(1, static_cast<char>('a' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

// Transitive closure in place; returns false on a cycle through distinct
// elements.
bool close_order(std::vector<std::uint8_t>& leq, int k) {
  auto at = [&](int a, int b) -> std::uint8_t& { return leq[static_cast<std::size_t>(a * k + b)]; };
  for (int i = 0; i < k; ++i) at(i, i) = 1;
  for (int m = 0; m < k; ++m)
    for (int a = 0; a < k; ++a)
      if (at(a, m))
        for (int b = 0; b < k; ++b)
          if (at(m, b)) at(a, b) = 1;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (at(a, b) && at(b, a)) return false;
  return true;
}

}  // namespace

int PolarityFrame::find(const std::string& name) const {
  auto it = std::find(worlds_.begin(), worlds_.end(), name);
  return it == worlds_.end() ? -1 : static_cast<int>(it - worlds_.begin());
}

bool PolarityFrame::is_upset(WorldSet s) const {
  for (int u = 0; u < size(); ++u)
    if (member(s, u))
      for (int w = 0; w < size(); ++w)
        if (leq(u, w) && !member(s, w)) return false;
  return true;
}

std::string PolarityFrame::render(WorldSet s) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i)
    if (member(s, i)) {
      if (!first) out += ',';
      first = false;
      out += world(i);
    }
  return out + "}";
}

std::vector<std::pair<int, int>> PolarityFrame::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int w = 0; w < size(); ++w) {
      if (u == w || !leq(u, w)) continue;
      bool direct = true;
      for (int m = 0; m < size() && direct; ++m)
        if (m != u && m != w && leq(u, m) && leq(m, w)) direct = false;
      if (direct) out.emplace_back(u, w);
    }
  return out;
}

std::vector<std::pair<int, int>> PolarityFrame::relation() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int w = 0; w < size(); ++w)
      if (related(u, w)) out.emplace_back(u, w);
  return out;
}

Poset PolarityFrame::poset() const {
  Poset p;
  p.points = size();
  p.leq.assign(static_cast<std::size_t>(size()), std::vector<bool>(static_cast<std::size_t>(size()), false));
  for (int u = 0; u < size(); ++u)
    for (int w = 0; w < size(); ++w) p.leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = leq(u, w);
  return p;
}

PolarityFrame build_frame(const FrameSpec& spec) {
  PolarityFrame f;
  const int k = static_cast<int>(spec.worlds.size());
  if (k > kMaxWorlds) throw NotAPoset("at most " + std::to_string(kMaxWorlds) + " worlds are supported");
  std::set<std::string> seen;
  for (const auto& w : spec.worlds) {
    if (w.empty()) throw NotAPoset("empty world name");
    if (!seen.insert(w).second) throw NotAPoset("duplicate world " + w);
  }
  f.worlds_ = spec.worlds;
  auto index = [&](const std::string& name) {
    int i = f.find(name);
    if (i < 0) throw NotAPoset("unknown world " + name);
    return i;
  };
  f.leq_.assign(static_cast<std::size_t>(k * k), 0);
  for (const auto& [u, w] : spec.order) f.leq_[f.idx(index(u), index(w))] = 1;
  if (!close_order(f.leq_, k)) throw NotAPoset("the order has a cycle, so antisymmetry fails");
  f.rel_.assign(static_cast<std::size_t>(k * k), 0);
  for (const auto& [u, w] : spec.relation) f.rel_[f.idx(index(u), index(w))] = 1;

  for (int u = 0; u < k; ++u)
    for (int w = 0; w < k; ++w) {
      if (!f.related(u, w)) continue;
      for (int u2 = 0; u2 < k; ++u2)
        for (int w2 = 0; w2 < k; ++w2)
          if (f.leq(u, u2) && f.leq(w, w2) && !f.related(u2, w2))
            throw NotHereditary("(" + f.world(u) + "," + f.world(w) + ") is in R and below (" + f.world(u2) + "," +
                                f.world(w2) + "), which is not in R");
    }
  return f;
}

PolarityFrame build_frame(const Poset& order, const std::vector<std::pair<int, int>>& relation) {
  FrameSpec spec;
  for (int i = 0; i < order.points; ++i) spec.worlds.push_back(default_world_name(i));
  for (int u = 0; u < order.points; ++u)
    for (int w = 0; w < order.points; ++w)
      if (u != w && order.leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)])
        spec.order.emplace_back(spec.worlds[static_cast<std::size_t>(u)], spec.worlds[static_cast<std::size_t>(w)]);
  for (const auto& [u, w] : relation)
    spec.relation.emplace_back(spec.worlds.at(static_cast<std::size_t>(u)), spec.worlds.at(static_cast<std::size_t>(w)));
  return build_frame(spec);
}

WorldSet polar(const PolarityFrame& f, WorldSet s, Side side) {
  WorldSet out = 0;
  for (int w = 0; w < f.size(); ++w) {
    bool all = true;
    for (int u = 0; u < f.size() && all; ++u)
      if (member(s, u)) all = side == Side::Lambda ? f.related(u, w) : f.related(w, u);
    if (all) out |= bit(w);
  }
  return out;
}

bool GaloisReport::all_hold() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.holds; });
}

const LawCheck* GaloisReport::find(const std::string& name) const {
  for (const auto& l : laws)
    if (l.name == name) return &l;
  return nullptr;
}

GaloisReport check_galois(const PolarityFrame& f, bool hereditary_only) {
  GaloisReport report;
  report.hereditary_only = hereditary_only;
  std::vector<WorldSet> sets;
  for (WorldSet s = 0; s <= f.all(); ++s) {
    if (!hereditary_only || f.is_upset(s)) sets.push_back(s);
    if (s == f.all()) break;
  }
  std::vector<WorldSet> lam, rh;
  for (WorldSet s : sets) {
    lam.push_back(lambda(f, s));
    rh.push_back(rho(f, s));
  }

  auto law = [](const char* name) {
    LawCheck l;
    l.name = name;
    return l;
  };
  LawCheck galois = law("galois"), lanti = law("lambda_antitone"), ranti = law("rho_antitone"),
           add = law("additivity"), empty = law("lambda_empty_is_all"), closure = law("lambda_preserves_upsets");
  auto fail = [](LawCheck& l, const std::string& why) {
    if (l.holds) l.counterexample = why;
    l.holds = false;
  };
  const std::size_t k = sets.size();
  for (std::size_t i = 0; i < k; ++i) {
    const WorldSet u = sets[i];
    ++closure.instances;
    if (f.is_upset(u) && !f.is_upset(lam[i])) fail(closure, "lambda" + f.render(u) + " = " + f.render(lam[i]));
    for (std::size_t j = 0; j < k; ++j) {
      const WorldSet v = sets[j];
      ++galois.instances;
      if (subset(v, lam[i]) != subset(u, rh[j]))
        fail(galois, "U=" + f.render(u) + " V=" + f.render(v));
      if (subset(u, v)) {
        lanti.instances++;
        ranti.instances++;
        if (!subset(lam[j], lam[i])) fail(lanti, "U=" + f.render(u) + " V=" + f.render(v));
        if (!subset(rh[j], rh[i])) fail(ranti, "U=" + f.render(u) + " V=" + f.render(v));
      }
      ++add.instances;
      if (lambda(f, u | v) != (lam[i] & lam[j])) fail(add, "U=" + f.render(u) + " V=" + f.render(v));
    }
  }
  ++empty.instances;
  if (lambda(f, 0) != f.all()) fail(empty, "lambda{} = " + f.render(lambda(f, 0)));
  report.laws = {galois, lanti, ranti, add, empty, closure};
  return report;
}

int UpSetAlgebra::index_of(WorldSet s) const {
  auto it = std::find(upsets.begin(), upsets.end(), s);
  return it == upsets.end() ? -1 : static_cast<int>(it - upsets.begin());
}

UpSetAlgebra upset_algebra(const PolarityFrame& f) {
  const Poset p = f.poset();
  std::vector<WorldSet> ups;
  for (unsigned m : sorted_upsets(p)) ups.push_back(static_cast<WorldSet>(m));
  HeytingAlgebra alg = upset_lattice(p, f.worlds());
  NegationOp neg;
  for (WorldSet u : ups) {
    WorldSet l = lambda(f, u);
    auto it = std::find(ups.begin(), ups.end(), l);
    if (it == ups.end()) throw ClosureFailure("lambda" + f.render(u) + " = " + f.render(l) + " is not an up-set");
    neg.push_back(static_cast<int>(it - ups.begin()));
  }
  UpSetAlgebra out{make_model(std::move(alg), std::move(neg)), std::move(ups)};
  if (classify_negation(out.model).cls < NegationClass::Split)
    throw ClosureFailure("the negation induced by the frame is not split");
  return out;
}

bool is_selfadjoint(const PolarityFrame& f) {
  for (WorldSet s = 0;; ++s) {
    if (f.is_upset(s) && lambda(f, s) != rho(f, s)) return false;
    if (s == f.all()) break;
  }
  return true;
}

WorldSet kripke_truth_set(const PolarityFrame& f, const KripkeValuation& v, const Formula& formula) {
  for (const auto& [atom, s] : v) {
    if (!subset(s, f.all()) || !f.is_upset(s))
      throw NonHereditaryValuation("value of " + atom + " is " + f.render(s & f.all()) + ", which is not an up-set");
  }
  std::function<bool(int, const Formula&)> forces = [&](int w, const Formula& g) -> bool {
    switch (g.kind()) {
      case Connective::Atom:
      case Connective::MetaVar: {
        auto it = v.find(g.name());
        if (it == v.end()) throw UnboundAtom(g.name());
        return member(it->second, w);
      }
      case Connective::Bot:
        return false;
      case Connective::Top:
        return true;
      case Connective::And:
        return forces(w, g.left()) && forces(w, g.right());
      case Connective::Or:
        return forces(w, g.left()) || forces(w, g.right());
      case Connective::Imp:
        for (int w2 = 0; w2 < f.size(); ++w2)
          if (f.leq(w, w2) && forces(w2, g.left()) && !forces(w2, g.right())) return false;
        return true;
      case Connective::Neg:
        // w forces ~A iff every world forcing A is incompatible with w.
        for (int u = 0; u < f.size(); ++u)
          if (forces(u, g.inner()) && !f.related(u, w)) return false;
        return true;
      default:
        throw Error("formula " + render(g) + " has an open parameter");
    }
  };
  WorldSet out = 0;
  for (int w = 0; w < f.size(); ++w)
    if (forces(w, formula)) out |= bit(w);
  return out;
}

bool kripke_eval(const PolarityFrame& f, const KripkeValuation& v, int world, const Formula& formula) {
  if (world < 0 || world >= f.size()) throw Error("world index " + std::to_string(world) + " out of range");
  return member(kripke_truth_set(f, v, formula), world);
}

bool FrameAxiomReport::all_valid() const {
  if (selfadjoint_required && !selfadjoint) return false;
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomStatus& a) { return a.valid; });
}

std::vector<std::string> FrameAxiomReport::failing() const {
  std::vector<std::string> out;
  if (selfadjoint_required && !selfadjoint) out.emplace_back("selfadjoint");
  for (const auto& a : axioms)
    if (!a.valid) out.push_back(a.name);
  return out;
}

FrameAxiomReport verify_frame_axioms(const PolarityFrame& f, const std::string& system, int n) {
  const SystemDef sys = builtin_system(system, n);
  const UpSetAlgebra alg = upset_algebra(f);
  FrameAxiomReport report;
  report.system = sys.label();
  report.selfadjoint = is_selfadjoint(f);
  report.selfadjoint_required = sys.name == "mCZn";
  for (const auto& [name, pattern] : list_axioms(sys)) {
    ValidityResult r = is_valid(pattern, alg.model);
    AxiomStatus st{name, r.valid, ""};
    if (r.falsifier) st.falsifier = render_valuation(*r.falsifier, alg.model.lattice());
    report.axioms.push_back(std::move(st));
  }
  return report;
}

std::vector<PolarityFrame> enumerate_frames(int max_worlds) {
  if (max_worlds < 0 || max_worlds > 4)
    throw BoundExceeded("frame enumeration supports 0..4 worlds, got " + std::to_string(max_worlds));
  std::vector<PolarityFrame> out;
  for (int k = 1; k <= max_worlds; ++k) {
    const int pairs = k * k;
    for (const Poset& p : enumerate_posets(k)) {
      auto le = [&](int a, int b) { return p.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
        bool hereditary = true;
        for (int i = 0; i < pairs && hereditary; ++i) {
          if (!(mask >> i & 1U)) continue;
          const int u = i / k, w = i % k;
          for (int u2 = 0; u2 < k && hereditary; ++u2)
            for (int w2 = 0; w2 < k && hereditary; ++w2)
              if (le(u, u2) && le(w, w2) && !(mask >> (u2 * k + w2) & 1U)) hereditary = false;
        }
        if (!hereditary) continue;
        std::vector<std::pair<int, int>> rel;
        for (int i = 0; i < pairs; ++i)
          if (mask >> i & 1U) rel.emplace_back(i / k, i % k);
        out.push_back(build_frame(p, rel));
      }
    }
  }
  return out;
}

}  // namespace dacosta
