#include "dacosta/algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_map>

namespace dacosta {

int FiniteLattice::find(const std::string& name) const {
  for (int i = 0; i < size_; ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < size_ && direct; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
      if (direct) out.emplace_back(a, b);
    }
  return out;
}

HeytingAlgebra HeytingAlgebra::build(const std::vector<std::string>& names,
                                     const std::vector<std::pair<int, int>>& order) {
  const int k = static_cast<int>(names.size());
  if (k == 0) throw NotALattice("a lattice needs at least one element");
  HeytingAlgebra h;
  FiniteLattice& l = h.lattice_;
  l.size_ = k;
  l.names_ = names;
  const auto n = static_cast<std::size_t>(k * k);
  l.leq_.assign(n, 0);
  for (int a = 0; a < k; ++a) l.leq_[l.idx(a, a)] = 1;
  for (auto [a, b] : order) {
    if (a < 0 || b < 0 || a >= k || b >= k) throw NotALattice("order pair refers to an unknown element");
    l.leq_[l.idx(a, b)] = 1;
  }
  for (int m = 0; m < k; ++m)
    for (int a = 0; a < k; ++a)
      if (l.leq(a, m))
        for (int b = 0; b < k; ++b)
          if (l.leq(m, b)) l.leq_[l.idx(a, b)] = 1;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (l.leq(a, b) && l.leq(b, a))
        throw NotALattice("order is not antisymmetric: " + names[static_cast<std::size_t>(a)] + " and " +
                          names[static_cast<std::size_t>(b)] + " are below each other");

  l.meet_.assign(n, -1);
  l.join_.assign(n, -1);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int glb = -1, lub = -1;
      for (int c = 0; c < k; ++c) {
        if (l.leq(c, a) && l.leq(c, b)) {
          bool greatest = true;
          for (int d = 0; d < k && greatest; ++d)
            if (l.leq(d, a) && l.leq(d, b) && !l.leq(d, c)) greatest = false;
          if (greatest) glb = c;
        }
        if (l.leq(a, c) && l.leq(b, c)) {
          bool least = true;
          for (int d = 0; d < k && least; ++d)
            if (l.leq(a, d) && l.leq(b, d) && !l.leq(c, d)) least = false;
          if (least) lub = c;
        }
      }
      const std::string pair = names[static_cast<std::size_t>(a)] + " and " + names[static_cast<std::size_t>(b)];
      if (glb < 0) throw NotALattice(pair + " have no greatest lower bound");
      if (lub < 0) throw NotALattice(pair + " have no least upper bound");
      l.meet_[l.idx(a, b)] = glb;
      l.join_[l.idx(a, b)] = lub;
    }
  l.bot_ = 0;
  l.top_ = 0;
  for (int a = 1; a < k; ++a) {
    l.bot_ = l.meet(l.bot_, a);
    l.top_ = l.join(l.top_, a);
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          throw NotDistributive("distributivity fails at " + names[static_cast<std::size_t>(a)] + ", " +
                                names[static_cast<std::size_t>(b)] + ", " + names[static_cast<std::size_t>(c)]);

  h.imp_.assign(n, l.bot_);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int acc = l.bot_;
      for (int x = 0; x < k; ++x)
        if (l.leq(l.meet(x, a), b)) acc = l.join(acc, x);
      h.imp_[l.idx(a, b)] = acc;
    }
  for (int x = 0; x < k; ++x)
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (l.leq(l.meet(x, a), b) != l.leq(x, h.imp(a, b)))
          throw ResiduationFailure("residuation fails at " + names[static_cast<std::size_t>(x)] + ", " +
                                   names[static_cast<std::size_t>(a)] + ", " + names[static_cast<std::size_t>(b)]);
  return h;
}

HeytingAlgebra build_algebra(const LatticeSpec& spec) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < spec.elements.size(); ++i) {
    if (!index.emplace(spec.elements[i], static_cast<int>(i)).second)
      throw NotALattice("duplicate element " + spec.elements[i]);
  }
  std::vector<std::pair<int, int>> order;
  for (const auto& [a, b] : spec.order) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) throw NotALattice("order mentions unknown element " + (ia == index.end() ? a : b));
    order.emplace_back(ia->second, ib->second);
  }
  return HeytingAlgebra::build(spec.elements, order);
}

NegationModel make_model(HeytingAlgebra algebra, NegationOp neg) {
  if (static_cast<int>(neg.size()) != algebra.size())
    throw ModelFormatError("negation table has " + std::to_string(neg.size()) + " entries for " +
                           std::to_string(algebra.size()) + " elements");
  for (int v : neg)
    if (v < 0 || v >= algebra.size()) throw ModelFormatError("negation table value out of range");
  return NegationModel{std::move(algebra), std::move(neg)};
}

std::string render_valuation(const Valuation& v, const FiniteLattice& lattice) {
  std::string out;
  for (const auto& [name, value] : v) {
    if (!out.empty()) out += ',';
    out += name + "=" + lattice.name(value);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

std::vector<std::string> sorted_leaves(const Formula& f) {
  auto s = leaf_names(f);
  return {s.begin(), s.end()};
}

}  // namespace

CompiledFormula::CompiledFormula(const Formula& f) : CompiledFormula(f, sorted_leaves(f)) {}

CompiledFormula::CompiledFormula(const Formula& f, std::vector<std::string> variables) : vars_(std::move(variables)) {
  if (f.has_open_parameter()) throw ParameterError("cannot evaluate a formula with an open parameter n");
  std::unordered_map<Formula, int, FormulaHash> memo;
  std::map<std::string, int> var_index;
  for (std::size_t i = 0; i < vars_.size(); ++i) var_index[vars_[i]] = static_cast<int>(i);
  auto compile = [&](auto&& self, const Formula& g) -> int {
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    Instr ins{g.kind(), -1, -1};
    switch (g.kind()) {
      case Connective::Atom:
      case Connective::MetaVar: {
        auto it = var_index.find(g.name());
        if (it == var_index.end()) throw UnboundAtom(g.name());
        ins.a = it->second;
        break;
      }
      case Connective::Bot:
      case Connective::Top:
        break;
      case Connective::Neg:
        ins.a = self(self, g.inner());
        break;
      case Connective::And:
      case Connective::Or:
      case Connective::Imp:
        ins.a = self(self, g.left());
        ins.b = self(self, g.right());
        break;
      default:
        throw ParameterError("open parameter node in formula");
    }
    code_.push_back(ins);
    int id = static_cast<int>(code_.size()) - 1;
    memo.emplace(g, id);
    return id;
  };
  compile(compile, f);
}

int CompiledFormula::run(const NegationModel& m, const std::vector<int>& values, std::vector<int>& r) const {
  const FiniteLattice& l = m.lattice();
  r.resize(code_.size());
  for (std::size_t i = 0; i < code_.size(); ++i) {
    const Instr& in = code_[i];
    int v = 0;
    switch (in.op) {
      case Connective::Atom:
      case Connective::MetaVar:
        v = values[static_cast<std::size_t>(in.a)];
        break;
      case Connective::Bot:
        v = l.bot();
        break;
      case Connective::Top:
        v = l.top();
        break;
      case Connective::Neg:
        v = m.neg[static_cast<std::size_t>(r[static_cast<std::size_t>(in.a)])];
        break;
      case Connective::And:
        v = l.meet(r[static_cast<std::size_t>(in.a)], r[static_cast<std::size_t>(in.b)]);
        break;
      case Connective::Or:
        v = l.join(r[static_cast<std::size_t>(in.a)], r[static_cast<std::size_t>(in.b)]);
        break;
      case Connective::Imp:
        v = m.algebra.imp(r[static_cast<std::size_t>(in.a)], r[static_cast<std::size_t>(in.b)]);
        break;
      default:
        break;
    }
    r[i] = v;
  }
  return r.back();
}

int CompiledFormula::run(const NegationModel& m, const std::vector<int>& values) const {
  std::vector<int> scratch;
  return run(m, values, scratch);
}

int eval(const Formula& f, const NegationModel& m, const Valuation& v) {
  CompiledFormula c(f);
  std::vector<int> values;
  for (const auto& name : c.variables()) {
    auto it = v.find(name);
    if (it == v.end()) throw UnboundAtom(name);
    if (it->second < 0 || it->second >= m.size()) throw ParameterError("valuation of " + name + " is out of range");
    values.push_back(it->second);
  }
  return c.run(m, values);
}

namespace {

// Calls `visit` on every assignment in lexicographic order (first variable
// most significant); stops when `visit` returns false.
template <typename F>
void for_each_assignment(int vars, int k, F&& visit) {
  std::vector<int> values(static_cast<std::size_t>(vars), 0);
  for (;;) {
    if (!visit(values)) return;
    int i = vars - 1;
    while (i >= 0 && ++values[static_cast<std::size_t>(i)] == k) values[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
  }
}

Valuation to_valuation(const std::vector<std::string>& vars, const std::vector<int>& values) {
  Valuation v;
  for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = values[i];
  return v;
}

}  // namespace

ValidityResult is_valid(const Formula& f, const NegationModel& m) { return entails({}, f, m); }

ValidityResult entails(const std::vector<Formula>& premises, const Formula& conclusion, const NegationModel& m) {
  std::set<std::string> names = leaf_names(conclusion);
  for (const auto& p : premises) {
    auto more = leaf_names(p);
    names.insert(more.begin(), more.end());
  }
  std::vector<std::string> vars(names.begin(), names.end());
  std::vector<CompiledFormula> prem;
  for (const auto& p : premises) prem.emplace_back(p, vars);
  CompiledFormula concl(conclusion, vars);
  const int top = m.lattice().top();
  ValidityResult result;
  std::vector<int> scratch;
  for_each_assignment(static_cast<int>(vars.size()), m.size(), [&](const std::vector<int>& values) {
    for (const auto& p : prem)
      if (p.run(m, values, scratch) != top) return true;
    if (concl.run(m, values, scratch) == top) return true;
    result.valid = false;
    result.falsifier = to_valuation(vars, values);
    return false;
  });
  return result;
}

bool validates_all(const std::vector<CompiledFormula>& axioms, const NegationModel& m) {
  const int top = m.lattice().top();
  std::vector<int> scratch;
  for (const auto& ax : axioms) {
    bool ok = true;
    for_each_assignment(static_cast<int>(ax.variables().size()), m.size(), [&](const std::vector<int>& values) {
      ok = ax.run(m, values, scratch) == top;
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Classification

const char* to_string(NegationClass c) {
  switch (c) {
    case NegationClass::None:
      return "None";
    case NegationClass::General:
      return "General";
    case NegationClass::Split:
      return "Split";
    case NegationClass::Constructive:
      return "Constructive";
    case NegationClass::DeMorgan:
      return "DeMorgan";
  }
  return "?";
}

std::vector<const NegationProperty*> ClassReport::violations() const {
  std::vector<const NegationProperty*> out;
  for (const auto& p : properties)
    if (!p.holds && p.required <= cls) out.push_back(&p);
  return out;
}

namespace {

NegationOp adjoint_table(const NegationModel& m) {
  const FiniteLattice& l = m.lattice();
  NegationOp t(static_cast<std::size_t>(l.size()), l.bot());
  for (int y = 0; y < l.size(); ++y) {
    int acc = l.bot();
    for (int x = 0; x < l.size(); ++x)
      if (l.leq(y, m.neg[static_cast<std::size_t>(x)])) acc = l.join(acc, x);
    t[static_cast<std::size_t>(y)] = acc;
  }
  return t;
}

class PropertyScan {
 public:
  PropertyScan(const NegationModel& m, ClassReport& report) : m_(m), l_(m.lattice()), report_(report) {}

  int neg(int x) const { return m_.neg[static_cast<std::size_t>(x)]; }

  template <typename Pred>
  void unary(const std::string& name, NegationClass required, Pred holds) {
    NegationProperty p{name, required, true, {}};
    for (int x = 0; x < l_.size() && p.holds; ++x)
      if (!holds(x)) {
        p.holds = false;
        p.counterexample = "x=" + l_.name(x);
      }
    report_.properties.push_back(std::move(p));
  }

  template <typename Pred>
  void binary(const std::string& name, NegationClass required, Pred holds) {
    NegationProperty p{name, required, true, {}};
    for (int x = 0; x < l_.size() && p.holds; ++x)
      for (int y = 0; y < l_.size() && p.holds; ++y)
        if (!holds(x, y)) {
          p.holds = false;
          p.counterexample = "x=" + l_.name(x) + ", y=" + l_.name(y);
        }
    report_.properties.push_back(std::move(p));
  }

  void constant(const std::string& name, NegationClass required, bool holds, const std::string& why) {
    report_.properties.push_back({name, required, holds, holds ? std::string() : why});
  }

 private:
  const NegationModel& m_;
  const FiniteLattice& l_;
  ClassReport& report_;
};

}  // namespace

ClassReport classify_negation(const NegationModel& m) {
  const FiniteLattice& l = m.lattice();
  auto neg = [&](int x) { return m.neg[static_cast<std::size_t>(x)]; };
  const int k = l.size();
  ClassReport r;
  r.antitone = r.join_to_meet = r.meet_to_join = r.involutive = true;
  for (int x = 0; x < k; ++x) {
    if (neg(x) == l.top()) r.top_in_image = true;
    if (neg(neg(x)) != x) r.involutive = false;
    for (int y = 0; y < k; ++y) {
      if (l.leq(x, y) && !l.leq(neg(y), neg(x))) r.antitone = false;
      if (neg(l.join(x, y)) != l.meet(neg(x), neg(y))) r.join_to_meet = false;
      if (neg(l.meet(x, y)) != l.join(neg(x), neg(y))) r.meet_to_join = false;
    }
  }
  r.bot_to_top = neg(l.bot()) == l.top();
  if (r.antitone && r.top_in_image) {
    r.cls = NegationClass::General;
    if (r.join_to_meet && r.bot_to_top) {
      r.cls = NegationClass::Split;
      if (r.meet_to_join) {
        r.cls = NegationClass::Constructive;
        if (r.involutive) r.cls = NegationClass::DeMorgan;
      }
    }
  }

  using C = NegationClass;
  PropertyScan s(m, r);
  s.binary("general.neg_join_le_meet", C::General,
           [&](int x, int y) { return l.leq(neg(l.join(x, y)), l.meet(neg(x), neg(y))); });
  s.binary("general.neg_meet_ge_join", C::General,
           [&](int x, int y) { return l.leq(l.join(neg(x), neg(y)), neg(l.meet(x, y))); });
  s.constant("general.neg_bot_is_top", C::General, r.bot_to_top, "~0 = " + l.name(neg(l.bot())));

  const NegationOp tilde = adjoint_table(m);
  auto adj = [&](int y) { return tilde[static_cast<std::size_t>(y)]; };
  s.binary("split.neg_join_eq_meet", C::Split,
           [&](int x, int y) { return neg(l.join(x, y)) == l.meet(neg(x), neg(y)); });
  s.binary("split.galois", C::Split, [&](int x, int y) { return l.leq(y, neg(x)) == l.leq(x, adj(y)); });
  s.unary("split.unit", C::Split, [&](int x) { return l.leq(x, adj(neg(x))); });
  s.unary("split.counit", C::Split, [&](int x) { return l.leq(x, neg(adj(x))); });

  s.binary("constructive.neg_meet_eq_join", C::Constructive,
           [&](int x, int y) { return neg(l.meet(x, y)) == l.join(neg(x), neg(y)); });
  s.unary("constructive.selfadjoint", C::Constructive, [&](int x) { return adj(x) == neg(x); });
  s.unary("constructive.double_negation_inflationary", C::Constructive,
          [&](int x) { return l.leq(x, neg(neg(x))); });
  s.binary("constructive.proto_demorgan_join", C::Constructive,
           [&](int x, int y) { return l.leq(l.meet(x, y), neg(l.join(neg(x), neg(y)))); });
  s.binary("constructive.proto_demorgan_meet", C::Constructive,
           [&](int x, int y) { return l.leq(l.join(x, y), neg(l.meet(neg(x), neg(y)))); });

  s.binary("demorgan.meet", C::DeMorgan, [&](int x, int y) { return neg(l.meet(x, y)) == l.join(neg(x), neg(y)); });
  s.binary("demorgan.join", C::DeMorgan, [&](int x, int y) { return neg(l.join(x, y)) == l.meet(neg(x), neg(y)); });
  s.binary("demorgan.contrapositive", C::DeMorgan,
           [&](int x, int y) { return l.leq(x, y) == l.leq(neg(y), neg(x)); });
  return r;
}

std::optional<AdjointResult> right_adjoint(const NegationModel& m) {
  ClassReport r = classify_negation(m);
  if (r.cls < NegationClass::Split) return std::nullopt;
  const FiniteLattice& l = m.lattice();
  AdjointResult out{adjoint_table(m), false};
  auto neg = [&](int x) { return m.neg[static_cast<std::size_t>(x)]; };
  auto adj = [&](int y) { return out.table[static_cast<std::size_t>(y)]; };
  for (int x = 0; x < l.size(); ++x) {
    if (!l.leq(x, adj(neg(x))) || !l.leq(x, neg(adj(x))))
      throw AdjointLawFailure("adjoint unit/counit fails at " + l.name(x));
    for (int y = 0; y < l.size(); ++y)
      if (l.leq(y, neg(x)) != l.leq(x, adj(y)))
        throw AdjointLawFailure("Galois condition fails at " + l.name(x) + ", " + l.name(y));
  }
  out.selfadjoint = out.table == m.neg;
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::uint64_t poset_code(const Poset& p, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  const int n = p.points;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        code |= std::uint64_t{1} << (perm[static_cast<std::size_t>(i)] * n + perm[static_cast<std::size_t>(j)]);
  return code;
}

std::uint64_t canonical_code(const Poset& p) {
  std::vector<int> perm(static_cast<std::size_t>(p.points));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, poset_code(p, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_upset(const Poset& p, unsigned mask) {
  for (int i = 0; i < p.points; ++i) {
    if (!(mask >> i & 1U)) continue;
    for (int j = 0; j < p.points; ++j)
      if (p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] && !(mask >> j & 1U)) return false;
  }
  return true;
}

}  // namespace

std::vector<unsigned> sorted_upsets(const Poset& p) {
  std::vector<unsigned> ups;
  for (unsigned mask = 0; mask < (1U << p.points); ++mask)
    if (is_upset(p, mask)) ups.push_back(mask);
  auto members = [](unsigned m) {
    std::vector<int> v;
    for (int i = 0; m >> i; ++i)
      if (m >> i & 1U) v.push_back(i);
    return v;
  };
  std::sort(ups.begin(), ups.end(), [&](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return members(a) < members(b);
  });
  return ups;
}

namespace {

void check_bounds(const EnumerationBounds& b) {
  if (b.max_points < 0 || b.max_points > kHardMaxPoints)
    throw BoundExceeded("max points " + std::to_string(b.max_points) + " outside 0.." + std::to_string(kHardMaxPoints));
  if (b.max_lattice < 1 || b.max_lattice > kHardMaxLattice)
    throw BoundExceeded("max lattice size " + std::to_string(b.max_lattice) + " outside 1.." +
                        std::to_string(kHardMaxLattice));
}

}  // namespace

std::vector<Poset> enumerate_posets(int points) {
  if (points < 0 || points > kHardMaxPoints)
    throw BoundExceeded("posets limited to " + std::to_string(kHardMaxPoints) + " points");
  // Every poset has a linear extension, so relations with i <= j only for
  // index i < j cover all isomorphism types.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < points; ++i)
    for (int j = i + 1; j < points; ++j) slots.emplace_back(i, j);
  std::vector<Poset> out;
  std::set<std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Poset p{points, std::vector<std::vector<bool>>(static_cast<std::size_t>(points),
                                                   std::vector<bool>(static_cast<std::size_t>(points), false))};
    for (int i = 0; i < points; ++i) p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1U)
        p.leq[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = true;
    bool transitive = true;
    for (int i = 0; i < points && transitive; ++i)
      for (int j = 0; j < points && transitive; ++j)
        for (int k = 0; k < points && transitive; ++k)
          if (p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
              p.leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
              !p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
            transitive = false;
    if (!transitive) continue;
    if (seen.insert(canonical_code(p)).second) out.push_back(std::move(p));
  }
  return out;
}

HeytingAlgebra upset_lattice(const Poset& p, const std::vector<std::string>& point_names) {
  const std::vector<unsigned> ups = sorted_upsets(p);
  const int k = static_cast<int>(ups.size());
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    if (!point_names.empty()) {
      std::string s = "{";
      bool first = true;
      for (int w = 0; w < p.points; ++w)
        if (ups[static_cast<std::size_t>(i)] >> w & 1U) {
          if (!first) s += ',';
          first = false;
          s += point_names.at(static_cast<std::size_t>(w));
        }
      names.push_back(s + "}");
    } else if (i == 0) {
      names.emplace_back("0");
    } else if (i == k - 1) {
      names.emplace_back("1");
    } else {
      names.push_back("x" + std::to_string(i));
    }
  }
  std::vector<std::pair<int, int>> order;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && (ups[static_cast<std::size_t>(a)] & ~ups[static_cast<std::size_t>(b)]) == 0) order.emplace_back(a, b);
  return HeytingAlgebra::build(names, order);
}

std::vector<HeytingAlgebra> enumerate_distributive_lattices(const EnumerationBounds& bounds) {
  check_bounds(bounds);
  std::vector<std::pair<int, HeytingAlgebra>> found;
  for (int points = 0; points <= bounds.max_points; ++points) {
    // A poset on p points has at least p + 1 up-sets.
    if (points + 1 > bounds.max_lattice) break;
    for (const Poset& p : enumerate_posets(points)) {
      int count = static_cast<int>(sorted_upsets(p).size());
      if (count <= bounds.max_lattice) found.emplace_back(count, upset_lattice(p));
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<HeytingAlgebra> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

namespace {

bool passes(const NegationModel& m, NegationClass filter) {
  if (filter <= NegationClass::General) return true;
  return classify_negation(m).cls >= filter;
}

// Tables of antitone maps with ~0 = 1, in lexicographic order. Element
// indices follow a linear extension, so every predecessor of x is assigned
// before x.
bool general_tables(NegationModel& m, NegationClass filter, int x,
                    const std::function<bool(const NegationModel&)>& visit) {
  const FiniteLattice& l = m.lattice();
  const int k = l.size();
  if (x == k) return !passes(m, filter) || visit(m);
  for (int v = 0; v < k; ++v) {
    if (x == l.bot() && v != l.top()) continue;
    bool ok = true;
    for (int y = 0; y < x && ok; ++y)
      if (l.leq(y, x) && !l.leq(v, m.neg[static_cast<std::size_t>(y)])) ok = false;
    if (!ok) continue;
    m.neg[static_cast<std::size_t>(x)] = v;
    if (!general_tables(m, filter, x + 1, visit)) return false;
  }
  return true;
}

// Visits every table on m's lattice; false if the visitor asked to stop.
bool for_each_table(NegationModel& m, NegationClass filter, const std::function<bool(const NegationModel&)>& visit) {
  const int k = m.size();
  if (filter != NegationClass::None) return general_tables(m, filter, 0, visit);
  bool go = true;
  for_each_assignment(k, k, [&](const std::vector<int>& values) {
    m.neg = values;
    go = visit(m);
    return go;
  });
  return go;
}

}  // namespace

void for_each_model(const EnumerationBounds& bounds, NegationClass filter,
                    const std::function<bool(const NegationModel&)>& visit) {
  for (auto& algebra : enumerate_distributive_lattices(bounds)) {
    const auto k = static_cast<std::size_t>(algebra.size());
    NegationModel m{std::move(algebra), NegationOp(k, 0)};
    if (!for_each_table(m, filter, visit)) return;
  }
}

std::vector<NegationModel> enumerate_models(const EnumerationBounds& bounds, NegationClass filter) {
  std::vector<NegationModel> out;
  for_each_model(bounds, filter, [&](const NegationModel& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

SearchResult countermodel_search(const std::vector<Formula>& axioms, const Formula& target,
                                 const EnumerationBounds& bounds, NegationClass filter) {
  check_bounds(bounds);
  std::vector<CompiledFormula> compiled;
  for (const auto& a : axioms) compiled.emplace_back(a);
  // Cheap axioms first; the verdict does not depend on the order.
  std::stable_sort(compiled.begin(), compiled.end(), [](const CompiledFormula& a, const CompiledFormula& b) {
    return a.variables().size() < b.variables().size();
  });
  SearchResult result;
  for (auto& algebra : enumerate_distributive_lattices(bounds)) {
    ++result.lattices_scanned;
    const auto k = static_cast<std::size_t>(algebra.size());
    NegationModel m{std::move(algebra), NegationOp(k, 0)};
    bool go = for_each_table(m, filter, [&](const NegationModel& model) {
      ++result.models_scanned;
      if (!validates_all(compiled, model)) return true;
      ++result.models_validating;
      ValidityResult v = is_valid(target, model);
      if (v.valid) return true;
      result.found = true;
      result.model = model;
      result.valuation = *v.falsifier;
      return false;
    });
    if (!go) break;
  }
  return result;
}

}  // namespace dacosta
