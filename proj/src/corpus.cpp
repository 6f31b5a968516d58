#include "dacosta/corpus.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <regex>

#include "dacosta/builder.hpp"

#ifndef DACOSTA_CORPUS_DIR
#define DACOSTA_CORPUS_DIR "proofs"
#endif

namespace dacosta {

const char* to_string(BinOp op) {
  switch (op) {
    case BinOp::Imp:
      return "IMP";
    case BinOp::And:
      return "AND";
    case BinOp::Or:
      return "OR";
  }
  return "?";
}

Formula apply_op(BinOp op, const Formula& a, const Formula& b) {
  switch (op) {
    case BinOp::Imp:
      return implies(a, b);
    case BinOp::And:
      return a & b;
    case BinOp::Or:
      return a | b;
  }
  throw InternalError("bad operator");
}

const std::vector<BinOp>& all_binops() {
  static const std::vector<BinOp> ops{BinOp::Imp, BinOp::And, BinOp::Or};
  return ops;
}

Formula pow0(const Formula& base, int k) { return k == 0 ? base : pow(base, k); }

namespace {

const Formula A = Formula::metavar("A");
const Formula B = Formula::metavar("B");

struct ParsedName {
  std::string family;
  int n = 0;
  std::optional<BinOp> op;
};

std::optional<ParsedName> parse_name(const std::string& name) {
  static const std::regex with_op(R"((CLUB|DIAMOND)_([0-9]+)_(IMP|AND|OR))");
  static const std::regex plain(R"((RED11|RED12|PROP)_([0-9]+))");
  std::smatch m;
  if (std::regex_match(name, m, with_op)) {
    BinOp op = m[3] == "IMP" ? BinOp::Imp : m[3] == "AND" ? BinOp::And : BinOp::Or;
    return ParsedName{m[1], std::stoi(m[2]), op};
  }
  if (std::regex_match(name, m, plain)) return ParsedName{m[1], std::stoi(m[2]), std::nullopt};
  static const std::vector<std::string> fixed{"ID", "T0", "T1", "T2", "T3", "NEFQ", "HEART", "NEG0", "NEGOR"};
  if (std::find(fixed.begin(), fixed.end(), name) != fixed.end()) return ParsedName{name, 0, std::nullopt};
  return std::nullopt;
}

Formula club_statement(int n, BinOp op) {
  return implies(~pow0(apply_op(op, A, B), n), ~pow0(A, n) | ~pow0(B, n));
}

Formula diamond_statement(int n, BinOp op) { return implies(cpow(A, n) & cpow(B, n), pow(apply_op(op, A, B), n)); }

}  // namespace

std::optional<MetaFormula> corpus_statement(const std::string& name) {
  auto p = parse_name(name);
  if (!p) return std::nullopt;
  if (p->family == "ID") return parse_schema("A -> A");
  if (p->family == "T0") return parse_schema("((A -> B) & (A -> C)) -> (A -> (B & C))");
  if (p->family == "T1") return parse_schema("(A -> (B -> C)) -> (B -> (A -> C))");
  if (p->family == "T2") return parse_schema("(A -> B) -> ((B -> C) -> (A -> C))");
  if (p->family == "T3") return parse_schema("(A -> (B -> C)) <-> ((A & B) -> C)");
  if (p->family == "NEFQ") return parse_schema("(A & ~A) -> ~B");
  if (p->family == "HEART") return parse_schema("~~(A & B) -> (~~A & ~~B)");
  if (p->family == "NEG0") return parse_schema("~0 <-> 1");
  if (p->family == "NEGOR") return parse_schema("~(A | B) <-> (~A & ~B)");
  if (p->n < 1) return std::nullopt;
  if (p->family == "CLUB") return club_statement(p->n, *p->op);
  if (p->family == "DIAMOND") return diamond_statement(p->n, *p->op);
  if (p->family == "RED11") return expand_parameter(find_schema("11")->pattern, p->n);
  if (p->family == "RED12") return expand_parameter(find_schema("12")->pattern, p->n);
  return implies(cpow(A, p->n), cpow(~A, p->n));  // PROP
}

SystemDef corpus_system(const std::string& name) {
  auto p = parse_name(name);
  if (!p) throw Error("not a corpus theorem: " + name);
  const std::string& f = p->family;
  if (f == "ID" || f == "T0" || f == "T1" || f == "T2" || f == "T3") return builtin_system("IPCplus");
  if (f == "NEFQ" || f == "HEART" || f == "CLUB" || f == "RED11") return builtin_system("mZnAnti");
  if (f == "NEGOR" || f == "DIAMOND" || f == "RED12") return builtin_system("mZnSplit");
  if (f == "NEG0") return builtin_system("mZn", 1);
  // PROP: from n = 2 on the power collapse needs only antitonicity; n = 1
  // leans on axiom 12(1).
  return p->n >= 2 ? builtin_system("mZnAnti") : builtin_system("mZn", 1);
}

const std::vector<std::string>& static_corpus_names() {
  static const std::vector<std::string> names{"ID", "T0", "T1", "T2", "T3", "NEFQ", "HEART", "NEG0", "NEGOR"};
  return names;
}

const std::vector<std::string>& corpus_order() {
  static const std::vector<std::string> order = [] {
    std::vector<std::string> out = static_corpus_names();
    for (const char* fam : {"CLUB", "DIAMOND"})
      for (int n = 1; n <= 3; ++n)
        for (BinOp op : all_binops()) out.push_back(std::string(fam) + "_" + std::to_string(n) + "_" + to_string(op));
    for (const char* fam : {"RED11", "RED12", "PROP"})
      for (int n = 1; n <= 3; ++n) out.push_back(std::string(fam) + "_" + std::to_string(n));
    return out;
  }();
  return order;
}

std::string corpus_file_name(const std::string& name) {
  std::string out;
  for (char c : name) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out + ".prf";
}

// ---------------------------------------------------------------------------
// Generators

namespace {

using Step = ProofBuilder::Step;

class Derivation {
 public:
  explicit Derivation(bool cite_identity = true) : b(cite_identity) {}

  ProofBuilder b;

  const Formula& f(Step s) const { return b.formula(s); }

  Step ax(const std::string& name, const Substitution& s, std::optional<int> n = std::nullopt) {
    return b.axiom(name, s, n);
  }

  Step cite(const std::string& name, const Substitution& s) {
    auto st = corpus_statement(name);
    if (!st) throw InternalError("no statement for " + name);
    return b.theorem(name, *st, s);
  }

  Step mp(Step x, Step xy) { return b.mp(x, xy); }

  Step conj(Step x, Step y) { return mp(y, mp(x, ax("3", {{"A", f(x)}, {"B", f(y)}}))); }
  Step fst(Step xy) { return mp(xy, ax("4", {{"A", f(xy).left()}, {"B", f(xy).right()}})); }
  Step snd(Step xy) { return mp(xy, ax("5", {{"A", f(xy).left()}, {"B", f(xy).right()}})); }
  Step inl(Step x, const Formula& other) { return mp(x, ax("6", {{"A", f(x)}, {"B", other}})); }
  Step inr(const Formula& other, Step y) { return mp(y, ax("7", {{"A", other}, {"B", f(y)}})); }

  // X -> Y  gives  ~Y -> ~X
  Step contra(Step xy) { return mp(xy, ax("9b", {{"A", f(xy).left()}, {"B", f(xy).right()}})); }

  // X -> Y, Y -> Z  gives  X -> Z, via T2
  Step syl(Step xy, Step yz) {
    Step t2 = cite("T2", {{"A", f(xy).left()}, {"B", f(xy).right()}, {"C", f(yz).right()}});
    return mp(yz, mp(xy, t2));
  }

  // X -> Y, X -> Z  gives  X -> Y & Z, via T0
  Step pair(Step xy, Step xz) {
    Step t0 = cite("T0", {{"A", f(xy).left()}, {"B", f(xy).right()}, {"C", f(xz).right()}});
    return mp(conj(xy, xz), t0);
  }

  // X -> Z, Y -> Z, X | Y  gives  Z
  Step or_elim(Step xz, Step yz, Step xy) {
    Step k = ax("8", {{"A", f(xz).left()}, {"B", f(yz).left()}, {"C", f(xz).right()}});
    return mp(xy, mp(yz, mp(xz, k)));
  }

  // From a proof of base^(n), the prefix base^(m), m <= n.
  Step cpow_prefix(Step s, int n, int m) {
    for (int k = n; k > m; --k) s = fst(s);
    return s;
  }

  // From a proof of base^(n), the single power base^m, 1 <= m <= n.
  Step cpow_component(Step s, int n, int m) {
    s = cpow_prefix(s, n, m);
    return m == 1 ? s : snd(s);
  }

  Step id(const Formula& x) { return cite("ID", {{"A", x}}); }

  // ~K -> ~V for a provable K, any V.
  Step neg_theorem_refutes(Step k, const Formula& v) {
    Step vk = mp(k, ax("1", {{"A", f(k)}, {"B", v}}));
    return contra(vk);
  }

  // X^m -> Y^k for m >= 2, k >= 1. Both sides pass through ~~(X -> X):
  // a refuted theorem refutes everything, so it makes X^(m-1) contradictory.
  Step collapse(const Formula& x, int m, const Formula& y, int k) {
    const Formula kf = implies(x, x);
    Step kk = id(x);
    const Formula z = pow(x, m - 1);  // z = ~w
    const Formula w = z.inner();
    Step to_contradiction = pair(neg_theorem_refutes(kk, w), neg_theorem_refutes(kk, z));
    Step left = contra(to_contradiction);  // X^m -> ~~K
    const Formula v = pow0(y, k - 1);
    Step right = contra(cite("NEFQ", {{"A", v}, {"B", kf}}));  // ~~K -> Y^k
    return syl(left, right);
  }

  // Left-nested conjunction of the steps.
  Step conj_all(const std::vector<Step>& parts) {
    Step acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
    return acc;
  }

  ProofScript finish(Step goal, const std::string& name) {
    auto expected = corpus_statement(name);
    if (!expected || *expected != f(goal))
      throw InternalError("generator for " + name + " proved " + render(f(goal)));
    return b.finish(goal, name, corpus_system(name));
  }
};

ProofScript gen_id() {
  Derivation d(false);
  Step h = d.b.hyp(A);
  return d.finish(d.b.discharge(h, h), "ID");
}

ProofScript gen_t0() {
  Derivation d;
  const Formula C = Formula::metavar("C");
  Step h = d.b.hyp(implies(A, B) & implies(A, C));
  Step a = d.b.hyp(A);
  Step bc = d.conj(d.mp(a, d.fst(h)), d.mp(a, d.snd(h)));
  return d.finish(d.b.discharge(h, d.b.discharge(a, bc)), "T0");
}

ProofScript gen_t1() {
  Derivation d;
  const Formula C = Formula::metavar("C");
  Step h = d.b.hyp(implies(A, implies(B, C)));
  Step hb = d.b.hyp(B);
  Step ha = d.b.hyp(A);
  Step c = d.mp(hb, d.mp(ha, h));
  return d.finish(d.b.discharge(h, d.b.discharge(hb, d.b.discharge(ha, c))), "T1");
}

ProofScript gen_t2() {
  Derivation d;
  const Formula C = Formula::metavar("C");
  Step h1 = d.b.hyp(implies(A, B));
  Step h2 = d.b.hyp(implies(B, C));
  Step a = d.b.hyp(A);
  Step c = d.mp(d.mp(a, h1), h2);
  return d.finish(d.b.discharge(h1, d.b.discharge(h2, d.b.discharge(a, c))), "T2");
}

ProofScript gen_t3() {
  Derivation d;
  const Formula C = Formula::metavar("C");
  Step h1 = d.b.hyp(implies(A, implies(B, C)));
  Step h2 = d.b.hyp(A & B);
  Step c1 = d.mp(d.snd(h2), d.mp(d.fst(h2), h1));
  Step forward = d.b.discharge(h1, d.b.discharge(h2, c1));

  Step g1 = d.b.hyp(implies(A & B, C));
  Step ga = d.b.hyp(A);
  Step gb = d.b.hyp(B);
  Step c2 = d.mp(d.conj(ga, gb), g1);
  Step backward = d.b.discharge(g1, d.b.discharge(ga, d.b.discharge(gb, c2)));
  return d.finish(d.conj(forward, backward), "T3");
}

ProofScript gen_nefq() {
  Derivation d;
  Step weak = d.ax("1", {{"A", A}, {"B", B}});
  Step anti = d.ax("9b", {{"A", B}, {"B", A}});
  Step curried = d.syl(weak, anti);  // A -> (~A -> ~B)
  Step t3 = d.cite("T3", {{"A", A}, {"B", ~A}, {"C", ~B}});
  return d.finish(d.mp(curried, d.fst(t3)), "NEFQ");
}

ProofScript gen_heart() {
  Derivation d;
  Step left = d.contra(d.contra(d.ax("4", {{"A", A}, {"B", B}})));
  Step right = d.contra(d.contra(d.ax("5", {{"A", A}, {"B", B}})));
  return d.finish(d.pair(left, right), "HEART");
}

ProofScript gen_neg0() {
  Derivation d;
  Step up = d.ax("11b.1", {{"A", ~Formula::bot()}});
  Step down = d.ax("10b.1", {});
  return d.finish(d.conj(up, down), "NEG0");
}

ProofScript gen_negor() {
  Derivation d;
  Step split = d.pair(d.contra(d.ax("6", {{"A", A}, {"B", B}})), d.contra(d.ax("7", {{"A", A}, {"B", B}})));
  Step join = d.ax("12b", {{"A", A}, {"B", B}});
  return d.finish(d.conj(split, join), "NEGOR");
}

ProofScript gen_club(int n, BinOp op) {
  Derivation d;
  const std::string name = "CLUB_" + std::to_string(n) + "_" + to_string(op);
  const Formula x = pow0(apply_op(op, A, B), n - 1);
  Step heart = d.cite("HEART", {{"A", x}, {"B", ~x}});
  Step nefq = d.cite("NEFQ", {{"A", ~~x}, {"B", pow(A, n)}});
  Step core = d.syl(heart, nefq);
  Step widen = d.ax("6", {{"A", ~pow(A, n)}, {"B", ~pow(B, n)}});
  return d.finish(d.syl(core, widen), name);
}

// (A^(n) & B^(n)) -> (A*B)^n.
ProofScript gen_diamond(int n, BinOp op) {
  Derivation d;
  const std::string name = "DIAMOND_" + std::to_string(n) + "_" + to_string(op);
  Step h = d.b.hyp(cpow(A, n) & cpow(B, n));
  const Formula ab = apply_op(op, A, B);

  if (n == 1 && op == BinOp::And) {
    // (A&B) & ~(A&B) -> A & ~A, then contrapose against A^1.
    const Formula x = ab;
    Step to_a = d.syl(d.ax("4", {{"A", x}, {"B", ~x}}), d.ax("4", {{"A", A}, {"B", B}}));
    Step to_na = d.cite("NEFQ", {{"A", x}, {"B", A}});
    Step goal = d.mp(d.fst(h), d.contra(d.pair(to_a, to_na)));
    return d.finish(d.b.discharge(h, goal), name);
  }

  const Formula x = pow0(ab, n - 1);
  const Formula p = pow0(A, n - 1);
  const Formula q = pow0(B, n - 1);
  const Formula contradiction = (p & ~p) | (q & ~q);
  Step k = d.b.hyp(x & ~x);
  Step lemma;  // (x & ~x) -> contradiction, under h
  if (n == 1 && op == BinOp::Or) {
    Step nab = d.snd(k);
    Step na = d.mp(nab, d.contra(d.ax("6", {{"A", A}, {"B", B}})));
    Step nb = d.mp(nab, d.contra(d.ax("7", {{"A", A}, {"B", B}})));
    Step ha = d.b.hyp(A);
    Step hb = d.b.hyp(B);
    Step from_a = d.b.discharge(ha, d.inl(d.conj(ha, na), q & ~q));
    Step from_b = d.b.discharge(hb, d.inr(p & ~p, d.conj(hb, nb)));
    lemma = d.b.discharge(k, d.or_elim(from_a, from_b, d.fst(k)));
  } else if (n == 1) {
    // The club formula at n - 1 = 0 is outside its range; this citation
    // stands for the missing step and is rejected by the checker.
    const Formula claimed = implies(d.f(h), implies(x & ~x, contradiction));
    lemma = d.mp(h, d.b.theorem("CLUB_0_" + std::string(to_string(op)), claimed, {}));
  } else {
    const std::string club = "CLUB_" + std::to_string(n - 1) + "_" + to_string(op);
    Step split = d.mp(d.snd(k), d.cite(club, {{"A", A}, {"B", B}}));  // ~p | ~q
    Step pp = d.cpow_component(d.fst(h), n, n - 1);
    Step qq = d.cpow_component(d.snd(h), n, n - 1);
    Step np = d.b.hyp(~p);
    Step nq = d.b.hyp(~q);
    Step from_p = d.b.discharge(np, d.inl(d.conj(pp, np), q & ~q));
    Step from_q = d.b.discharge(nq, d.inr(p & ~p, d.conj(qq, nq)));
    lemma = d.b.discharge(k, d.or_elim(from_p, from_q, split));
  }
  Step flipped = d.contra(lemma);  // ~contradiction -> ~(x & ~x)
  Step join = d.ax("12b", {{"A", p & ~p}, {"B", q & ~q}});
  Step both = d.conj(d.cpow_component(d.fst(h), n, n), d.cpow_component(d.snd(h), n, n));
  Step goal = d.mp(d.mp(both, join), flipped);
  return d.finish(d.b.discharge(h, goal), name);
}

ProofScript gen_red11(int n) {
  Derivation d;
  Step h1 = d.b.hyp(cpow(B, n));
  Step h2 = d.b.hyp(implies(A, B));
  Step h3 = d.b.hyp(implies(A, ~B));
  Step to_contradiction = d.mp(d.conj(h2, h3), d.cite("T0", {{"A", A}, {"B", B}, {"C", ~B}}));
  Step goal = d.mp(d.cpow_component(h1, n, 1), d.contra(to_contradiction));
  return d.finish(d.b.discharge(h1, d.b.discharge(h2, d.b.discharge(h3, goal))), "RED11_" + std::to_string(n));
}

ProofScript gen_red12(int n) {
  Derivation d;
  Step h = d.b.hyp(cpow(A, n) & cpow(B, n));
  std::vector<Step> per_op;
  for (BinOp op : {BinOp::And, BinOp::Or, BinOp::Imp}) {
    std::vector<Step> powers;
    for (int m = 1; m <= n; ++m) {
      if (op == BinOp::Imp && m == 1 && n >= 2) {
        Step a2 = d.cpow_component(d.fst(h), n, 2);
        powers.push_back(d.mp(a2, d.collapse(A, 2, implies(A, B), 1)));
        continue;
      }
      Step prefix = d.conj(d.cpow_prefix(d.fst(h), n, m), d.cpow_prefix(d.snd(h), n, m));
      const std::string dia = "DIAMOND_" + std::to_string(m) + "_" + to_string(op);
      powers.push_back(d.mp(prefix, d.cite(dia, {{"A", A}, {"B", B}})));
    }
    per_op.push_back(d.conj_all(powers));
  }
  Step goal = d.conj(d.conj(per_op[0], per_op[1]), per_op[2]);
  return d.finish(d.b.discharge(h, goal), "RED12_" + std::to_string(n));
}

ProofScript gen_prop(int n) {
  Derivation d;
  const std::string name = "PROP_" + std::to_string(n);
  if (n == 1) {
    // Axiom 12(1) at A = B = 0 yields (0 -> 0)^1, i.e. ~~K for K = 0 -> 0.
    const Formula zero = Formula::bot();
    const Formula kf = implies(zero, zero);
    Step kk = d.id(zero);
    Step one = d.mp(kk, d.ax("11b.1", {{"A", kf}}));
    Step neg_zero = d.mp(one, d.ax("10b.1", {}));
    Step zero_cons = d.mp(neg_zero, d.contra(d.ax("4", {{"A", zero}, {"B", ~zero}})));
    Step props = d.mp(d.conj(zero_cons, zero_cons), d.ax("12", {{"A", zero}, {"B", zero}}, 1));
    Step k_cons = d.snd(props);  // ~(K & ~K)
    Step weak = d.mp(kk, d.ax("1", {{"A", kf}, {"B", ~kf}}));
    Step nn_k = d.mp(k_cons, d.contra(d.pair(weak, d.id(~kf))));
    Step target = d.mp(nn_k, d.contra(d.cite("NEFQ", {{"A", ~A}, {"B", kf}})));
    return d.finish(d.mp(target, d.ax("1", {{"A", d.f(target)}, {"B", cpow(A, 1)}})), name);
  }
  Step h = d.b.hyp(cpow(A, n));
  std::vector<Step> powers;
  for (int m = 1; m <= n; ++m) {
    int from = m == 1 ? 2 : m;
    powers.push_back(d.mp(d.cpow_component(h, n, from), d.collapse(A, from, ~A, m)));
  }
  return d.finish(d.b.discharge(h, d.conj_all(powers)), name);
}

}  // namespace

ProofScript generate_script(const std::string& name) {
  auto p = parse_name(name);
  if (!p) throw Error("not a corpus theorem: " + name);
  const std::string& f = p->family;
  if (f == "ID") return gen_id();
  if (f == "T0") return gen_t0();
  if (f == "T1") return gen_t1();
  if (f == "T2") return gen_t2();
  if (f == "T3") return gen_t3();
  if (f == "NEFQ") return gen_nefq();
  if (f == "HEART") return gen_heart();
  if (f == "NEG0") return gen_neg0();
  if (f == "NEGOR") return gen_negor();
  if (p->n < 1) throw Error("theorem family index must be >= 1: " + name);
  if (f == "CLUB") return gen_club(p->n, *p->op);
  if (f == "DIAMOND") return gen_diamond(p->n, *p->op);
  if (f == "RED11") return gen_red11(p->n);
  if (f == "RED12") return gen_red12(p->n);
  return gen_prop(p->n);
}

// ---------------------------------------------------------------------------
// Verification

bool CorpusReport::all_accepted() const {
  return std::all_of(records.begin(), records.end(), [](const CorpusRecord& r) { return r.accepted; });
}

std::size_t CorpusReport::accepted_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CorpusRecord& r) { return r.accepted; }));
}

const CorpusRecord* CorpusReport::find(const std::string& name) const {
  for (const auto& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

CorpusReport verify_corpus(const std::string& dir) {
  auto start = std::chrono::steady_clock::now();
  CorpusReport report;
  for (const auto& name : corpus_order()) {
    CorpusRecord rec;
    rec.name = name;
    rec.n = parse_name(name)->n;
    const SystemDef expected_system = corpus_system(name);
    rec.system = expected_system.label();
    ProofScript script;
    try {
      rec.source = (std::filesystem::path(dir) / corpus_file_name(name)).string();
      script = read_script_file(rec.source);
    } catch (const Error& e) {
      rec.error = e.what();
      report.records.push_back(std::move(rec));
      continue;
    }
    Verdict v = check_proof(script, report.registry);
    if (script.system.label() != expected_system.label())
      v.failures.insert(v.failures.begin(), {0, FailureKind::SystemViolation,
                                             "declared system " + script.system.label() + ", expected " +
                                                 expected_system.label()});
    if (script.goal != *corpus_statement(name))
      v.failures.insert(v.failures.begin(),
                        {0, FailureKind::GoalMismatch, "goal differs from the statement of " + name});
    rec.accepted = v.accepted();
    rec.failures = std::move(v.failures);
    if (rec.accepted) report.registry.add_unchecked({name, script.system, script.goal, script});
    report.records.push_back(std::move(rec));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::string> emit_corpus(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  for (const auto& name : corpus_order()) {
    auto path = (std::filesystem::path(dir) / corpus_file_name(name)).string();
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << render_script(generate_script(name));
    written.push_back(path);
  }
  return written;
}

std::string default_corpus_dir() { return DACOSTA_CORPUS_DIR; }

}  // namespace dacosta
