#include "dacosta/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>

#include "dacosta/calculus.hpp"
#include "dacosta/corpus.hpp"
#include "dacosta/model_io.hpp"
#include "dacosta/polarity.hpp"

namespace dacosta {

namespace {

std::string corpus_dir(const AcceptanceOptions& o) {
  return o.corpus_dir.empty() ? default_corpus_dir() : o.corpus_dir;
}

std::string one_line(std::string text) {
  while (!text.empty() && text.back() == '\n') text.pop_back();
  std::string out;
  for (char c : text) out += c == '\n' ? std::string("; ") : std::string(1, c);
  return out;
}

std::string render_failure(const std::string& name, const Failure& f) {
  return name + ": line " + std::to_string(f.line) + " " + to_string(f.kind) + ": " + f.reason;
}

// Counts failures per key and keeps the first example of each.
struct Tally {
  std::map<std::string, std::size_t> count;
  std::map<std::string, std::string> first;
  std::vector<std::string> order;

  void add(const std::string& key, const std::string& example) {
    if (count[key]++ == 0) {
      first[key] = example;
      order.push_back(key);
    }
  }
  bool empty() const { return order.empty(); }
  void report(std::vector<std::string>& details) const {
    for (const auto& k : order)
      details.push_back(k + ": " + std::to_string(count.at(k)) + " violation(s), first: " + first.at(k));
  }
};

std::vector<Formula> patterns(const std::vector<std::pair<std::string, MetaFormula>>& axioms) {
  std::vector<Formula> out;
  for (const auto& [name, f] : axioms) out.push_back(f);
  return out;
}

MetaFormula axiom_pattern(const std::string& system, int n, const std::string& schema) {
  for (const auto& [name, f] : list_axioms(system, n))
    if (name == schema) return f;
  throw UnknownAxiom(schema, system);
}

void criterion_corpus(const AcceptanceOptions& o, CriterionResult& r) {
  r.title = "proof corpus";
  const CorpusReport report = verify_corpus(corpus_dir(o));
  bool ok = report.all_accepted();
  r.details.push_back(std::to_string(report.accepted_count()) + "/" + std::to_string(report.records.size()) +
                      " scripts accepted");
  for (const auto& rec : report.records) {
    if (!rec.error.empty()) r.details.push_back(rec.name + ": " + rec.error);
    for (const auto& f : rec.failures) r.details.push_back(render_failure(rec.name, f));
  }
  for (const auto& rec : report.records) {
    if (rec.name.rfind("RED1", 0) != 0) continue;
    const SystemDef sys = corpus_system(rec.name);
    for (const char* banned : {"11", "12", "10b.1", "11b.1", "11b.2"})
      if (sys.contains(banned)) {
        ok = false;
        r.details.push_back(rec.name + " is checked in " + sys.label() + ", which contains axiom " + banned);
      }
  }
  if (!report.all_accepted()) {
    // Semantic evidence for the rejected n = 1 cases: axiom 12(1) is not a
    // theorem of the signature the reduction is checked in.
    const SearchResult s = countermodel_search(patterns(list_axioms("mZnSplit", 1)),
                                               axiom_pattern("mZn", 1, "12"), EnumerationBounds{3, 4});
    if (s.found)
      r.details.push_back("axiom 12(1) fails in a model of mZnSplit: " + one_line(write_model(*s.model)) + " at " +
                          render_valuation(s.valuation, s.model->lattice()));
  }
  ok = ok && report.seconds < 5.0;
  r.details.push_back("corpus check took " + std::to_string(report.seconds) + " s (limit 5 s)");
  r.passed = ok;
}

void criterion_paraconsistency(const AcceptanceOptions&, CriterionResult& r) {
  r.title = "paraconsistency in B2_TRIV";
  const auto start = std::chrono::steady_clock::now();
  const NegationModel m = builtin_model("B2_TRIV");
  bool ok = true;
  for (const char* system : {"mZn", "mCZn"})
    for (int n = 1; n <= 3; ++n)
      for (const auto& [name, f] : list_axioms(system, n)) {
        ValidityResult v = is_valid(f, m);
        if (!v.valid) {
          ok = false;
          r.details.push_back(std::string(system) + "(" + std::to_string(n) + ") axiom " + name + " fails at " +
                              render_valuation(*v.falsifier, m.lattice()));
        }
      }
  const ValidityResult ent = entails({parse("A"), parse("~A")}, parse("B"), m);
  const std::string witness = ent.falsifier ? render_valuation(*ent.falsifier, m.lattice()) : "";
  r.details.push_back(std::string("A, ~A entail B: ") + (ent.valid ? "yes" : "no, witness " + witness));
  ok = ok && !ent.valid && witness == "A=1,B=0";
  auto expect = [&](const std::string& label, const Formula& f, bool want) {
    const bool got = is_valid(f, m).valid;
    r.details.push_back(label + " " + render(f) + ": " + (got ? "valid" : "not valid"));
    ok = ok && got == want;
  };
  expect("explosion", parse("A & ~A -> B"), false);
  expect("NEFQ", *corpus_statement("NEFQ"), true);
  expect("10b.2", parse("~1 -> 0"), false);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = ok && secs < 1.0;
}

NegationClass expected_class(const ClassReport& c) {
  if (!(c.antitone && c.top_in_image)) return NegationClass::None;
  if (!(c.join_to_meet && c.bot_to_top)) return NegationClass::General;
  if (!c.meet_to_join) return NegationClass::Split;
  if (!c.involutive) return NegationClass::Constructive;
  return NegationClass::DeMorgan;
}

void criterion_hierarchy(const AcceptanceOptions& o, CriterionResult& r) {
  r.title = "negation hierarchy laws";
  const auto start = std::chrono::steady_clock::now();
  const EnumerationBounds bounds{4, std::min(5, o.bounds.max_lattice)};
  Tally tally;
  std::size_t models = 0;
  std::map<NegationClass, std::size_t> per_class;
  for_each_model(bounds, NegationClass::None, [&](const NegationModel& m) {
    ++models;
    const ClassReport c = classify_negation(m);
    ++per_class[c.cls];
    const std::string where = one_line(write_model(m));
    if (c.cls != expected_class(c)) tally.add("cumulative classification", where);
    for (const NegationProperty* p : c.violations())
      tally.add(std::string(to_string(p->required)) + " property " + p->name, where + " (" + p->counterexample + ")");
    return true;
  });
  std::string counts = std::to_string(models) + " negation tables on lattices of size <= " +
                       std::to_string(bounds.max_lattice) + ":";
  for (auto [cls, k] : per_class) counts += std::string(" ") + to_string(cls) + "=" + std::to_string(k);
  r.details.push_back(counts);
  tally.report(r.details);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = tally.empty() && secs < 60.0;
}

void criterion_polarity(const AcceptanceOptions& o, CriterionResult& r) {
  r.title = "polarity laws";
  const auto start = std::chrono::steady_clock::now();
  const std::vector<PolarityFrame> frames = enumerate_frames(o.max_worlds);
  Tally tally;
  std::size_t selfadjoint = 0;
  for (const auto& f : frames) {
    const std::string where = one_line(write_frame(f));
    for (const auto& law : check_galois(f).laws)
      if (!law.holds) tally.add("law " + law.name, where + " (" + law.counterexample + ")");
    try {
      upset_algebra(f);
    } catch (const ClosureFailure& e) {
      tally.add("up-set algebra", where + " (" + e.what() + ")");
      continue;
    }
    for (const auto& a : verify_frame_axioms(f, "mZn", 1).axioms)
      if (!a.valid) tally.add("mZn(1) axiom " + a.name, where + " at " + a.falsifier);
    if (is_selfadjoint(f)) {
      ++selfadjoint;
      for (const auto& a : verify_frame_axioms(f, "mCZn", 1).axioms)
        if (a.name == "13b" && !a.valid) tally.add("selfadjoint axiom 13b", where + " at " + a.falsifier);
    }
  }
  r.details.push_back(std::to_string(frames.size()) + " hereditary frames with <= " + std::to_string(o.max_worlds) +
                      " worlds, " + std::to_string(selfadjoint) + " selfadjoint");
  tally.report(r.details);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = tally.empty() && secs < 60.0;
}

void criterion_soundness(const AcceptanceOptions& o, CriterionResult& r) {
  r.title = "empirical soundness";
  const SystemDef mzn = builtin_system("mZn", 1);
  const CorpusReport report = verify_corpus(corpus_dir(o));
  std::vector<std::pair<std::string, Formula>> theorems;
  for (const auto& e : report.registry.entries())
    if (is_subsystem(e.system, mzn)) theorems.emplace_back(e.name, e.statement);
  std::vector<CompiledFormula> axioms;
  for (const auto& f : patterns(list_axioms(mzn))) axioms.emplace_back(f);

  Tally tally;
  auto check = [&](const NegationModel& m, const std::string& where) {
    for (const auto& [name, thm] : theorems) {
      const ValidityResult v = is_valid(thm, m);
      if (!v.valid) tally.add(name, where + " at " + render_valuation(*v.falsifier, m.lattice()));
    }
  };
  std::size_t models = 0, frames_used = 0;
  for_each_model(EnumerationBounds{4, std::min(4, o.bounds.max_lattice)}, NegationClass::None,
                 [&](const NegationModel& m) {
                   if (!validates_all(axioms, m)) return true;
                   ++models;
                   check(m, one_line(write_model(m)));
                   return true;
                 });
  const std::vector<PolarityFrame> frames = enumerate_frames(o.max_worlds);
  for (const auto& f : frames) {
    const NegationModel m = upset_algebra(f).model;
    if (!validates_all(axioms, m)) continue;
    ++frames_used;
    check(m, one_line(write_frame(f)));
  }
  r.details.push_back(std::to_string(theorems.size()) + " corpus theorems of mZn(1) checked in " +
                      std::to_string(models) + " models of size <= 4 and " + std::to_string(frames_used) + " of " +
                      std::to_string(frames.size()) + " up-set algebras that validate mZn(1)");
  tally.report(r.details);
  r.passed = tally.empty() && !theorems.empty();
}

void criterion_exploration(const AcceptanceOptions& o, CriterionResult& r) {
  r.title = "ZnMinus exploration (reported only)";
  r.exploratory = true;
  std::vector<Formula> axioms;
  for (const auto& [name, f] : list_axioms("ZnMinus", 1))
    if (name != "12") axioms.push_back(f);
  const SearchResult s = countermodel_search(axioms, axiom_pattern("mZn", 1, "12"), o.bounds);
  std::string head = std::string("axiom 12(1) from ZnMinus(1) without 12: countermodel ") +
                     (s.found ? "found" : "not found") + " after " + std::to_string(s.models_scanned) +
                     " models on " + std::to_string(s.lattices_scanned) + " lattices (" +
                     std::to_string(s.models_validating) + " validate the axioms)";
  r.details.push_back(head);
  if (s.found)
    r.details.push_back("countermodel " + one_line(write_model(*s.model)) + " at " +
                        render_valuation(s.valuation, s.model->lattice()));
  const CorpusReport report = verify_corpus(corpus_dir(o));
  for (int n = 1; n <= 3; ++n) {
    const std::string name = "RED11_" + std::to_string(n);
    const CorpusRecord* rec = report.find(name);
    r.details.push_back(name + " in " + corpus_system(name).label() + ": " +
                        (rec && rec->accepted ? "accepted" : "rejected"));
  }
  r.passed = true;
}

void criterion_controls(const AcceptanceOptions& o, CriterionResult& r) {
  r.title = "negative controls";
  bool ok = true;

  const std::string dir = corpus_dir(o);
  const CorpusReport report = verify_corpus(dir);
  ProofScript script = read_script_file((std::filesystem::path(dir) / corpus_file_name("NEFQ")).string());
  int mutated = 0;
  for (auto it = script.lines.rbegin(); it != script.lines.rend(); ++it)
    if (auto* mp = std::get_if<MPJust>(&it->just)) {
      std::swap(mp->minor, mp->major);
      mutated = it->index;
      break;
    }
  const Verdict v = check_proof(script, report.registry);
  const bool exact = !v.accepted() && v.failures.front().line == mutated && mutated > 0 &&
                     v.failures.front().kind == FailureKind::BadMP;
  r.details.push_back("NEFQ with swapped operands at line " + std::to_string(mutated) + ": " +
                      (v.accepted() ? "accepted" : render_failure("NEFQ", v.failures.front())));
  ok = ok && exact;

  try {
    build_frame(FrameSpec{{"a", "b"}, {{"a", "b"}}, {{"a", "a"}}});
    r.details.push_back("non-hereditary frame accepted");
    ok = false;
  } catch (const NotHereditary& e) {
    r.details.push_back(std::string("non-hereditary frame rejected: ") + e.what());
  }

  try {
    build_algebra(LatticeSpec{{"0", "a", "b", "c", "1"},
                              {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}});
    r.details.push_back("non-distributive lattice accepted");
    ok = false;
  } catch (const NotDistributive& e) {
    r.details.push_back(std::string("non-distributive lattice rejected: ") + e.what());
  }
  r.passed = ok;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  static const std::vector<std::function<void(const AcceptanceOptions&, CriterionResult&)>> table = {
      criterion_corpus,    criterion_paraconsistency, criterion_hierarchy, criterion_polarity,
      criterion_soundness, criterion_exploration,     criterion_controls};
  if (id < 1 || id > kCriterionCount) throw ParameterError("no acceptance criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  const auto start = std::chrono::steady_clock::now();
  try {
    table[static_cast<std::size_t>(id - 1)](options, r);
  } catch (const Error& e) {
    r.passed = r.exploratory;
    r.details.push_back(std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    results.push_back(run_criterion(id, options));
    out << render_result(results.back()) << std::flush;
  }
  return results;
}

std::string render_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << " (";
  out.setf(std::ios::fixed);
  out.precision(3);
  out << r.seconds << " s)\n";
  for (const auto& d : r.details) out << "      " << d << "\n";
  return out.str();
}

}  // namespace dacosta
