#include "dacosta/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "dacosta/acceptance.hpp"
#include "dacosta/algebra.hpp"
#include "dacosta/calculus.hpp"
#include "dacosta/corpus.hpp"
#include "dacosta/model_io.hpp"
#include "dacosta/polarity.hpp"

namespace dacosta {

namespace {

// One tab-separated line of key=value fields.
class Record {
 public:
  Record& add(const std::string& key, const std::string& value) {
    std::string v = value;
    std::replace(v.begin(), v.end(), '\t', ' ');
    std::replace(v.begin(), v.end(), '\n', ' ');
    fields_.emplace_back(key, v);
    return *this;
  }
  Record& add(const std::string& key, const char* value) { return add(key, std::string(value)); }
  Record& add(const std::string& key, bool value) { return add(key, value ? "true" : "false"); }
  Record& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
  Record& add(const std::string& key, long long value) { return add(key, std::to_string(value)); }
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i > 0) out += '\t';
      out += fields_[i].first + "=" + fields_[i].second;
    }
    return out + "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::vector<std::string> split_premises(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(cur);
  return out;
}

std::string model_summary(const NegationModel& m) {
  std::string s = write_model(m);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

NegationClass parse_class(const std::string& name) {
  for (auto c : {NegationClass::None, NegationClass::General, NegationClass::Split, NegationClass::Constructive,
                 NegationClass::DeMorgan})
    if (name == to_string(c)) return c;
  throw ParameterError("unknown negation class " + name);
}

struct Options {
  std::string format = "text";
  std::string system = "mZn";
  int n = 1;
  std::string model;
  std::string frame;
  std::string corpus;
  std::string emit_dir;
  int max_lattice = EnumerationBounds{}.max_lattice;
  int max_points = EnumerationBounds{}.max_points;
  int max_worlds = 3;
  bool schema = false;
  bool hereditary_only = false;
  bool to_model = false;
  std::string file;
  std::string formula;
  std::string premises;
  std::string conclusion;
  std::string target;
  std::string target_axiom;
  std::vector<std::string> without;
  std::string filter = "None";
  int criterion = 0;
  std::string builtin;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out), records_(o.format == "records") {}

  int parse_cmd() {
    const Formula f = parse(o_.formula, o_.schema ? ParseMode::Schema : ParseMode::Plain);
    if (records_)
      out_ << Record().add("formula", render(f)).add("tree", to_tree_string(f)).str();
    else
      out_ << render(f) << "\n" << to_tree_string(f) << "\n";
    return kExitOk;
  }

  int axioms_cmd() {
    const SystemDef sys = builtin_system(o_.system, o_.n);
    for (const auto& [name, f] : list_axioms(sys)) {
      if (records_)
        out_ << Record().add("system", sys.label()).add("axiom", name).add("schema", render(f)).str();
      else
        out_ << std::left << std::setw(7) << name << render(f) << "\n";
    }
    return kExitOk;
  }

  int check_cmd() {
    const CorpusReport corpus = verify_corpus(corpus_dir());
    const ProofScript script = read_script_file(o_.file);
    const Verdict v = check_proof(script, corpus.registry);
    if (records_) {
      out_ << Record()
                  .add("theorem", script.theorem)
                  .add("system", script.system.label())
                  .add("verdict", v.accepted() ? "accepted" : "rejected")
                  .add("failures", static_cast<long long>(v.failures.size()))
                  .str();
      for (const auto& f : v.failures)
        out_ << Record().add("line", f.line).add("kind", to_string(f.kind)).add("reason", f.reason).str();
    } else {
      out_ << (v.accepted() ? "accepted" : "rejected") << "\n";
      for (const auto& f : v.failures) out_ << "  line " << f.line << ": " << to_string(f.kind) << ": " << f.reason << "\n";
    }
    return v.accepted() ? kExitOk : kExitNegative;
  }

  int corpus_cmd() {
    if (!o_.emit_dir.empty()) {
      for (const auto& path : emit_corpus(o_.emit_dir)) {
        if (records_)
          out_ << Record().add("written", path).str();
        else
          out_ << "wrote " << path << "\n";
      }
      return kExitOk;
    }
    const CorpusReport report = verify_corpus(corpus_dir());
    for (const auto& rec : report.records) {
      const std::string verdict = rec.accepted ? "accepted" : "rejected";
      if (records_) {
        Record r;
        r.add("theorem", rec.name).add("system", rec.system).add("verdict", verdict);
        if (!rec.error.empty()) r.add("error", rec.error);
        if (!rec.failures.empty())
          r.add("line", rec.failures.front().line)
              .add("kind", to_string(rec.failures.front().kind))
              .add("reason", rec.failures.front().reason);
        out_ << r.str();
      } else {
        out_ << std::left << std::setw(14) << rec.name << std::setw(12) << rec.system << verdict << "\n";
        if (!rec.error.empty()) out_ << "  " << rec.error << "\n";
        for (const auto& f : rec.failures)
          out_ << "  line " << f.line << ": " << to_string(f.kind) << ": " << f.reason << "\n";
      }
    }
    if (records_) {
      out_ << Record()
                  .add("accepted", static_cast<long long>(report.accepted_count()))
                  .add("total", static_cast<long long>(report.records.size()))
                  .str();
    } else {
      out_ << report.accepted_count() << "/" << report.records.size() << " accepted in " << std::fixed
           << std::setprecision(3) << report.seconds << " s\n";
    }
    return report.all_accepted() ? kExitOk : kExitNegative;
  }

  int valid_cmd() {
    const NegationModel m = load_model(o_.model);
    const Formula f = parse(o_.formula);
    const ValidityResult r = is_valid(f, m);
    return report_validity(r, m, "valid", "NOT valid", Record().add("formula", render(f)));
  }

  int entails_cmd() {
    const NegationModel m = load_model(o_.model);
    std::vector<Formula> premises;
    for (const auto& p : split_premises(o_.premises)) premises.push_back(parse(p));
    const Formula c = parse(o_.conclusion);
    std::string rendered;
    for (const auto& p : premises) rendered += (rendered.empty() ? "" : ", ") + render(p);
    const ValidityResult r = entails(premises, c, m);
    return report_validity(r, m, "entailed", "NOT entailed",
                           Record().add("premises", rendered).add("conclusion", render(c)));
  }

  int classify_cmd() {
    const NegationModel m = load_model(o_.model);
    const ClassReport c = classify_negation(m);
    const auto violations = c.violations();
    if (records_) {
      out_ << Record()
                  .add("class", to_string(c.cls))
                  .add("antitone", c.antitone)
                  .add("top_in_image", c.top_in_image)
                  .add("join_to_meet", c.join_to_meet)
                  .add("bot_to_top", c.bot_to_top)
                  .add("meet_to_join", c.meet_to_join)
                  .add("involutive", c.involutive)
                  .str();
      for (const auto& p : c.properties) {
        Record r;
        r.add("property", p.name).add("required", to_string(p.required)).add("holds", p.holds);
        if (!p.holds) r.add("counterexample", p.counterexample);
        out_ << r.str();
      }
    } else {
      out_ << "class: " << to_string(c.cls) << "\n";
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      out_ << "  antitone: " << yn(c.antitone) << "\n  top in image: " << yn(c.top_in_image)
           << "\n  join to meet: " << yn(c.join_to_meet) << "\n  bot to top: " << yn(c.bot_to_top)
           << "\n  meet to join: " << yn(c.meet_to_join) << "\n  involutive: " << yn(c.involutive) << "\n";
      for (const auto& p : c.properties) {
        out_ << "  [" << to_string(p.required) << "] " << p.name << ": " << (p.holds ? "holds" : "fails");
        if (!p.holds) out_ << " (" << p.counterexample << ")";
        out_ << "\n";
      }
      if (!violations.empty()) out_ << violations.size() << " property violation(s) at or below the class\n";
    }
    return violations.empty() ? kExitOk : kExitNegative;
  }

  int adjoint_cmd() {
    const NegationModel m = load_model(o_.model);
    const auto adj = right_adjoint(m);
    if (!adj) {
      if (records_)
        out_ << Record().add("adjoint", "none").add("class", to_string(classify_negation(m).cls)).str();
      else
        out_ << "no right adjoint: the negation is below Split\n";
      return kExitNegative;
    }
    const FiniteLattice& l = m.lattice();
    if (records_) {
      for (int y = 0; y < l.size(); ++y)
        out_ << Record().add("element", l.name(y)).add("adjoint", l.name(adj->table[static_cast<std::size_t>(y)])).str();
      out_ << Record().add("selfadjoint", adj->selfadjoint).str();
    } else {
      out_ << "right adjoint:";
      for (int y = 0; y < l.size(); ++y) out_ << " " << l.name(y) << "->" << l.name(adj->table[static_cast<std::size_t>(y)]);
      out_ << "\nselfadjoint: " << (adj->selfadjoint ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }

  int frame_cmd() {
    const PolarityFrame f = load_frame(o_.frame);
    if (o_.to_model) {
      out_ << write_model(upset_algebra(f).model);
      return kExitOk;
    }
    const GaloisReport g = check_galois(f, o_.hereditary_only);
    const UpSetAlgebra alg = upset_algebra(f);
    const NegationClass cls = classify_negation(alg.model).cls;
    const FrameAxiomReport ax = verify_frame_axioms(f, o_.system, o_.n);
    if (records_) {
      out_ << Record()
                  .add("worlds", static_cast<long long>(f.size()))
                  .add("upsets", static_cast<long long>(alg.upsets.size()))
                  .add("selfadjoint", ax.selfadjoint)
                  .add("class", to_string(cls))
                  .str();
      for (const auto& law : g.laws) {
        Record r;
        r.add("law", law.name).add("holds", law.holds).add("instances", static_cast<long long>(law.instances));
        if (!law.holds) r.add("counterexample", law.counterexample);
        out_ << r.str();
      }
      for (const auto& a : ax.axioms) {
        Record r;
        r.add("system", ax.system).add("axiom", a.name).add("valid", a.valid);
        if (!a.valid) r.add("falsifier", a.falsifier);
        out_ << r.str();
      }
    } else {
      out_ << "worlds: " << f.size() << ", up-sets: " << alg.upsets.size() << "\n";
      out_ << "selfadjoint: " << (ax.selfadjoint ? "yes" : "no") << "\n";
      out_ << "induced negation: " << to_string(cls) << "\n";
      out_ << "galois laws (" << (o_.hereditary_only ? "up-sets" : "all subsets") << "):\n";
      for (const auto& law : g.laws) {
        out_ << "  " << law.name << ": " << (law.holds ? "holds" : "fails");
        if (!law.holds) out_ << " (" << law.counterexample << ")";
        out_ << "\n";
      }
      out_ << ax.system << " axioms:\n";
      for (const auto& a : ax.axioms) {
        out_ << "  " << std::left << std::setw(7) << a.name << (a.valid ? "valid" : "fails at " + a.falsifier) << "\n";
      }
      if (ax.selfadjoint_required && !ax.selfadjoint) out_ << "  the system requires a selfadjoint frame\n";
    }
    return g.all_hold() && ax.all_valid() ? kExitOk : kExitNegative;
  }

  int search_cmd() {
    const SystemDef sys = builtin_system(o_.system, o_.n);
    std::vector<Formula> axioms;
    for (const auto& [name, f] : list_axioms(sys))
      if (std::find(o_.without.begin(), o_.without.end(), name) == o_.without.end()) axioms.push_back(f);
    Formula target;
    if (!o_.target_axiom.empty()) {
      const AxiomSchema* ax = find_schema(o_.target_axiom);
      if (ax == nullptr) throw UnknownAxiom(o_.target_axiom, "the catalog");
      target = expand_parameter(ax->pattern, o_.n);
    } else if (!o_.target.empty()) {
      target = parse(o_.target);
    } else {
      throw ParameterError("search needs --target or --target-axiom");
    }
    const SearchResult r =
        countermodel_search(axioms, target, EnumerationBounds{o_.max_points, o_.max_lattice}, parse_class(o_.filter));
    if (records_) {
      Record rec;
      rec.add("target", render(target))
          .add("found", r.found)
          .add("lattices", static_cast<long long>(r.lattices_scanned))
          .add("models", static_cast<long long>(r.models_scanned))
          .add("validating", static_cast<long long>(r.models_validating));
      if (r.found) rec.add("model", model_summary(*r.model)).add("witness", render_valuation(r.valuation, r.model->lattice()));
      out_ << rec.str();
    } else {
      out_ << (r.found ? "countermodel found" : "no countermodel") << " after " << r.models_scanned << " models on "
           << r.lattices_scanned << " lattices (" << r.models_validating << " validate the axioms)\n";
      if (r.found)
        out_ << write_model(*r.model) << "witness " << render_valuation(r.valuation, r.model->lattice()) << "\n";
    }
    return r.found ? kExitOk : kExitNegative;
  }

  int accept_cmd() {
    AcceptanceOptions opts;
    opts.corpus_dir = o_.corpus;
    opts.bounds = EnumerationBounds{o_.max_points, o_.max_lattice};
    opts.max_worlds = o_.max_worlds;
    std::vector<CriterionResult> results;
    if (o_.criterion != 0) {
      results.push_back(run_criterion(o_.criterion, opts));
      if (!records_) out_ << render_result(results.back());
    } else if (records_) {
      for (int id = 1; id <= kCriterionCount; ++id) results.push_back(run_criterion(id, opts));
    } else {
      results = run_acceptance(opts, out_);
    }
    if (records_)
      for (const auto& r : results)
        out_ << Record().add("criterion", r.id).add("title", r.title).add("passed", r.passed).str();
    const bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
    return ok ? kExitOk : kExitNegative;
  }

  int emit_cmd() {
    out_ << emit_builtin(o_.builtin);
    return kExitOk;
  }

 private:
  std::string corpus_dir() const { return o_.corpus.empty() ? default_corpus_dir() : o_.corpus; }

  int report_validity(const ValidityResult& r, const NegationModel& m, const std::string& yes, const std::string& no,
                      Record rec) {
    const std::string witness = r.falsifier ? render_valuation(*r.falsifier, m.lattice()) : "";
    if (records_) {
      rec.add("verdict", r.valid ? yes : no);
      if (!r.valid) rec.add("witness", witness);
      out_ << rec.str();
    } else if (r.valid) {
      out_ << yes << "\n";
    } else {
      out_ << no << "; witness " << witness << "\n";
    }
    return r.valid ? kExitOk : kExitNegative;
  }

  const Options& o_;
  std::ostream& out_;
  bool records_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Proof checker and finite-model workbench for da Costa-style negations", "dacosta"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "records"}));

  auto add_system = [&](CLI::App* sc) {
    sc->add_option("--system", o.system, "Axiom system")->check(CLI::IsMember(builtin_system_names()));
    sc->add_option("--n", o.n, "Parameter n of the system")->check(CLI::PositiveNumber);
  };
  auto add_model = [&](CLI::App* sc) {
    sc->add_option("--model", o.model, "Model file or builtin:NAME")->required();
  };
  auto add_corpus = [&](CLI::App* sc) { sc->add_option("--corpus", o.corpus, "Directory of proof scripts"); };
  auto add_bounds = [&](CLI::App* sc) {
    sc->add_option("--max-lattice", o.max_lattice, "Largest lattice searched")->check(CLI::Range(1, kHardMaxLattice));
    sc->add_option("--max-points", o.max_points, "Largest poset generating the lattices")
        ->check(CLI::Range(0, kHardMaxPoints));
  };

  CLI::App* parse_sc = app.add_subcommand("parse", "Parse and print a formula");
  parse_sc->add_option("formula", o.formula)->required();
  parse_sc->add_flag("--schema", o.schema, "Read single uppercase letters as metavariables");

  CLI::App* axioms_sc = app.add_subcommand("axioms", "List the axioms of a system");
  add_system(axioms_sc);

  CLI::App* check_sc = app.add_subcommand("check", "Check a proof script");
  check_sc->add_option("file", o.file)->required();
  add_corpus(check_sc);

  CLI::App* corpus_sc = app.add_subcommand("corpus", "Verify the proof corpus");
  add_corpus(corpus_sc);
  corpus_sc->add_option("--emit", o.emit_dir, "Write the generated scripts to this directory instead");

  CLI::App* valid_sc = app.add_subcommand("valid", "Validity of a formula in a model");
  add_model(valid_sc);
  valid_sc->add_option("formula", o.formula)->required();

  CLI::App* entails_sc = app.add_subcommand("entails", "Entailment in a model");
  add_model(entails_sc);
  entails_sc->add_option("premises", o.premises, "Comma-separated premises")->required();
  entails_sc->add_option("conclusion", o.conclusion)->required();

  CLI::App* classify_sc = app.add_subcommand("classify", "Classify the negation of a model");
  add_model(classify_sc);

  CLI::App* adjoint_sc = app.add_subcommand("adjoint", "Right adjoint of a split negation");
  add_model(adjoint_sc);

  CLI::App* frame_sc = app.add_subcommand("frame", "Polarity frame laws and induced model");
  frame_sc->add_option("--frame", o.frame, "Frame file or builtin:NAME")->required();
  frame_sc->add_flag("--hereditary-only", o.hereditary_only, "Check the laws on up-sets only");
  frame_sc->add_flag("--to-model", o.to_model, "Print the induced model file");
  add_system(frame_sc);

  CLI::App* search_sc = app.add_subcommand("search", "Countermodel search");
  add_system(search_sc);
  add_bounds(search_sc);
  search_sc->add_option("--target", o.target, "Formula to falsify");
  search_sc->add_option("--target-axiom", o.target_axiom, "Catalog axiom to falsify, expanded at --n");
  search_sc->add_option("--without", o.without, "Drop this axiom of the system");
  search_sc->add_option("--class", o.filter, "Only negations of at least this class");

  CLI::App* accept_sc = app.add_subcommand("accept", "Run the acceptance criteria");
  add_corpus(accept_sc);
  add_bounds(accept_sc);
  accept_sc->add_option("--max-worlds", o.max_worlds, "Largest frame enumerated")->check(CLI::Range(1, 4));
  accept_sc->add_option("--criterion", o.criterion, "Run only this criterion")->check(CLI::Range(1, kCriterionCount));

  CLI::App* emit_sc = app.add_subcommand("emit", "Print the description file of a builtin");
  emit_sc->add_option("name", o.builtin)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Runner run(o, out);
  try {
    if (*parse_sc) return run.parse_cmd();
    if (*axioms_sc) return run.axioms_cmd();
    if (*check_sc) return run.check_cmd();
    if (*corpus_sc) return run.corpus_cmd();
    if (*valid_sc) return run.valid_cmd();
    if (*entails_sc) return run.entails_cmd();
    if (*classify_sc) return run.classify_cmd();
    if (*adjoint_sc) return run.adjoint_cmd();
    if (*frame_sc) return run.frame_cmd();
    if (*search_sc) return run.search_cmd();
    if (*accept_sc) return run.accept_cmd();
    if (*emit_sc) return run.emit_cmd();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dacosta
