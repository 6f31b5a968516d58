#include "dacosta/calculus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace dacosta {

namespace {

std::vector<AxiomSchema> build_catalog() {
  const Formula A = Formula::metavar("A");
  const Formula B = Formula::metavar("B");
  std::vector<AxiomSchema> cat;
  auto plain = [&](const char* name, const char* text) {
    cat.push_back({name, parse_schema(text), false});
  };
  plain("1", "A -> (B -> A)");
  plain("2", "(A -> B) -> ((A -> (B -> C)) -> (A -> C))");
  plain("3", "A -> (B -> (A & B))");
  plain("4", "(A & B) -> A");
  plain("5", "(A & B) -> B");
  plain("6", "A -> (A | B)");
  plain("7", "B -> (A | B)");
  plain("8", "(A -> C) -> ((B -> C) -> ((A | B) -> C))");
  plain("9", "A | ~A");
  plain("10", "~~A -> A");

  const Formula bn = Formula::param_cpow(B);
  const Formula an = Formula::param_cpow(A);
  cat.push_back({"11", implies(bn, implies(implies(A, B), implies(implies(A, ~B), ~A))), true});
  const Formula props = (Formula::param_cpow(A & B) & Formula::param_cpow(A | B)) &
                        Formula::param_cpow(implies(A, B));
  cat.push_back({"12", implies(an & bn, props), true});

  plain("10c", "(A -> B) -> ((A -> ~B) -> ~A)");
  plain("11c", "A -> (~A -> B)");
  plain("12c.1", "0 -> A");
  plain("12c.2", "A -> 1");
  plain("9b", "(A -> B) -> (~B -> ~A)");
  plain("10b.1", "1 -> ~0");
  plain("10b.2", "~1 -> 0");
  plain("11b.1", "A -> 1");
  plain("11b.2", "0 -> A");
  plain("12b", "(~A & ~B) -> ~(A | B)");
  plain("13b", "~(A & B) -> (~A | ~B)");
  return cat;
}

std::vector<std::string> ipc_plus() { return {"1", "2", "3", "4", "5", "6", "7", "8"}; }

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<const char*> extra) {
  for (const char* e : extra) base.emplace_back(e);
  return base;
}

std::vector<std::string> without(std::vector<std::string> base, const std::string& drop) {
  base.erase(std::remove(base.begin(), base.end(), drop), base.end());
  return base;
}

int catalog_position(const std::string& name) {
  const auto& cat = axiom_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (cat[i].name == name) return static_cast<int>(i);
  return -1;
}

void sort_catalog_order(std::vector<std::string>& names) {
  std::sort(names.begin(), names.end(),
            [](const std::string& a, const std::string& b) { return catalog_position(a) < catalog_position(b); });
}

}  // namespace

const std::vector<AxiomSchema>& axiom_catalog() {
  static const std::vector<AxiomSchema> cat = build_catalog();
  return cat;
}

const AxiomSchema* find_schema(const std::string& name) {
  for (const auto& s : axiom_catalog())
    if (s.name == name) return &s;
  return nullptr;
}

bool SystemDef::contains(const std::string& schema) const {
  return std::find(schemas.begin(), schemas.end(), schema) != schemas.end();
}

std::string SystemDef::label() const { return parametric ? name + " n=" + std::to_string(n) : name; }

std::vector<std::string> builtin_system_names() {
  return {"IPCplus", "CPL", "INT", "Cn", "Zn", "CZn", "mZn", "mCZn", "ZnMinus", "mZnAnti", "mZnSplit"};
}

SystemDef builtin_system(const std::string& name, int n) {
  if (n < 1) throw ParameterError("system parameter n must be >= 1, got " + std::to_string(n));
  SystemDef sys;
  sys.name = name;
  const auto zn = with(ipc_plus(), {"11", "12", "9b", "10b.1", "10b.2", "11b.1", "11b.2", "12b"});
  if (name == "IPCplus") {
    sys.schemas = ipc_plus();
  } else if (name == "CPL") {
    sys.schemas = with(ipc_plus(), {"9", "10c", "11c", "12c.1", "12c.2"});
  } else if (name == "INT") {
    sys.schemas = with(ipc_plus(), {"10c", "11c", "12c.1", "12c.2"});
  } else if (name == "Cn") {
    sys.schemas = with(ipc_plus(), {"9", "10", "11", "12"});
  } else if (name == "Zn") {
    sys.schemas = zn;
  } else if (name == "CZn") {
    sys.schemas = with(zn, {"13b"});
  } else if (name == "mZn") {
    sys.schemas = without(zn, "10b.2");
  } else if (name == "mCZn") {
    sys.schemas = with(without(zn, "10b.2"), {"13b"});
  } else if (name == "ZnMinus") {
    sys.schemas = without(without(zn, "10b.2"), "12b");
  } else if (name == "mZnAnti") {
    sys.schemas = with(ipc_plus(), {"9b"});
  } else if (name == "mZnSplit") {
    sys.schemas = with(ipc_plus(), {"9b", "12b"});
  } else {
    throw UnknownSystem(name);
  }
  sort_catalog_order(sys.schemas);
  sys.parametric = std::any_of(sys.schemas.begin(), sys.schemas.end(),
                               [](const std::string& s) { return find_schema(s)->parametric; });
  sys.n = sys.parametric ? n : 1;
  return sys;
}

bool is_subsystem(const SystemDef& sub, const SystemDef& super) {
  for (const auto& s : sub.schemas) {
    if (!super.contains(s)) return false;
    if (find_schema(s)->parametric && sub.n != super.n) return false;
  }
  return true;
}

MetaFormula instantiate_axiom(const SystemDef& system, const std::string& name, const Substitution& s,
                              std::optional<int> n) {
  const AxiomSchema* schema = find_schema(name);
  if (schema == nullptr || !system.contains(name)) throw UnknownAxiom(name, system.label());
  if (n) {
    if (!schema->parametric) throw ParameterError("axiom " + name + " takes no parameter n");
    if (*n < 1) throw ParameterError("parameter n must be >= 1, got " + std::to_string(*n));
    if (*n != system.n)
      throw ParameterError("axiom " + name + " at n=" + std::to_string(*n) + " is not part of " + system.label());
  }
  return apply_subst_partial(expand_parameter(schema->pattern, system.n), s);
}

std::vector<std::pair<std::string, MetaFormula>> list_axioms(const SystemDef& system) {
  std::vector<std::pair<std::string, MetaFormula>> out;
  for (const auto& name : system.schemas)
    out.emplace_back(name, expand_parameter(find_schema(name)->pattern, system.n));
  return out;
}

std::vector<std::pair<std::string, MetaFormula>> list_axioms(const std::string& system, int n) {
  return list_axioms(builtin_system(system, n));
}

// ---------------------------------------------------------------------------
// Checking

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::SchemaMismatch:
      return "SchemaMismatch";
    case FailureKind::BadMP:
      return "BadMP";
    case FailureKind::UnknownTheorem:
      return "UnknownTheorem";
    case FailureKind::SystemViolation:
      return "SystemViolation";
    case FailureKind::GoalMismatch:
      return "GoalMismatch";
    case FailureKind::Malformed:
      return "Malformed";
  }
  return "?";
}

std::pair<TheoremRegistry::Lookup, const TheoremEntry*> TheoremRegistry::lookup(const std::string& name,
                                                                              const SystemDef& system) const {
  const TheoremEntry* earliest = nullptr;
  bool seen = false;
  for (const auto& e : entries_) {
    if (e.name != name) continue;
    seen = true;
    if (e.system.label() == system.label()) return {Lookup::Found, &e};
    if (earliest == nullptr && is_subsystem(e.system, system)) earliest = &e;
  }
  if (earliest != nullptr) return {Lookup::Found, earliest};
  return {seen ? Lookup::Incompatible : Lookup::Unknown, nullptr};
}

bool TheoremRegistry::contains(const std::string& name, const SystemDef& system) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const TheoremEntry& e) {
    return e.name == name && e.system.label() == system.label();
  });
}

void TheoremRegistry::add_unchecked(TheoremEntry entry) { entries_.push_back(std::move(entry)); }

namespace {

void check_axiom_line(const ProofScript& script, const ProofLine& line, const AxiomJust& j,
                      std::vector<Failure>& out) {
  const AxiomSchema* schema = find_schema(j.schema);
  if (schema == nullptr) {
    out.push_back({line.index, FailureKind::SchemaMismatch, "no axiom schema named " + j.schema});
    return;
  }
  if (!script.system.contains(j.schema)) {
    out.push_back({line.index, FailureKind::SystemViolation,
                   "axiom " + j.schema + " is not part of " + script.system.label()});
    return;
  }
  if (j.n && !schema->parametric) {
    out.push_back({line.index, FailureKind::SchemaMismatch, "axiom " + j.schema + " takes no parameter n"});
    return;
  }
  if (j.n && *j.n != script.system.n) {
    out.push_back({line.index, FailureKind::SystemViolation,
                   "axiom " + j.schema + " at n=" + std::to_string(*j.n) + " is not part of " +
                       script.system.label()});
    return;
  }
  const MetaFormula pattern = expand_parameter(schema->pattern, script.system.n);
  if (j.subst) {
    const MetaFormula expected = apply_subst_partial(pattern, *j.subst);
    if (expected != line.statement)
      out.push_back({line.index, FailureKind::SchemaMismatch,
                     "axiom " + j.schema + " instance is " + render(expected)});
  } else if (!match_pattern(pattern, line.statement)) {
    out.push_back({line.index, FailureKind::SchemaMismatch, "not an instance of axiom " + j.schema});
  }
}

void check_theorem_line(const ProofScript& script, const ProofLine& line, const TheoremJust& j,
                        const TheoremRegistry& registry, std::vector<Failure>& out) {
  auto [status, entry] = registry.lookup(j.name, script.system);
  if (status == TheoremRegistry::Lookup::Unknown) {
    out.push_back({line.index, FailureKind::UnknownTheorem, "no registered theorem " + j.name});
    return;
  }
  if (status == TheoremRegistry::Lookup::Incompatible) {
    out.push_back({line.index, FailureKind::SystemViolation,
                   "theorem " + j.name + " is only registered for systems not contained in " +
                       script.system.label()});
    return;
  }
  const MetaFormula expected = apply_subst_partial(entry->statement, j.subst);
  if (expected != line.statement)
    out.push_back({line.index, FailureKind::SchemaMismatch,
                   "theorem " + j.name + " instance is " + render(expected)});
}

}  // namespace

Verdict check_proof(const ProofScript& script, const TheoremRegistry& registry) {
  Verdict v;
  std::map<int, const Formula*> seen;
  int previous = 0;
  for (const auto& line : script.lines) {
    if (line.index <= previous) {
      v.failures.push_back({line.index, FailureKind::Malformed,
                            "line index " + std::to_string(line.index) + " does not increase"});
    }
    if (const auto* ax = std::get_if<AxiomJust>(&line.just)) {
      check_axiom_line(script, line, *ax, v.failures);
    } else if (const auto* mp = std::get_if<MPJust>(&line.just)) {
      auto minor = seen.find(mp->minor);
      auto major = seen.find(mp->major);
      if (minor == seen.end() || major == seen.end()) {
        v.failures.push_back({line.index, FailureKind::BadMP, "mp cites a line that does not precede it"});
      } else {
        const Formula& imp = *major->second;
        if (imp.kind() != Connective::Imp || imp.left() != *minor->second || imp.right() != line.statement) {
          v.failures.push_back({line.index, FailureKind::BadMP,
                                "line " + std::to_string(mp->major) + " is not " +
                                    render(implies(*minor->second, line.statement))});
        }
      }
    } else {
      check_theorem_line(script, line, std::get<TheoremJust>(line.just), registry, v.failures);
    }
    if (line.index > previous) previous = line.index;
    seen.emplace(line.index, &line.statement);
  }
  if (script.lines.empty()) {
    v.failures.push_back({0, FailureKind::Malformed, "script has no lines"});
  } else if (script.lines.back().statement != script.goal) {
    v.failures.push_back({script.lines.back().index, FailureKind::GoalMismatch,
                          "last line is not the goal " + render(script.goal)});
  }
  return v;
}

TheoremRegistry register_theorem(const std::string& name, const ProofScript& script,
                                 const TheoremRegistry& registry) {
  if (registry.contains(name, script.system))
    throw DuplicateName("theorem " + name + " already registered for " + script.system.label());
  Verdict v = check_proof(script, registry);
  if (!v.accepted()) {
    const Failure& f = v.failures.front();
    throw RejectedProof("theorem " + name + " rejected at line " + std::to_string(f.line) + ": " +
                        to_string(f.kind) + ": " + f.reason);
  }
  TheoremRegistry out = registry;
  out.add_unchecked({name, script.system, script.goal, script});
  return out;
}

namespace {

Substitution compose(const Substitution& inner, const Substitution& outer) {
  Substitution out;
  for (const auto& [k, v] : inner) out.emplace(k, apply_subst_partial(v, outer));
  for (const auto& [k, v] : outer) out.emplace(k, v);  // keeps inner bindings on conflict
  return out;
}

}  // namespace

ProofScript splice_theorem(const ProofScript& script, int line_index, const TheoremRegistry& registry) {
  auto target = std::find_if(script.lines.begin(), script.lines.end(),
                             [&](const ProofLine& l) { return l.index == line_index; });
  if (target == script.lines.end()) throw RejectedProof("no line " + std::to_string(line_index));
  const auto* tj = std::get_if<TheoremJust>(&target->just);
  if (tj == nullptr) throw RejectedProof("line " + std::to_string(line_index) + " is not a theorem citation");
  auto [status, entry] = registry.lookup(tj->name, script.system);
  if (status != TheoremRegistry::Lookup::Found) throw RejectedProof("theorem " + tj->name + " is not usable here");

  ProofScript out = script;
  out.lines.clear();
  std::map<int, int> outer_map;
  int next = 1;
  for (const auto& line : script.lines) {
    if (line.index == line_index) {
      std::map<int, int> inner_map;
      for (const auto& inner : entry->script.lines) {
        ProofLine copy{next, apply_subst_partial(inner.statement, tj->subst), inner.just};
        if (auto* ax = std::get_if<AxiomJust>(&copy.just)) {
          if (ax->subst) ax->subst = compose(*ax->subst, tj->subst);
        } else if (auto* th = std::get_if<TheoremJust>(&copy.just)) {
          th->subst = compose(th->subst, tj->subst);
        } else {
          auto& mp = std::get<MPJust>(copy.just);
          mp.minor = inner_map.at(mp.minor);
          mp.major = inner_map.at(mp.major);
        }
        inner_map[inner.index] = next++;
        out.lines.push_back(std::move(copy));
      }
      outer_map[line.index] = next - 1;
      continue;
    }
    ProofLine copy = line;
    copy.index = next;
    if (auto* mp = std::get_if<MPJust>(&copy.just)) {
      auto a = outer_map.find(mp->minor);
      auto b = outer_map.find(mp->major);
      mp->minor = a == outer_map.end() ? 0 : a->second;
      mp->major = b == outer_map.end() ? 0 : b->second;
    }
    outer_map[line.index] = next++;
    out.lines.push_back(std::move(copy));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Script files

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Parses "{A:=f, B:=g}"; nullopt if the text does not have that shape.
std::optional<Substitution> parse_subst(std::string_view text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}') return std::nullopt;
  Substitution s;
  std::string body = t.substr(1, t.size() - 2);
  if (trim(body).empty()) return s;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string item = trim(std::string_view(body).substr(start, comma == std::string::npos ? std::string::npos
                                                                                              : comma - start));
    auto eq = item.find(":=");
    if (eq == std::string::npos) return std::nullopt;
    std::string key = trim(std::string_view(item).substr(0, eq));
    if (key.empty()) return std::nullopt;
    s[key] = parse_schema(std::string_view(item).substr(eq + 2));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return s;
}

// nullopt if `text` is not a justification at all; throws SyntaxError if it
// looks like one but a substituted formula is malformed.
std::optional<Justification> parse_justification(std::string_view text) {
  std::string t = trim(text);
  auto words = split_words(t);
  if (words.empty()) return std::nullopt;
  if (words[0] == "mp") {
    if (words.size() != 3) return std::nullopt;
    auto i = to_int(words[1]);
    auto j = to_int(words[2]);
    if (!i || !j) return std::nullopt;
    return MPJust{*i, *j};
  }
  if (words[0] != "axiom" && words[0] != "thm") return std::nullopt;
  if (words.size() < 2) return std::nullopt;
  std::string rest = trim(std::string_view(t).substr(t.find(words[1]) + words[1].size()));
  std::optional<int> n;
  if (auto pos = rest.rfind("n="); pos != std::string::npos && rest.find('}', pos) == std::string::npos) {
    n = to_int(trim(std::string_view(rest).substr(pos + 2)));
    if (!n) return std::nullopt;
    rest = trim(std::string_view(rest).substr(0, pos));
  }
  std::optional<Substitution> subst;
  if (!rest.empty()) {
    subst = parse_subst(rest);
    if (!subst) return std::nullopt;
  }
  if (words[0] == "axiom") return AxiomJust{words[1], subst, n};
  if (n) return std::nullopt;
  return TheoremJust{words[1], subst.value_or(Substitution{})};
}

}  // namespace

ProofScript parse_script(std::string_view text) {
  ProofScript script;
  bool have_system = false;
  bool have_goal = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    try {
      if (line.rfind("system ", 0) == 0) {
        auto words = split_words(line);
        int n = 1;
        if (words.size() == 3 && words[2].rfind("n=", 0) == 0) {
          auto v = to_int(std::string_view(words[2]).substr(2));
          if (!v) throw ScriptFormatError(lineno, "bad parameter " + words[2]);
          n = *v;
        } else if (words.size() != 2) {
          throw ScriptFormatError(lineno, "expected: system <name> [n=<int>]");
        }
        script.system = builtin_system(words[1], n);
        have_system = true;
        continue;
      }
      if (line.rfind("theorem ", 0) == 0) {
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ScriptFormatError(lineno, "expected: theorem <NAME>: <formula>");
        script.theorem = trim(std::string_view(line).substr(8, colon - 8));
        script.goal = parse_schema(std::string_view(line).substr(colon + 1));
        have_goal = true;
        continue;
      }
      auto dot = line.find('.');
      auto index = dot == std::string::npos ? std::nullopt : to_int(std::string_view(line).substr(0, dot));
      if (!index) throw ScriptFormatError(lineno, "expected a numbered proof line");
      std::string body = line.substr(dot + 1);
      std::optional<ProofLine> parsed;
      for (auto bar = body.rfind('|'); bar != std::string::npos; bar = bar == 0 ? std::string::npos : body.rfind('|', bar - 1)) {
        std::optional<Justification> just;
        try {
          just = parse_justification(std::string_view(body).substr(bar + 1));
        } catch (const SyntaxError&) {
          continue;
        }
        if (!just) continue;
        parsed = ProofLine{*index, parse_schema(std::string_view(body).substr(0, bar)), *just};
        break;
      }
      if (!parsed) throw ScriptFormatError(lineno, "no justification found");
      script.lines.push_back(std::move(*parsed));
    } catch (const ScriptFormatError&) {
      throw;
    } catch (const Error& e) {
      throw ScriptFormatError(lineno, e.what());
    }
  }
  if (!have_system) throw ScriptFormatError(lineno, "missing 'system' header");
  if (!have_goal) throw ScriptFormatError(lineno, "missing 'theorem' header");
  return script;
}

ProofScript read_script_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScriptFormatError(0, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_script(buf.str());
}

std::string render_justification(const Justification& just) {
  if (const auto* ax = std::get_if<AxiomJust>(&just)) {
    std::string out = "axiom " + ax->schema;
    if (ax->subst) out += " " + render(*ax->subst);
    if (ax->n) out += " n=" + std::to_string(*ax->n);
    return out;
  }
  if (const auto* mp = std::get_if<MPJust>(&just))
    return "mp " + std::to_string(mp->minor) + " " + std::to_string(mp->major);
  const auto& th = std::get<TheoremJust>(just);
  std::string out = "thm " + th.name;
  if (!th.subst.empty()) out += " " + render(th.subst);
  return out;
}

std::string render_script(const ProofScript& script) {
  std::string out = "system " + script.system.name;
  if (script.system.parametric) out += " n=" + std::to_string(script.system.n);
  out += "\ntheorem " + script.theorem + ": " + render(script.goal) + "\n";
  for (const auto& line : script.lines)
    out += std::to_string(line.index) + ". " + render(line.statement) + " | " + render_justification(line.just) + "\n";
  return out;
}

}  // namespace dacosta
