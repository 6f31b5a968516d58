#include "dacosta/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace dacosta {

namespace {

using Sections = std::map<std::string, std::vector<std::string>>;

// Splits into `key: token token ...` sections, rejecting unknown keys.
Sections read_sections(const std::string& text, const std::vector<std::string>& keys) {
  Sections out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ModelFormatError("line " + std::to_string(number) + ": expected 'key: entries'");
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ModelFormatError("line " + std::to_string(number) + ": unknown section '" + key + "'");
    auto& tokens = out[key];
    std::istringstream rest(line.substr(colon + 1));
    std::string tok;
    while (rest >> tok) tokens.push_back(tok);
  }
  return out;
}

std::pair<std::string, std::string> split_pair(const std::string& tok, const std::string& sep,
                                               const std::string& section) {
  const auto at = tok.find(sep);
  if (at == std::string::npos || at == 0 || at + sep.size() >= tok.size())
    throw ModelFormatError(section + ": malformed entry '" + tok + "'");
  return {tok.substr(0, at), tok.substr(at + sep.size())};
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += " " + t;
  return out;
}

}  // namespace

NegationModel parse_model(const std::string& text) {
  Sections s = read_sections(text, {"elements", "order", "neg"});
  if (s["elements"].empty()) throw ModelFormatError("missing 'elements' section");
  LatticeSpec spec;
  spec.elements = s["elements"];
  for (const auto& tok : s["order"]) {
    auto pair = split_pair(tok, "<", "order");
    for (const auto& e : {pair.first, pair.second})
      if (std::find(spec.elements.begin(), spec.elements.end(), e) == spec.elements.end())
        throw ModelFormatError("order: unknown element " + e);
    spec.order.push_back(std::move(pair));
  }
  HeytingAlgebra alg = build_algebra(spec);
  const FiniteLattice& l = alg.lattice();
  NegationOp neg(static_cast<std::size_t>(l.size()), -1);
  for (const auto& tok : s["neg"]) {
    auto [from, to] = split_pair(tok, "->", "neg");
    const int a = l.find(from), b = l.find(to);
    if (a < 0) throw ModelFormatError("neg: unknown element " + from);
    if (b < 0) throw ModelFormatError("neg: unknown element " + to);
    if (neg[static_cast<std::size_t>(a)] >= 0 && neg[static_cast<std::size_t>(a)] != b)
      throw ModelFormatError("neg: two values for " + from);
    neg[static_cast<std::size_t>(a)] = b;
  }
  for (int a = 0; a < l.size(); ++a)
    if (neg[static_cast<std::size_t>(a)] < 0) throw ModelFormatError("neg: no value for " + l.name(a));
  return make_model(std::move(alg), std::move(neg));
}

std::string write_model(const NegationModel& m) {
  const FiniteLattice& l = m.lattice();
  std::vector<std::string> order, neg;
  for (auto [a, b] : l.covers()) order.push_back(l.name(a) + "<" + l.name(b));
  for (int a = 0; a < l.size(); ++a) neg.push_back(l.name(a) + "->" + l.name(m.neg[static_cast<std::size_t>(a)]));
  return "elements:" + join_tokens(l.names()) + "\norder:" + join_tokens(order) + "\nneg:" + join_tokens(neg) + "\n";
}

FrameSpec parse_frame_spec(const std::string& text) {
  Sections s = read_sections(text, {"worlds", "order", "R"});
  if (s["worlds"].empty()) throw ModelFormatError("missing 'worlds' section");
  FrameSpec spec;
  spec.worlds = s["worlds"];
  for (const auto& tok : s["order"]) spec.order.push_back(split_pair(tok, "<", "order"));
  static const std::regex pair_re(R"(\(([^,()]+),([^,()]+)\))");
  for (const auto& tok : s["R"]) {
    std::smatch m;
    if (!std::regex_match(tok, m, pair_re)) throw ModelFormatError("R: malformed pair '" + tok + "'");
    spec.relation.emplace_back(m[1].str(), m[2].str());
  }
  return spec;
}

PolarityFrame parse_frame(const std::string& text) { return build_frame(parse_frame_spec(text)); }

std::string write_frame(const PolarityFrame& f) {
  std::vector<std::string> order, rel;
  for (auto [u, w] : f.covers()) order.push_back(f.world(u) + "<" + f.world(w));
  for (auto [u, w] : f.relation()) rel.push_back("(" + f.world(u) + "," + f.world(w) + ")");
  return "worlds:" + join_tokens(f.worlds()) + "\norder:" + join_tokens(order) + "\nR:" + join_tokens(rel) + "\n";
}

bool looks_like_frame(const std::string& text) {
  static const std::regex worlds_re(R"((^|\n)[ \t]*worlds[ \t]*:)");
  return std::regex_search(text, worlds_re);
}

namespace {

const std::map<std::string, std::string>& builtin_texts() {
  static const std::map<std::string, std::string> texts = {
      {"B2_TRIV", "elements: 0 1\norder: 0<1\nneg: 0->1 1->1\n"},
      {"B2_CLASSICAL", "elements: 0 1\norder: 0<1\nneg: 0->1 1->0\n"},
      {"CHAIN3", "elements: 0 m 1\norder: 0<m m<1\nneg: 0->1 m->1 1->m\n"},
      {"FRAME_FULL_R", "worlds: a b\norder:\nR: (a,a) (a,b) (b,a) (b,b)\n"},
  };
  return texts;
}

const std::string& builtin_text(const std::string& name) {
  auto it = builtin_texts().find(name);
  if (it == builtin_texts().end()) throw UnknownBuiltin(name);
  return it->second;
}

constexpr const char* kBuiltinPrefix = "builtin:";

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"B2_TRIV", "B2_CLASSICAL", "CHAIN3", "FRAME_FULL_R"};
  return names;
}

bool is_builtin_frame(const std::string& name) { return looks_like_frame(builtin_text(name)); }

NegationModel builtin_model(const std::string& name) {
  const std::string& text = builtin_text(name);
  if (looks_like_frame(text)) return upset_algebra(parse_frame(text)).model;
  return parse_model(text);
}

PolarityFrame builtin_frame(const std::string& name) {
  const std::string& text = builtin_text(name);
  if (!looks_like_frame(text)) throw UnknownBuiltin(name + " (a model, not a frame)");
  return parse_frame(text);
}

std::string emit_builtin(const std::string& name) {
  if (is_builtin_frame(name)) return write_frame(builtin_frame(name));
  return write_model(builtin_model(name));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelFormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NegationModel load_model(const std::string& arg) {
  if (arg.rfind(kBuiltinPrefix, 0) == 0) return builtin_model(arg.substr(std::string(kBuiltinPrefix).size()));
  const std::string text = read_text_file(arg);
  if (looks_like_frame(text)) return upset_algebra(parse_frame(text)).model;
  return parse_model(text);
}

PolarityFrame load_frame(const std::string& arg) {
  if (arg.rfind(kBuiltinPrefix, 0) == 0) return builtin_frame(arg.substr(std::string(kBuiltinPrefix).size()));
  return parse_frame(read_text_file(arg));
}

}  // namespace dacosta
