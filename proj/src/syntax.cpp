#include "dacosta/syntax.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <utility>

namespace dacosta {

struct Formula::Node {
  Connective kind;
  std::string name;
  // optional so that building the constant 0 does not recurse
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::size_t hash = 0;
  std::size_t size = 1;
  bool has_meta = false;
  bool has_param = false;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max()
                                                         : a + b;
}

const std::string& empty_string() {
  static const std::string s;
  return s;
}

}  // namespace

Formula Formula::make(Connective kind, std::string name, const Formula* l, const Formula* r) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  std::size_t h = mix(0x51ed27, static_cast<std::size_t>(kind));
  h = mix(h, std::hash<std::string>{}(node->name));
  node->has_meta = kind == Connective::MetaVar;
  node->has_param = kind == Connective::ParamPow || kind == Connective::ParamCPow;
  if (l != nullptr) {
    node->left = *l;
    h = mix(h, l->hash());
    node->size = saturating_add(node->size, l->tree_size());
    node->has_meta = node->has_meta || l->has_metavars();
    node->has_param = node->has_param || l->has_open_parameter();
  }
  if (r != nullptr) {
    node->right = *r;
    h = mix(h, r->hash());
    node->size = saturating_add(node->size, r->tree_size());
    node->has_meta = node->has_meta || r->has_metavars();
    node->has_param = node->has_param || r->has_open_parameter();
  }
  node->hash = h;
  return Formula(std::move(node));
}

Formula::Formula() : node_(bot().node_) {}

Formula Formula::atom(std::string name) { return make(Connective::Atom, std::move(name), nullptr, nullptr); }
Formula Formula::metavar(std::string name) {
  return make(Connective::MetaVar, std::move(name), nullptr, nullptr);
}

Formula Formula::bot() {
  // Built without going through the default constructor.
  static const Formula b = [] {
    auto node = std::make_shared<Node>();
    node->kind = Connective::Bot;
    node->hash = mix(0x51ed27, static_cast<std::size_t>(Connective::Bot));
    node->hash = mix(node->hash, std::hash<std::string>{}(""));
    return Formula(std::move(node));
  }();
  return b;
}

Formula Formula::top() {
  static const Formula t = make(Connective::Top, "", nullptr, nullptr);
  return t;
}

Formula Formula::conj(Formula left, Formula right) { return make(Connective::And, "", &left, &right); }
Formula Formula::disj(Formula left, Formula right) { return make(Connective::Or, "", &left, &right); }
Formula Formula::imp(Formula left, Formula right) { return make(Connective::Imp, "", &left, &right); }
Formula Formula::neg(Formula inner) { return make(Connective::Neg, "", &inner, nullptr); }
Formula Formula::param_pow(Formula base) { return make(Connective::ParamPow, "", &base, nullptr); }
Formula Formula::param_cpow(Formula base) { return make(Connective::ParamCPow, "", &base, nullptr); }

Connective Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_binary() const noexcept {
  auto k = kind();
  return k == Connective::And || k == Connective::Or || k == Connective::Imp;
}

bool Formula::is_leaf() const noexcept {
  auto k = kind();
  return k == Connective::Atom || k == Connective::MetaVar || k == Connective::Bot || k == Connective::Top;
}

const std::string& Formula::name() const noexcept {
  return node_ ? node_->name : empty_string();
}

const Formula& Formula::left() const {
  if (is_leaf()) throw std::logic_error("leaf formula has no operand");
  return *node_->left;
}

const Formula& Formula::right() const {
  if (!is_binary()) throw std::logic_error("formula has no right operand");
  return *node_->right;
}

std::size_t Formula::hash() const noexcept { return node_->hash; }
std::size_t Formula::tree_size() const noexcept { return node_->size; }
bool Formula::has_metavars() const noexcept { return node_->has_meta; }
bool Formula::has_open_parameter() const noexcept { return node_->has_param; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  if (a.node_->name != b.node_->name) return false;
  if (a.is_leaf()) return true;
  if (!(*a.node_->left == *b.node_->left)) return false;
  return !a.is_binary() || *a.node_->right == *b.node_->right;
}

bool operator<(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return false;
  if (a.node_->hash != b.node_->hash) return a.node_->hash < b.node_->hash;
  if (a.node_->kind != b.node_->kind) return a.node_->kind < b.node_->kind;
  if (a.node_->name != b.node_->name) return a.node_->name < b.node_->name;
  if (a.is_leaf()) return false;
  if (*a.node_->left != *b.node_->left) return *a.node_->left < *b.node_->left;
  return a.is_binary() && *a.node_->right < *b.node_->right;
}

// ---------------------------------------------------------------------------
// Derived forms

Formula circ(const Formula& base) { return ~(base & ~base); }

Formula pow(const Formula& base, int n) {
  if (n < 1) throw ParameterError("power exponent must be >= 1, got " + std::to_string(n));
  Formula f = circ(base);
  for (int i = 2; i <= n; ++i) f = circ(f);
  return f;
}

Formula cpow(const Formula& base, int n) {
  if (n < 1) throw ParameterError("consistency exponent must be >= 1, got " + std::to_string(n));
  Formula power = circ(base);
  Formula acc = power;
  for (int i = 2; i <= n; ++i) {
    power = circ(power);
    acc = acc & power;
  }
  return acc;
}

Formula equiv(const Formula& a, const Formula& b) { return implies(a, b) & implies(b, a); }

Formula derived_form(DerivedKind kind, const Formula& base, int n) {
  switch (kind) {
    case DerivedKind::Circ:
      return circ(base);
    case DerivedKind::Pow:
      return pow(base, n);
    case DerivedKind::CPow:
      return cpow(base, n);
    case DerivedKind::Equiv:
      break;
  }
  throw ParameterError("equiv takes a second formula, not an integer");
}

Formula derived_form(DerivedKind kind, const Formula& a, const Formula& b) {
  if (kind != DerivedKind::Equiv) throw ParameterError("only equiv takes a second formula");
  return equiv(a, b);
}

Formula expand_parameter(const Formula& pattern, int n) {
  if (!pattern.has_open_parameter()) return pattern;
  switch (pattern.kind()) {
    case Connective::ParamPow:
      return pow(expand_parameter(pattern.inner(), n), n);
    case Connective::ParamCPow:
      return cpow(expand_parameter(pattern.inner(), n), n);
    case Connective::Neg:
      return ~expand_parameter(pattern.inner(), n);
    case Connective::And:
      return expand_parameter(pattern.left(), n) & expand_parameter(pattern.right(), n);
    case Connective::Or:
      return expand_parameter(pattern.left(), n) | expand_parameter(pattern.right(), n);
    case Connective::Imp:
      return implies(expand_parameter(pattern.left(), n), expand_parameter(pattern.right(), n));
    default:
      return pattern;
  }
}

// ---------------------------------------------------------------------------
// Parser
//
// Recursive descent over the grammar
//   imp := or ("->" imp)? | or "<->" or
//   or := and ("|" and)* ; and := unary ("&" unary)*
//   unary := "~" unary | postfix ; postfix := atom ("^o" | "^" NAT | "^(" NAT ")")*
//   atom := IDENT | "0" | "1" | "(" imp ")"
// An infix operator whose right operand cannot even start is left unconsumed,
// so errors point at the end of the longest well-formed prefix.

namespace {

constexpr int kMaxParsedExponent = 16;

class Parser {
 public:
  Parser(std::string_view text, ParseMode mode) : text_(text), mode_(mode) {}

  Formula run() {
    if (!operand_starts()) fail("expected a formula");
    Formula f = parse_imp();
    skip_ws();
    if (pos_ != text_.size()) {
      std::size_t at = end_;
      fail_at(at, "unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) { fail_at(end_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) { throw SyntaxError(at, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool lookahead(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!lookahead(tok)) {
      pos_ = end_;
      return false;
    }
    pos_ += tok.size();
    end_ = pos_;
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  bool operand_starts() {
    skip_ws();
    bool ok = false;
    if (pos_ < text_.size()) {
      char c = text_[pos_];
      ok = c == '~' || c == '(' || c == '0' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
    }
    pos_ = end_;
    return ok;
  }

  void mark(std::size_t& pos_save, std::size_t& end_save) const {
    pos_save = pos_;
    end_save = end_;
  }
  void restore(std::size_t pos_save, std::size_t end_save) {
    pos_ = pos_save;
    end_ = end_save;
  }

  Formula parse_imp() {
    Formula left = parse_or();
    std::size_t p = 0, e = 0;
    mark(p, e);
    if (accept("<->")) {
      if (!operand_starts()) {
        restore(p, e);
        return left;
      }
      return equiv(left, parse_or());
    }
    if (accept("->")) {
      if (!operand_starts()) {
        restore(p, e);
        return left;
      }
      return implies(left, parse_imp());
    }
    return left;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    for (;;) {
      std::size_t p = 0, e = 0;
      mark(p, e);
      if (!accept("|")) break;
      if (!operand_starts()) {
        restore(p, e);
        break;
      }
      acc = acc | parse_and();
    }
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_unary();
    for (;;) {
      std::size_t p = 0, e = 0;
      mark(p, e);
      if (!accept("&")) break;
      if (!operand_starts()) {
        restore(p, e);
        break;
      }
      acc = acc & parse_unary();
    }
    return acc;
  }

  Formula parse_unary() {
    if (accept("~")) {
      if (!operand_starts()) fail("expected operand after '~'");
      return ~parse_unary();
    }
    return parse_postfix();
  }

  int parse_nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) {
      pos_ = end_;
      fail("expected a natural number");
    }
    std::string digits(text_.substr(start, pos_ - start));
    end_ = pos_;
    if (digits.size() > 3 || std::stoi(digits) > kMaxParsedExponent) {
      throw ParameterError("exponent " + digits + " exceeds the supported maximum " +
                           std::to_string(kMaxParsedExponent));
    }
    int k = std::stoi(digits);
    if (k == 0) throw ParameterError("exponent must be >= 1 (got 0 at offset " + std::to_string(start) + ")");
    return k;
  }

  Formula parse_postfix() {
    Formula f = parse_atom();
    while (accept("^")) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'o' &&
          (pos_ + 1 == text_.size() || !(std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])) ||
                                         text_[pos_ + 1] == '_'))) {
        ++pos_;
        end_ = pos_;
        f = circ(f);
      } else if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        end_ = pos_;
        int k = parse_nat();
        expect(")");
        f = cpow(f, k);
      } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        f = pow(f, parse_nat());
      } else {
        pos_ = end_;
        fail("expected 'o', a number or '(' after '^'");
      }
    }
    return f;
  }

  Formula parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) {
      pos_ = end_;
      fail("expected a formula");
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      end_ = pos_;
      if (!operand_starts()) fail("expected a formula after '('");
      Formula inner = parse_imp();
      expect(")");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view digits = text_.substr(start, pos_ - start);
      if (digits == "0" || digits == "1") {
        end_ = pos_;
        return digits == "0" ? Formula::bot() : Formula::top();
      }
      pos_ = end_;
      fail("only the constants 0 and 1 are allowed, found '" + std::string(digits) + "'");
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      end_ = pos_;
      if (mode_ == ParseMode::Schema && name.size() == 1 && std::isupper(static_cast<unsigned char>(name[0])))
        return Formula::metavar(std::move(name));
      return Formula::atom(std::move(name));
    }
    pos_ = end_;
    fail("expected a formula");
  }

  std::string_view text_;
  ParseMode mode_;
  std::size_t pos_ = 0;  // scan position
  std::size_t end_ = 0;  // end of the last consumed token
};

}  // namespace

Formula parse(std::string_view text, ParseMode mode) { return Parser(text, mode).run(); }

// ---------------------------------------------------------------------------
// Rendering

namespace {

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Connective::Imp:
      return 1;
    case Connective::Or:
      return 2;
    case Connective::And:
      return 3;
    case Connective::Neg:
      return 4;
    default:
      return 5;
  }
}

void render_into(const Formula& f, std::string& out);

void render_wrapped(const Formula& f, bool wrap, std::string& out) {
  if (wrap) out += '(';
  render_into(f, out);
  if (wrap) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::MetaVar:
      out += f.name();
      return;
    case Connective::Bot:
      out += '0';
      return;
    case Connective::Top:
      out += '1';
      return;
    case Connective::Neg:
      out += '~';
      render_wrapped(f.inner(), precedence(f.inner()) < 4, out);
      return;
    case Connective::ParamPow:
      render_wrapped(f.inner(), precedence(f.inner()) < 5, out);
      out += "^n";
      return;
    case Connective::ParamCPow:
      render_wrapped(f.inner(), precedence(f.inner()) < 5, out);
      out += "^(n)";
      return;
    case Connective::Imp:
      render_wrapped(f.left(), precedence(f.left()) <= 1, out);
      out += " -> ";
      render_into(f.right(), out);
      return;
    case Connective::Or:
      render_wrapped(f.left(), precedence(f.left()) < 2, out);
      out += " | ";
      render_wrapped(f.right(), precedence(f.right()) <= 2, out);
      return;
    case Connective::And:
      render_wrapped(f.left(), precedence(f.left()) < 3, out);
      out += " & ";
      render_wrapped(f.right(), precedence(f.right()) <= 3, out);
      return;
  }
}

void tree_into(const Formula& f, std::string& out) {
  auto binary = [&](const char* tag) {
    out += tag;
    out += '(';
    tree_into(f.left(), out);
    out += ", ";
    tree_into(f.right(), out);
    out += ')';
  };
  auto unary = [&](const char* tag) {
    out += tag;
    out += '(';
    tree_into(f.inner(), out);
    out += ')';
  };
  switch (f.kind()) {
    case Connective::Atom:
      out += f.name();
      return;
    case Connective::MetaVar:
      out += '?';
      out += f.name();
      return;
    case Connective::Bot:
      out += "Bot";
      return;
    case Connective::Top:
      out += "Top";
      return;
    case Connective::And:
      return binary("And");
    case Connective::Or:
      return binary("Or");
    case Connective::Imp:
      return binary("Imp");
    case Connective::Neg:
      return unary("Neg");
    case Connective::ParamPow:
      return unary("Pow");
    case Connective::ParamCPow:
      return unary("CPow");
  }
}

void collect_leaves(const Formula& f, std::set<std::string>& out, bool only_meta) {
  if (f.kind() == Connective::MetaVar || (!only_meta && f.kind() == Connective::Atom)) {
    out.insert(f.name());
    return;
  }
  if (f.is_leaf()) return;
  if (only_meta && !f.has_metavars()) return;
  collect_leaves(f.left(), out, only_meta);
  if (f.is_binary()) collect_leaves(f.right(), out, only_meta);
}

Formula substitute(const Formula& f, const Substitution& s, bool strict) {
  if (f.has_open_parameter()) throw ParameterError("cannot substitute into a pattern with an open parameter n");
  if (!f.has_metavars()) return f;
  switch (f.kind()) {
    case Connective::MetaVar: {
      auto it = s.find(f.name());
      if (it != s.end()) return it->second;
      if (strict) throw UnboundMetaVar(f.name());
      return f;
    }
    case Connective::Neg:
      return ~substitute(f.inner(), s, strict);
    case Connective::And:
      return substitute(f.left(), s, strict) & substitute(f.right(), s, strict);
    case Connective::Or:
      return substitute(f.left(), s, strict) | substitute(f.right(), s, strict);
    case Connective::Imp:
      return implies(substitute(f.left(), s, strict), substitute(f.right(), s, strict));
    default:
      return f;
  }
}

bool match_into(const Formula& pattern, const Formula& target, Substitution& s) {
  if (pattern.kind() == Connective::MetaVar) {
    auto [it, inserted] = s.try_emplace(pattern.name(), target);
    return inserted || it->second == target;
  }
  if (!pattern.has_metavars()) return pattern == target;
  if (pattern.kind() != target.kind()) return false;
  if (!match_into(pattern.left(), target.left(), s)) return false;
  return !pattern.is_binary() || match_into(pattern.right(), target.right(), s);
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::string to_tree_string(const Formula& f) {
  std::string out;
  tree_into(f, out);
  return out;
}

std::set<std::string> metavars(const Formula& f) {
  std::set<std::string> out;
  collect_leaves(f, out, true);
  return out;
}

std::set<std::string> leaf_names(const Formula& f) {
  std::set<std::string> out;
  collect_leaves(f, out, false);
  return out;
}

Formula apply_subst(const MetaFormula& pattern, const Substitution& s) { return substitute(pattern, s, true); }

MetaFormula apply_subst_partial(const MetaFormula& pattern, const Substitution& s) {
  return substitute(pattern, s, false);
}

std::optional<Substitution> match_pattern(const MetaFormula& pattern, const Formula& target) {
  if (pattern.has_open_parameter()) throw ParameterError("pattern still has an open parameter n");
  Substitution s;
  if (!match_into(pattern, target, s)) return std::nullopt;
  return s;
}

std::string render(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, f] : s) {
    if (!first) out += ", ";
    first = false;
    out += name;
    out += ":=";
    out += render(f);
  }
  out += '}';
  return out;
}

}  // namespace dacosta
