#include <doctest.h>

#include <random>

#include "dacosta/syntax.hpp"
#include "oracles.hpp"

using namespace dacosta;

namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }
Formula r() { return Formula::atom("r"); }

std::size_t syntax_offset(const std::string& text) {
  try {
    parse(text);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  FAIL("no syntax error for " << text);
  return 0;
}

}  // namespace

TEST_SUITE("syntax") {
  TEST_CASE("implication is right associative") {
    CHECK(parse("p -> q -> p") == implies(p(), implies(q(), p())));
    CHECK(to_tree_string(parse("p -> q -> p")) == "Imp(p, Imp(q, p))");
  }

  TEST_CASE("precedence of the connectives") {
    CHECK(parse("p & q | r") == ((p() & q()) | r()));
    CHECK(parse("p | q & r") == (p() | (q() & r())));
    CHECK(parse("~p & q") == (~p() & q()));
    CHECK(parse("p | q -> r") == implies(p() | q(), r()));
    CHECK(parse("p & q & r") == ((p() & q()) & r()));
    CHECK(parse("p | q | r") == ((p() | q()) | r()));
    CHECK(parse("~~p") == ~~p());
    CHECK(parse("0 -> 1") == implies(Formula::bot(), Formula::top()));
  }

  TEST_CASE("circ desugars to the negated contradiction") {
    CHECK(parse("p^o") == ~(p() & ~p()));
    CHECK(to_tree_string(parse("p^o")) == "Neg(And(p, Neg(p)))");
    CHECK(circ(p()) == ~(p() & ~p()));
  }

  TEST_CASE("powers and cumulative powers") {
    const Formula p1 = ~(p() & ~p());
    const Formula p2 = ~(p1 & ~p1);
    const Formula p3 = ~(p2 & ~p2);
    CHECK(pow(p(), 1) == p1);
    CHECK(pow(p(), 2) == p2);
    CHECK(pow(p(), 2) == circ(circ(p())));
    CHECK(cpow(p(), 1) == p1);
    CHECK(cpow(p(), 3) == ((p1 & p2) & p3));
    CHECK(parse("p^2") == p2);
    CHECK(parse("p^(3)") == ((p1 & p2) & p3));
    CHECK(parse("p^o^o") == p2);
    CHECK(parse("~p^1") == ~p1);
    CHECK(parse("(p & q)^1") == circ(p() & q()));
  }

  TEST_CASE("desugaring recurrences hold for n up to 8") {
    for (int n = 2; n <= 8; ++n) {
      CHECK(pow(p(), n) == circ(pow(p(), n - 1)));
      CHECK(cpow(p(), n) == (cpow(p(), n - 1) & pow(p(), n)));
    }
  }

  TEST_CASE("equivalence abbreviation") {
    CHECK(parse("p <-> q") == (implies(p(), q()) & implies(q(), p())));
    CHECK(equiv(p(), q()) == parse("(p -> q) & (q -> p)"));
    CHECK(derived_form(DerivedKind::Equiv, p(), q()) == equiv(p(), q()));
    CHECK(derived_form(DerivedKind::CPow, p(), 2) == cpow(p(), 2));
  }

  TEST_CASE("zero exponents are parameter errors") {
    CHECK_THROWS_AS(parse("p^0"), ParameterError);
    CHECK_THROWS_AS(parse("p^(0)"), ParameterError);
    CHECK_THROWS_AS(pow(p(), 0), ParameterError);
    CHECK_THROWS_AS(cpow(p(), -1), ParameterError);
  }

  TEST_CASE("syntax errors carry the offset") {
    CHECK(syntax_offset("p -> (q &") == 7);
    CHECK(syntax_offset("") == 0);
    CHECK(syntax_offset("p q") == 1);
    CHECK(syntax_offset(")") == 0);
    CHECK_THROWS_AS(parse("p $ q"), SyntaxError);
    CHECK_THROWS_AS(parse("p <-> q <-> r"), SyntaxError);
  }

  TEST_CASE("minimal parenthesis rendering") {
    CHECK(render(implies(p(), implies(q(), p()))) == "p -> q -> p");
    CHECK(render(~(p() & ~p())) == "~(p & ~p)");
    CHECK(render((p() & q()) | r()) == "p & q | r");
    CHECK(render(implies(implies(p(), q()), r())) == "(p -> q) -> r");
    CHECK(render(p() & (q() & r())) == "p & (q & r)");
    CHECK(render(~~p()) == "~~p");
  }

  TEST_CASE("random formulas round trip through both renderings") {
    std::mt19937 rng(20241016);
    const std::vector<std::string> atoms{"p", "q", "r", "x1", "long_name"};
    for (int i = 0; i < 2000; ++i) {
      const Formula f = oracle::random_formula(rng, 6, atoms);
      CHECK(parse(render(f)) == f);
      CHECK(parse(oracle::full_paren(f)) == f);
    }
  }

  TEST_CASE("schema mode reads single capitals as metavariables") {
    const Formula f = parse_schema("A -> B -> A");
    CHECK(f.has_metavars());
    CHECK(metavars(f) == std::set<std::string>{"A", "B"});
    CHECK_FALSE(parse("A -> B -> A").has_metavars());
    CHECK(leaf_names(parse("A -> B -> A")) == std::set<std::string>{"A", "B"});
  }

  TEST_CASE("substitution examples") {
    const Formula k = parse_schema("A -> (B -> A)");
    CHECK(apply_subst(k, {{"A", p()}, {"B", q() | r()}}) == parse("p -> ((q | r) -> p)"));
    try {
      apply_subst(k, {{"A", p()}});
      FAIL("expected UnboundMetaVar");
    } catch (const UnboundMetaVar& e) {
      CHECK(e.name() == "B");
    }
    CHECK(apply_subst(parse_schema("~A"), {{"A", ~p()}}) == ~~p());
    // Simultaneous: B inserted for A is not substituted again.
    CHECK(apply_subst(parse_schema("A & B"), {{"A", Formula::metavar("B")}, {"B", p()}}) ==
          (Formula::metavar("B") & p()));
  }

  TEST_CASE("matching examples") {
    auto s = match_pattern(parse_schema("(A -> B) -> (~B -> ~A)"), parse("(p -> q) -> (~q -> ~p)"));
    REQUIRE(s);
    CHECK(render(*s) == "{A:=p, B:=q}");
    CHECK_FALSE(match_pattern(parse_schema("A -> (B -> A)"), parse("p -> (q -> r)")));
    auto t = match_pattern(parse_schema("A | ~A"), parse("(p & q) | ~(p & q)"));
    REQUIRE(t);
    CHECK(t->at("A") == (p() & q()));
  }

  TEST_CASE("match and apply agree on random instances") {
    std::mt19937 rng(7);
    const Formula pattern = parse_schema("(A -> B) -> (~B -> ~A) & (C | A)");
    for (int i = 0; i < 300; ++i) {
      Substitution s{{"A", oracle::random_formula(rng, 3, {"p", "q"})},
                     {"B", oracle::random_formula(rng, 3, {"p", "q"})},
                     {"C", oracle::random_formula(rng, 3, {"p", "q"})}};
      const Formula t = apply_subst(pattern, s);
      auto m = match_pattern(pattern, t);
      REQUIRE(m);
      CHECK(*m == s);
      CHECK(apply_subst(pattern, *m) == t);
    }
  }

  TEST_CASE("parameter expansion") {
    const Formula pat = Formula::param_cpow(Formula::metavar("A"));
    CHECK(pat.has_open_parameter());
    CHECK(expand_parameter(pat, 2) == cpow(Formula::metavar("A"), 2));
    CHECK_THROWS_AS(apply_subst(pat, {{"A", p()}}), ParameterError);
  }

  TEST_CASE("structural equality and hashing") {
    CHECK(parse("p & q") == parse("(p & q)"));
    CHECK(parse("p & q") != parse("q & p"));
    CHECK(parse("p & q").hash() == parse("(p)&(q)").hash());
    CHECK(parse("p -> q").tree_size() == 3);
  }
}
