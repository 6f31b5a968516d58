#include <doctest.h>

#include <random>

#include "dacosta/algebra.hpp"
#include "dacosta/calculus.hpp"
#include "dacosta/corpus.hpp"
#include "oracles.hpp"

using namespace dacosta;

namespace {

HeytingAlgebra chain(int k) {
  LatticeSpec spec;
  for (int i = 0; i < k; ++i) spec.elements.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < k; ++i) spec.order.emplace_back(spec.elements[i], spec.elements[i + 1]);
  return build_algebra(spec);
}

// Element of chain(k) at height i, whatever the internal numbering.
int at(const HeytingAlgebra& h, int i) { return h.lattice().find("c" + std::to_string(i)); }

NegationModel chain_model(int k, const std::vector<int>& neg_heights) {
  HeytingAlgebra h = chain(k);
  NegationOp op(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) op[static_cast<std::size_t>(at(h, i))] = at(h, neg_heights[static_cast<std::size_t>(i)]);
  return make_model(std::move(h), op);
}

NegationModel b2(int neg_of_bot, int neg_of_top) { return chain_model(2, {neg_of_bot, neg_of_top}); }

std::vector<std::vector<int>> all_tables(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(k), 0);
  while (true) {
    out.push_back(t);
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == k) t[i++] = 0;
    if (i == t.size()) return out;
  }
}

std::vector<Formula> schemas_of(const std::string& system, int n) {
  std::vector<Formula> out;
  for (const auto& [name, f] : list_axioms(system, n)) out.push_back(f);
  return out;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("poset counts match the known sequence") {
    for (int n = 0; n <= 5; ++n) CHECK_MESSAGE(enumerate_posets(n).size() == oracle::known_poset_count(n), n);
    CHECK_THROWS_AS(enumerate_posets(7), BoundExceeded);
  }

  TEST_CASE("distributive lattice counts by size") {
    auto by_size = [](const EnumerationBounds& b) {
      std::map<int, std::size_t> out;
      for (const auto& h : enumerate_distributive_lattices(b)) ++out[h.size()];
      return out;
    };
    const auto full = by_size({5, 6});
    for (int k = 1; k <= 6; ++k) CHECK_MESSAGE(full.at(k) == oracle::known_distributive_lattice_count(k), k);
    // The 6-chain needs five join-irreducibles.
    CHECK(by_size({4, 6}).at(6) == 4);
    const auto eight = by_size({6, 8});
    for (int k = 1; k <= 7; ++k) CHECK_MESSAGE(eight.at(k) == oracle::known_distributive_lattice_count(k), k);
    // The 8-chain would need a seven point poset.
    CHECK(eight.at(8) == oracle::known_distributive_lattice_count(8) - 1);
    CHECK_THROWS_AS(enumerate_distributive_lattices({7, 6}), BoundExceeded);
    CHECK_THROWS_AS(enumerate_distributive_lattices({4, 9}), BoundExceeded);
  }

  TEST_CASE("up-set lattices have the oracle's element count") {
    for (int n = 0; n <= 4; ++n)
      for (const Poset& p : enumerate_posets(n)) {
        oracle::Order o{p.points, p.leq};
        CHECK(upset_lattice(p).size() == static_cast<int>(oracle::count_upsets(o)));
        CHECK(sorted_upsets(p).size() == oracle::count_upsets(o));
      }
  }

  TEST_CASE("up-set lattice naming and order") {
    Poset anti{2, {{true, false}, {false, true}}};
    const HeytingAlgebra h = upset_lattice(anti);
    CHECK(h.lattice().names() == std::vector<std::string>{"0", "x1", "x2", "1"});
    const HeytingAlgebra named = upset_lattice(anti, {"a", "b"});
    CHECK(named.lattice().names() == std::vector<std::string>{"{}", "{a}", "{b}", "{a,b}"});
    CHECK(sorted_upsets(anti) == std::vector<unsigned>{0, 1, 2, 3});
  }

  TEST_CASE("chain implication agrees with the chain oracle") {
    for (int k = 2; k <= 4; ++k) {
      const HeytingAlgebra h = chain(k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) CHECK(h.imp(at(h, a), at(h, b)) == at(h, a <= b ? k - 1 : b));
    }
  }

  TEST_CASE("residuation on every enumerated lattice") {
    for (const auto& h : enumerate_distributive_lattices({4, 8})) {
      const FiniteLattice& l = h.lattice();
      for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b)
          for (int c = 0; c < l.size(); ++c) CHECK(l.leq(l.meet(a, c), b) == l.leq(c, h.imp(a, b)));
    }
  }

  TEST_CASE("building algebras from order data") {
    CHECK(chain(3).lattice().covers().size() == 2);
    // Three points with only a < b have no top.
    CHECK_THROWS_AS(build_algebra({{"a", "b", "c"}, {{"a", "b"}}}), NotALattice);
    CHECK_THROWS_AS(build_algebra({{"0", "a", "b", "c", "1"},
                                   {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}}),
                    NotDistributive);
    CHECK_THROWS_AS(build_algebra({{"a", "b"}, {{"a", "b"}, {"b", "a"}}}), NotALattice);
    CHECK_THROWS_AS(make_model(chain(2), {0}), Error);
    CHECK_THROWS_AS(make_model(chain(2), {0, 5}), Error);
  }

  TEST_CASE("evaluation agrees with the chain oracle on random formulas") {
    std::mt19937 rng(99);
    const std::vector<std::string> atoms{"p", "q"};
    for (const auto& t : all_tables(3)) {
      const NegationModel m = chain_model(3, t);
      const oracle::ChainModel o{3, t};
      for (int i = 0; i < 40; ++i) {
        const Formula f = oracle::random_formula(rng, 4, atoms);
        for (int p = 0; p < 3; ++p)
          for (int q = 0; q < 3; ++q) {
            const int got = eval(f, m, {{"p", at(m.algebra, p)}, {"q", at(m.algebra, q)}});
            CHECK(got == at(m.algebra, o.eval(f, {{"p", p}, {"q", q}})));
          }
        CHECK(is_valid(f, m).valid == o.valid(f, atoms));
      }
    }
  }

  TEST_CASE("validity and entailment on B2 with trivial negation") {
    const NegationModel triv = b2(1, 1);
    CHECK(is_valid(parse("~p"), triv).valid);
    CHECK(is_valid(parse("p | ~p"), triv).valid);
    const ValidityResult r = is_valid(parse("p & ~p -> q"), triv);
    CHECK_FALSE(r.valid);
    REQUIRE(r.falsifier);
    CHECK(render_valuation(*r.falsifier, triv.lattice()) == "p=c1,q=c0");
    const ValidityResult e = entails({parse("A"), parse("~A")}, parse("B"), triv);
    CHECK_FALSE(e.valid);
    CHECK(render_valuation(*e.falsifier, triv.lattice()) == "A=c1,B=c0");
    CHECK(entails({parse("A"), parse("A -> B")}, parse("B"), triv).valid);
    CHECK_THROWS_AS(eval(parse("p & q"), triv, {{"p", 0}}), UnboundAtom);
  }

  TEST_CASE("modus ponens preserves validity in every small model") {
    const Formula a = parse("p -> q | ~p");
    const Formula ab = parse("(p -> q | ~p) -> ~~(p -> q | ~p) | q");
    for (const auto& m : enumerate_models({3, 4}, NegationClass::None)) {
      if (is_valid(a, m).valid && is_valid(ab, m).valid) CHECK(is_valid(parse("~~(p -> q | ~p) | q"), m).valid);
    }
  }

  TEST_CASE("classification of the two element models") {
    CHECK(classify_negation(b2(1, 0)).cls == NegationClass::DeMorgan);
    CHECK(classify_negation(b2(1, 1)).cls == NegationClass::Constructive);
    CHECK(classify_negation(b2(0, 0)).cls == NegationClass::None);
    CHECK(classify_negation(b2(0, 1)).cls == NegationClass::None);
    const ClassReport r = classify_negation(b2(1, 1));
    CHECK(r.antitone);
    CHECK(r.top_in_image);
    CHECK_FALSE(r.involutive);
    CHECK(r.violations().empty());
    CHECK(std::string(to_string(NegationClass::Split)) == "Split");
  }

  TEST_CASE("classification on the three chain") {
    // Pseudocomplement.
    CHECK(classify_negation(chain_model(3, {2, 0, 0})).cls == NegationClass::Constructive);
    // Order reversal.
    CHECK(classify_negation(chain_model(3, {2, 1, 0})).cls == NegationClass::DeMorgan);
    // Antitone, top reached, but ~0 is not 1.
    CHECK(classify_negation(chain_model(3, {1, 1, 2})).cls == NegationClass::None);
    CHECK(classify_negation(chain_model(3, {2, 2, 1})).cls == NegationClass::Constructive);
  }

  TEST_CASE("class filters agree with the defining conditions") {
    std::size_t none = 0, general = 0, split = 0, constructive = 0, demorgan = 0;
    for (const auto& t : all_tables(3)) {
      const NegationModel m = chain_model(3, t);
      bool antitone = true, top_image = false, join_meet = true;
      for (int x = 0; x < 3; ++x) {
        if (t[x] == 2) top_image = true;
        for (int y = 0; y < 3; ++y) {
          if (x <= y && t[y] > t[x]) antitone = false;
          if (t[std::max(x, y)] != std::min(t[x], t[y])) join_meet = false;
        }
      }
      const NegationClass c = classify_negation(m).cls;
      if (!(antitone && top_image)) {
        CHECK(c == NegationClass::None);
        ++none;
        continue;
      }
      ++general;
      // On a chain joins and meets of two elements are the elements themselves.
      if (join_meet && t[0] == 2) {
        CHECK(c >= NegationClass::Constructive);
        ++split;
        ++constructive;
        if (t[t[0]] == 0 && t[t[1]] == 1 && t[t[2]] == 2) ++demorgan;
        CHECK((c == NegationClass::DeMorgan) == (t[t[0]] == 0 && t[t[1]] == 1 && t[t[2]] == 2));
      } else {
        CHECK(c == NegationClass::General);
      }
    }
    CHECK(none + general == 27);
    CHECK(enumerate_models({2, 3}, NegationClass::None).size() >= 27);
    std::size_t chain3_split = 0;
    for_each_model({2, 3}, NegationClass::Split, [&](const NegationModel& m) {
      if (m.size() == 3) ++chain3_split;
      CHECK(classify_negation(m).cls >= NegationClass::Split);
      return true;
    });
    CHECK(chain3_split == split);
    std::size_t chain3_demorgan = 0;
    for_each_model({2, 3}, NegationClass::DeMorgan, [&](const NegationModel& m) {
      if (m.size() == 3) ++chain3_demorgan;
      return true;
    });
    CHECK(chain3_demorgan == demorgan);
  }

  TEST_CASE("enumeration can stop early") {
    std::size_t seen = 0;
    for_each_model({4, 6}, NegationClass::None, [&](const NegationModel&) { return ++seen < 5; });
    CHECK(seen == 5);
  }

  TEST_CASE("right adjoints") {
    CHECK_FALSE(right_adjoint(b2(0, 0)));
    const auto triv = right_adjoint(b2(1, 1));
    REQUIRE(triv);
    CHECK(triv->selfadjoint);
    const NegationModel pc = chain_model(3, {2, 0, 0});
    const auto a = right_adjoint(pc);
    REQUIRE(a);
    // Galois: y <= ~x iff x <= adj(y), checked against the table by hand.
    const FiniteLattice& l = pc.lattice();
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        CHECK(l.leq(y, pc.neg[static_cast<std::size_t>(x)]) == l.leq(x, a->table[static_cast<std::size_t>(y)]));
    CHECK(a->selfadjoint);
    // On the three chain, ~0 = ~m = 1 and ~1 = 0 has the adjoint 1, m, m.
    const NegationModel m = chain_model(3, {2, 2, 0});
    const auto adj = right_adjoint(m);
    REQUIRE(adj);
    CHECK_FALSE(adj->selfadjoint);
    CHECK(adj->table[static_cast<std::size_t>(at(m.algebra, 0))] == at(m.algebra, 2));
    CHECK(adj->table[static_cast<std::size_t>(at(m.algebra, 1))] == at(m.algebra, 1));
    CHECK(adj->table[static_cast<std::size_t>(at(m.algebra, 2))] == at(m.algebra, 1));
  }

  TEST_CASE("countermodels for explosion and excluded middle") {
    const SearchResult r = countermodel_search(schemas_of("mZn", 1), parse("A & ~A -> B"), {4, 6});
    REQUIRE(r.found);
    CHECK(is_valid(parse("A & ~A -> B"), *r.model).valid == false);
    for (const auto& ax : schemas_of("mZn", 1)) CHECK(is_valid(ax, *r.model).valid);
    CHECK(eval(parse("A & ~A -> B"), *r.model, r.valuation) != r.model->lattice().top());

    const SearchResult em = countermodel_search(schemas_of("INT", 1), parse("A | ~A"), {4, 6});
    REQUIRE(em.found);
    CHECK(em.model->size() == 3);

    const SearchResult none = countermodel_search(schemas_of("CPL", 1), parse("A | ~A"), {4, 6});
    CHECK_FALSE(none.found);
    CHECK(none.models_validating > 0);
    const SearchResult dne = countermodel_search(schemas_of("CPL", 1), parse("~~A -> A"), {4, 6});
    CHECK_FALSE(dne.found);
  }

  TEST_CASE("compiled formulas follow the variable numbering") {
    const CompiledFormula c(parse("p -> q"), {"q", "p"});
    const NegationModel m = b2(1, 0);
    const int bot = at(m.algebra, 0), top = at(m.algebra, 1);
    CHECK(c.run(m, {bot, top}) == bot);
    CHECK(c.run(m, {top, bot}) == top);
    CHECK(CompiledFormula(parse("q & p")).variables() == std::vector<std::string>{"p", "q"});
  }
}
