#include <doctest.h>

#include <random>

#include "dacosta/model_io.hpp"
#include "dacosta/polarity.hpp"
#include "oracles.hpp"

using namespace dacosta;

namespace {

oracle::Order order_of(const PolarityFrame& f) {
  oracle::Order o{f.size(), std::vector<std::vector<bool>>(static_cast<std::size_t>(f.size()),
                                                           std::vector<bool>(static_cast<std::size_t>(f.size())))};
  for (int u = 0; u < f.size(); ++u)
    for (int w = 0; w < f.size(); ++w) o.le[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = f.leq(u, w);
  return o;
}

// Brute force lambda straight from the relation.
std::uint32_t brute_lambda(const PolarityFrame& f, std::uint32_t s) {
  std::uint32_t out = 0;
  for (int w = 0; w < f.size(); ++w) {
    bool ok = true;
    for (int u = 0; u < f.size(); ++u)
      if ((s >> u & 1U) && !f.related(u, w)) ok = false;
    if (ok) out |= 1U << w;
  }
  return out;
}

std::uint32_t brute_rho(const PolarityFrame& f, std::uint32_t s) {
  std::uint32_t out = 0;
  for (int w = 0; w < f.size(); ++w) {
    bool ok = true;
    for (int v = 0; v < f.size(); ++v)
      if ((s >> v & 1U) && !f.related(w, v)) ok = false;
    if (ok) out |= 1U << w;
  }
  return out;
}

std::vector<std::uint32_t> upsets_of(const oracle::Order& o) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1U << o.n); ++s)
    if (oracle::is_upset(o, s)) out.push_back(s);
  return out;
}

PolarityFrame two_chain_frame() { return build_frame(FrameSpec{{"a", "b"}, {{"a", "b"}}, {{"a", "b"}, {"b", "b"}}}); }

const std::vector<PolarityFrame>& frames3() {
  static const std::vector<PolarityFrame> f = enumerate_frames(3);
  return f;
}

}  // namespace

TEST_SUITE("polarity") {
  TEST_CASE("building frames") {
    const PolarityFrame f = two_chain_frame();
    CHECK(f.size() == 2);
    CHECK(f.leq(0, 1));
    CHECK_FALSE(f.leq(1, 0));
    CHECK(f.related(0, 1));
    CHECK_FALSE(f.related(1, 0));
    CHECK(f.render(0b10) == "{b}");
    CHECK(f.render(0) == "{}");
    CHECK(f.find("b") == 1);
    CHECK(f.find("z") == -1);
    CHECK(f.covers() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(f.relation() == std::vector<std::pair<int, int>>{{0, 1}, {1, 1}});
    CHECK(f.is_upset(0b10));
    CHECK_FALSE(f.is_upset(0b01));

    // The order is closed transitively.
    const PolarityFrame g = build_frame(FrameSpec{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {}});
    CHECK(g.leq(0, 2));
  }

  TEST_CASE("frame construction errors") {
    CHECK_THROWS_AS(build_frame(FrameSpec{{"a", "b"}, {{"a", "b"}, {"b", "a"}}, {}}), NotAPoset);
    CHECK_THROWS_AS(build_frame(FrameSpec{{"a", "a"}, {}, {}}), NotAPoset);
    CHECK_THROWS_AS(build_frame(FrameSpec{{"a"}, {{"a", "z"}}, {}}), NotAPoset);
    CHECK_THROWS_AS(build_frame(FrameSpec{{"a"}, {}, {{"a", "z"}}}), NotAPoset);
    CHECK_THROWS_WITH_AS(build_frame(FrameSpec{{"a", "b"}, {{"a", "b"}}, {{"a", "a"}}}),
                         "(a,a) is in R and below (a,b), which is not in R", NotHereditary);
  }

  TEST_CASE("polar examples") {
    const PolarityFrame f = two_chain_frame();
    CHECK(lambda(f, 0b10) == 0b10);
    CHECK(lambda(f, 0b11) == 0b10);
    CHECK(lambda(f, 0) == 0b11);
    CHECK(rho(f, 0b10) == 0b11);
    CHECK(rho(f, 0b01) == 0);
    CHECK(polar(f, 0b10, Side::Rho) == rho(f, 0b10));
  }

  TEST_CASE("polars agree with the brute force on every small frame") {
    for (const auto& f : frames3())
      for (std::uint32_t s = 0; s <= f.all(); ++s) {
        CHECK(lambda(f, s) == brute_lambda(f, s));
        CHECK(rho(f, s) == brute_rho(f, s));
      }
  }

  TEST_CASE("Galois laws hold on every frame up to three worlds") {
    for (const auto& f : frames3()) {
      const GaloisReport all = check_galois(f);
      CHECK(all.all_hold());
      CHECK(all.laws.size() == 6);
      const GaloisReport up = check_galois(f, true);
      CHECK(up.all_hold());
      CHECK(up.hereditary_only);
      REQUIRE(all.find("galois"));
      CHECK(all.find("galois")->instances == static_cast<std::size_t>((f.all() + 1) * (f.all() + 1)));
    }
    CHECK(check_galois(two_chain_frame()).find("nonsense") == nullptr);
  }

  TEST_CASE("hereditary relations are the up-sets of the pair order") {
    std::size_t expected = 0;
    for (int k = 1; k <= 3; ++k)
      for (const Poset& p : enumerate_posets(k)) expected += oracle::count_upsets(oracle::product({p.points, p.leq}));
    CHECK(frames3().size() == expected);
    CHECK(frames3().size() == 760);
    CHECK(enumerate_frames(1).size() == 2);
    CHECK(enumerate_frames(2).size() == 24);
    CHECK_THROWS_AS(enumerate_frames(5), BoundExceeded);
    for (const auto& f : frames3()) {
      const oracle::Order pairs = oracle::product(order_of(f));
      std::uint32_t r = 0;
      for (int u = 0; u < f.size(); ++u)
        for (int w = 0; w < f.size(); ++w)
          if (f.related(u, w)) r |= 1U << (u * f.size() + w);
      CHECK(oracle::is_upset(pairs, r));
    }
  }

  TEST_CASE("up-set algebra of the two chain frame") {
    const UpSetAlgebra a = upset_algebra(two_chain_frame());
    CHECK(a.upsets == std::vector<WorldSet>{0, 0b10, 0b11});
    CHECK(a.model.lattice().names() == std::vector<std::string>{"{}", "{b}", "{a,b}"});
    CHECK(a.model.neg == NegationOp{2, 1, 1});
    CHECK(a.index_of(0b10) == 1);
    CHECK(a.index_of(0b01) == -1);
    CHECK(classify_negation(a.model).cls == NegationClass::Constructive);
    CHECK_FALSE(is_selfadjoint(two_chain_frame()));
  }

  TEST_CASE("the full relation gives a constant top negation") {
    const PolarityFrame f = builtin_frame("FRAME_FULL_R");
    const UpSetAlgebra a = upset_algebra(f);
    CHECK(a.model.size() == 4);
    for (int x : a.model.neg) CHECK(x == a.model.lattice().top());
    CHECK(is_selfadjoint(f));
    CHECK(classify_negation(a.model).cls == NegationClass::Constructive);
  }

  TEST_CASE("selfadjoint frames") {
    // Two incomparable worlds related only to themselves.
    const PolarityFrame diag = build_frame(FrameSpec{{"a", "b"}, {}, {{"a", "a"}, {"b", "b"}}});
    CHECK(is_selfadjoint(diag));
    const PolarityFrame one_way = build_frame(FrameSpec{{"a", "b"}, {}, {{"a", "b"}}});
    CHECK_FALSE(is_selfadjoint(one_way));
    for (const auto& f : frames3()) {
      bool expected = true;
      for (std::uint32_t s = 0; s <= f.all(); ++s)
        if (f.is_upset(s) && brute_lambda(f, s) != brute_rho(f, s)) expected = false;
      CHECK(is_selfadjoint(f) == expected);
    }
  }

  TEST_CASE("up-set algebras are closed and at least split") {
    for (const auto& f : frames3()) {
      const UpSetAlgebra a = upset_algebra(f);
      CHECK(a.upsets.size() == oracle::count_upsets(order_of(f)));
      CHECK(classify_negation(a.model).cls >= NegationClass::Split);
      for (std::size_t i = 0; i < a.upsets.size(); ++i)
        CHECK(a.upsets[static_cast<std::size_t>(a.model.neg[i])] == brute_lambda(f, a.upsets[i]));
    }
  }

  TEST_CASE("Kripke truth sets agree with the set oracle and the algebra") {
    std::mt19937 rng(4242);
    const std::vector<std::string> atoms{"p", "q"};
    for (const auto& f : frames3()) {
      const oracle::Order o = order_of(f);
      const oracle::SetModel sm{o, [&f](std::uint32_t s) { return brute_lambda(f, s); }};
      const UpSetAlgebra alg = upset_algebra(f);
      const auto ups = upsets_of(o);
      for (int i = 0; i < 6; ++i) {
        const Formula phi = oracle::random_formula(rng, 4, atoms);
        const std::uint32_t vp = ups[rng() % ups.size()];
        const std::uint32_t vq = ups[rng() % ups.size()];
        const WorldSet t = kripke_truth_set(f, {{"p", vp}, {"q", vq}}, phi);
        CHECK(t == sm.eval(phi, {{"p", vp}, {"q", vq}}));
        CHECK(f.is_upset(t));
        const int e = eval(phi, alg.model, {{"p", alg.index_of(vp)}, {"q", alg.index_of(vq)}});
        CHECK(alg.upsets[static_cast<std::size_t>(e)] == t);
        for (int w = 0; w < f.size(); ++w) CHECK(kripke_eval(f, {{"p", vp}, {"q", vq}}, w, phi) == ((t >> w & 1U) != 0));
      }
    }
  }

  TEST_CASE("Kripke negation clause") {
    const PolarityFrame f = two_chain_frame();
    // a forces ~p iff every world forcing p sees a; nothing sees a.
    CHECK_FALSE(kripke_eval(f, {{"p", 0b10}}, 0, parse("~p")));
    CHECK(kripke_eval(f, {{"p", 0b10}}, 1, parse("~p")));
    CHECK(kripke_eval(f, {{"p", 0}}, 0, parse("~p")));
    CHECK_THROWS_AS(kripke_truth_set(f, {{"p", 0b01}}, parse("p")), NonHereditaryValuation);
    CHECK_THROWS_AS(kripke_truth_set(f, {{"p", 0b10}}, parse("p & q")), UnboundAtom);
  }

  TEST_CASE("frame axiom reports") {
    const PolarityFrame full = builtin_frame("FRAME_FULL_R");
    const FrameAxiomReport mzn = verify_frame_axioms(full, "mZn", 1);
    CHECK(mzn.system == "mZn n=1");
    CHECK(mzn.all_valid());
    CHECK(mzn.axioms.size() == 15);
    CHECK(mzn.selfadjoint);
    CHECK_FALSE(mzn.selfadjoint_required);

    const FrameAxiomReport zn = verify_frame_axioms(full, "Zn", 1);
    CHECK_FALSE(zn.all_valid());
    CHECK(zn.failing() == std::vector<std::string>{"10b.2"});

    const FrameAxiomReport mczn = verify_frame_axioms(full, "mCZn", 1);
    CHECK(mczn.selfadjoint_required);

    const FrameAxiomReport chain = verify_frame_axioms(two_chain_frame(), "mCZn", 1);
    CHECK_FALSE(chain.all_valid());
    CHECK(chain.selfadjoint_required);
    CHECK_FALSE(chain.selfadjoint);
  }
}
