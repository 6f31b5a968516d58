#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "dacosta/model_io.hpp"

using namespace dacosta;

namespace {

std::string temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_SUITE("model_io") {
  TEST_CASE("parsing a model file") {
    const NegationModel m = parse_model(
        "# three chain\n"
        "elements: 0 m 1\n"
        "order: 0<m\n"
        "order: m<1   # repeated keys accumulate\n"
        "neg: 0->1 m->1\n"
        "neg: 1->m\n");
    CHECK(m.size() == 3);
    const FiniteLattice& l = m.lattice();
    CHECK(l.leq(l.find("0"), l.find("1")));
    CHECK(m.neg[static_cast<std::size_t>(l.find("1"))] == l.find("m"));
    CHECK(classify_negation(m).cls == NegationClass::Constructive);
  }

  TEST_CASE("model format errors") {
    CHECK_THROWS_AS(parse_model("elements: 0 1\norder: 0<1\nneg: 0->1\n"), ModelFormatError);
    CHECK_THROWS_AS(parse_model("elements: 0 1\norder: 0<2\nneg: 0->1 1->0\n"), ModelFormatError);
    CHECK_THROWS_AS(parse_model("elements: 0 1\norder: 0-1\nneg: 0->1 1->0\n"), ModelFormatError);
    CHECK_THROWS_AS(parse_model("elements: 0 1\ncolour: red\n"), ModelFormatError);
    CHECK_THROWS_AS(parse_model("elements: 0 1\norder: 0<1\nneg: 0->1 0->0 1->0\n"), ModelFormatError);
    CHECK_THROWS_AS(parse_model("elements: a b c\norder: a<b\nneg: a->a b->b c->c\n"), NotALattice);
  }

  TEST_CASE("canonical model text round trips") {
    for (const auto& name : builtin_names()) {
      const NegationModel m = builtin_model(name);
      const std::string text = write_model(m);
      const NegationModel back = parse_model(text);
      CHECK(write_model(back) == text);
      CHECK(back.neg == m.neg);
      CHECK(back.lattice().names() == m.lattice().names());
    }
    CHECK(write_model(builtin_model("B2_TRIV")) == "elements: 0 1\norder: 0<1\nneg: 0->1 1->1\n");
  }

  TEST_CASE("builtins") {
    CHECK(builtin_names() == std::vector<std::string>{"B2_TRIV", "B2_CLASSICAL", "CHAIN3", "FRAME_FULL_R"});
    CHECK(is_builtin_frame("FRAME_FULL_R"));
    CHECK_FALSE(is_builtin_frame("CHAIN3"));
    CHECK(classify_negation(builtin_model("B2_CLASSICAL")).cls == NegationClass::DeMorgan);
    CHECK(classify_negation(builtin_model("B2_TRIV")).cls == NegationClass::Constructive);
    CHECK(builtin_model("FRAME_FULL_R").size() == 4);
    CHECK(emit_builtin("B2_CLASSICAL") == "elements: 0 1\norder: 0<1\nneg: 0->1 1->0\n");
    CHECK(emit_builtin("FRAME_FULL_R").find("R: (a,a) (a,b) (b,a) (b,b)") != std::string::npos);
    CHECK_THROWS_AS(builtin_model("B3"), UnknownBuiltin);
    CHECK_THROWS_AS(builtin_frame("CHAIN3"), UnknownBuiltin);
    CHECK_THROWS_AS(emit_builtin("nope"), UnknownBuiltin);
  }

  TEST_CASE("frame files") {
    const std::string text = "worlds: a b\norder: a<b\nR: (a,b) (b,b)\n";
    CHECK(looks_like_frame(text));
    CHECK_FALSE(looks_like_frame("elements: 0 1\n"));
    const FrameSpec spec = parse_frame_spec(text);
    CHECK(spec.worlds == std::vector<std::string>{"a", "b"});
    CHECK(spec.relation.size() == 2);
    const PolarityFrame f = parse_frame(text);
    CHECK(write_frame(f) == text);
    CHECK(write_frame(parse_frame(write_frame(builtin_frame("FRAME_FULL_R")))) == write_frame(builtin_frame("FRAME_FULL_R")));
    CHECK_THROWS_AS(parse_frame("worlds: a b\norder: a<b\nR: (a,a)\n"), NotHereditary);
    CHECK_THROWS_AS(parse_frame("worlds: a b\nR: (a b)\n"), ModelFormatError);
    CHECK_THROWS_AS(parse_frame("worlds: a b\norder: a<b b<a\nR:\n"), NotAPoset);
  }

  TEST_CASE("loading from files and builtins") {
    const std::string model_path = temp_file("dacosta_io_model.txt", write_model(builtin_model("CHAIN3")));
    CHECK(load_model(model_path).neg == builtin_model("CHAIN3").neg);
    const std::string frame_path = temp_file("dacosta_io_frame.txt", "worlds: a b\norder: a<b\nR: (a,b) (b,b)\n");
    const NegationModel induced = load_model(frame_path);
    CHECK(induced.lattice().names() == std::vector<std::string>{"{}", "{b}", "{a,b}"});
    CHECK(load_frame(frame_path).size() == 2);
    CHECK(load_model("builtin:B2_TRIV").neg == builtin_model("B2_TRIV").neg);
    CHECK(load_frame("builtin:FRAME_FULL_R").size() == 2);
    CHECK_THROWS_AS(load_model("/nonexistent/model.txt"), ModelFormatError);
    CHECK_THROWS_AS(read_text_file("/nonexistent/model.txt"), ModelFormatError);
    CHECK_THROWS_AS(load_model("builtin:NOPE"), UnknownBuiltin);
    std::filesystem::remove(model_path);
    std::filesystem::remove(frame_path);
  }
}
