#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dacosta/cli.hpp"
#include "dacosta/corpus.hpp"

using namespace dacosta;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string proof(const std::string& file) { return default_corpus_dir() + "/" + file; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("documented examples") {
    const Run check = run({"check", proof("nefq.prf")});
    CHECK(check.status == kExitOk);
    CHECK(check.out == "accepted\n");

    const Run ent = run({"entails", "--model", "builtin:B2_TRIV", "A, ~A", "B"});
    CHECK(ent.status == kExitNegative);
    CHECK(ent.out == "NOT entailed; witness A=1,B=0\n");

    const Run val = run({"valid", "--model", "builtin:B2_TRIV", "(A & ~A) -> ~B"});
    CHECK(val.status == kExitOk);
    CHECK(val.out == "valid\n");
  }

  TEST_CASE("exit status matrix") {
    struct Case {
      std::vector<std::string> args;
      int status;
    };
    const std::vector<Case> cases = {
        {{"parse", "p -> q"}, kExitOk},
        {{"parse", "p ->"}, kExitUsage},
        {{"parse", "--schema", "A -> B"}, kExitOk},
        {{"axioms", "--system", "mZn", "--n", "2"}, kExitOk},
        {{"axioms", "--system", "Foo"}, kExitUsage},
        {{"axioms", "--system", "mZn", "--n", "0"}, kExitUsage},
        {{"check", proof("nefq.prf")}, kExitOk},
        {{"check", proof("red12_1.prf")}, kExitNegative},
        {{"check", "/nonexistent.prf"}, kExitUsage},
        {{"valid", "--model", "builtin:B2_TRIV", "A & ~A -> B"}, kExitNegative},
        {{"valid", "--model", "builtin:B2_CLASSICAL", "A & ~A -> B"}, kExitOk},
        {{"valid", "--model", "builtin:NOPE", "A"}, kExitUsage},
        {{"valid", "--model", "builtin:B2_TRIV"}, kExitUsage},
        {{"entails", "--model", "builtin:B2_TRIV", "A, A -> B", "B"}, kExitOk},
        {{"classify", "--model", "builtin:CHAIN3"}, kExitOk},
        {{"adjoint", "--model", "builtin:CHAIN3"}, kExitOk},
        {{"frame", "--frame", "builtin:FRAME_FULL_R"}, kExitOk},
        {{"frame", "--frame", "builtin:CHAIN3"}, kExitUsage},
        {{"search", "--system", "INT", "--target", "A | ~A"}, kExitOk},
        {{"search", "--system", "CPL", "--target", "A | ~A", "--max-lattice", "4"}, kExitNegative},
        {{"search", "--system", "mZn", "--target", "A", "--max-lattice", "99"}, kExitUsage},
        {{"emit", "B2_TRIV"}, kExitOk},
        {{"emit", "NOPE"}, kExitUsage},
        {{"accept", "--criterion", "2"}, kExitOk},
        {{"accept", "--criterion", "9"}, kExitUsage},
        {{}, kExitUsage},
        {{"bogus"}, kExitUsage},
        {{"--format", "json", "parse", "p"}, kExitUsage},
    };
    for (const auto& c : cases) {
      std::string joined;
      for (const auto& a : c.args) joined += a + " ";
      const Run r = run(c.args);
      CHECK_MESSAGE(r.status == c.status, joined << "\n" << r.out << r.err);
      if (c.status == kExitUsage) {
        CHECK_MESSAGE(!r.err.empty(), joined);
        CHECK(r.err.back() == '\n');
      }
    }
  }

  TEST_CASE("usage errors are one line") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"parse", "p ->"}, {"axioms", "--system", "Foo"}, {"emit", "NOPE"}, {"check", "/nonexistent.prf"}}) {
      const Run r = run(args);
      CHECK(r.status == kExitUsage);
      CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
  }

  TEST_CASE("records are deterministic and tab separated") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--format", "records", "corpus"},
             {"--format", "records", "classify", "--model", "builtin:CHAIN3"},
             {"--format", "records", "search", "--system", "INT", "--target", "A | ~A"},
             {"--format", "records", "frame", "--frame", "builtin:FRAME_FULL_R"},
             {"--format", "records", "axioms", "--system", "CZn"}}) {
      const Run a = run(args);
      const Run b = run(args);
      CHECK(a.out == b.out);
      CHECK(a.status == b.status);
      std::istringstream lines(a.out);
      std::string line;
      while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, '\t')) CHECK_MESSAGE(field.find('=') != std::string::npos, line);
      }
    }
  }

  TEST_CASE("record contents") {
    CHECK(run({"--format", "records", "check", proof("nefq.prf")}).out ==
          "theorem=NEFQ\tsystem=mZnAnti\tverdict=accepted\tfailures=0\n");
    const Run corpus = run({"--format", "records", "corpus"});
    CHECK(corpus.out.find("theorem=RED12_1\tsystem=mZnSplit\tverdict=rejected") != std::string::npos);
    CHECK(std::count(corpus.out.begin(), corpus.out.end(), '\n') >= 36);
    CHECK(run({"--format", "records", "valid", "--model", "builtin:B2_TRIV", "A & ~A -> B"}).out ==
          "formula=A & ~A -> B\tverdict=NOT valid\twitness=A=1,B=0\n");
  }

  TEST_CASE("parse output") {
    CHECK(run({"parse", "p^o"}).out == "~(p & ~p)\nNeg(And(p, Neg(p)))\n");
    CHECK(run({"parse", "p ->"}).err.find("offset") != std::string::npos);
  }

  TEST_CASE("emit and frame conversion") {
    CHECK(run({"emit", "B2_TRIV"}).out == "elements: 0 1\norder: 0<1\nneg: 0->1 1->1\n");
    CHECK(run({"frame", "--frame", "builtin:FRAME_FULL_R", "--to-model"}).out ==
          "elements: {} {a} {b} {a,b}\norder: {}<{a} {}<{b} {a}<{a,b} {b}<{a,b}\n"
          "neg: {}->{a,b} {a}->{a,b} {b}->{a,b} {a,b}->{a,b}\n");
    const Run zn = run({"frame", "--frame", "builtin:FRAME_FULL_R", "--system", "Zn"});
    CHECK(zn.status == kExitNegative);
  }

  TEST_CASE("model files on the command line") {
    const auto path = std::filesystem::temp_directory_path() / "dacosta_cli_model.txt";
    std::ofstream(path) << "elements: 0 m 1\norder: 0<m m<1\nneg: 0->1 m->0 1->0\n";
    CHECK(run({"valid", "--model", path.string(), "~~A | ~A"}).status == kExitOk);
    CHECK(run({"valid", "--model", path.string(), "A | ~A"}).status == kExitNegative);
    std::ofstream(path) << "elements: 0 m 1\nneg: 0->1\n";
    CHECK(run({"valid", "--model", path.string(), "A"}).status == kExitUsage);
    std::filesystem::remove(path);
  }

  TEST_CASE("a corrupted corpus file fails the corpus criterion") {
    const auto dir = std::filesystem::temp_directory_path() / "dacosta_cli_corrupt";
    std::filesystem::remove_all(dir);
    emit_corpus(dir.string());
    std::ofstream(dir / "t2.prf") << "system IPCplus\ntheorem T2: (A -> B) -> (B -> C) -> A -> C\n1. A | axiom 1\n";
    const Run r = run({"accept", "--criterion", "1", "--corpus", dir.string()});
    CHECK(r.status == kExitNegative);
    CHECK(r.out.rfind("FAIL  criterion 1", 0) == 0);
    CHECK(r.out.find("T2") != std::string::npos);
    const Run c = run({"corpus", "--corpus", dir.string()});
    CHECK(c.status == kExitNegative);
    std::filesystem::remove_all(dir);
  }
}
