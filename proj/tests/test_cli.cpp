#include <doctest.h>

#include <sstream>

#include "syncswitch/cli.hpp"
#include "syncswitch/families.hpp"

using namespace syncswitch;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen piped into the engines") {
  const Outcome gen = run({"gen", "cerny", "4"});
  REQUIRE(gen.code == 0);
  CHECK(gen.out == serialize_dfa(cerny(4)));
  CHECK(run({"sw"}, gen.out).out == "5\n");
  CHECK(run({"ssl", "-"}, gen.out).out == "9\n");
  CHECK(run({"sw"}, run({"gen", "a", "9"}).out).out == "41\n");
  CHECK(run({"count"}, run({"gen", "fixture", "t7"}).out).out == "3\n");
}

TEST_CASE("every family and fixture round-trips through gen") {
  for (auto name : family_names()) {
    const Outcome o = run({"gen", std::string(name), "6"});
    CHECK(o.code == 0);
    CHECK(parse_dfa(o.out) == generate(name, 6));
  }
  for (const auto& f : fixture_catalog()) {
    CHECK(parse_dfa(run({"gen", "fixture", std::string(f.name)}).out) == fixture(f.name));
  }
  CHECK(parse_dfa(run({"gen", "cyclic-counterexample"}).out) == cyclic_counterexample());
}

TEST_CASE("optimal words") {
  const std::string t8a = serialize_dfa(fixture("t8a"));
  const Outcome len = run({"opt"}, t8a);
  CHECK(len.code == 0);
  CHECK(len.out.find("len=42 sw=33") != std::string::npos);
  const Outcome stl = run({"opt", "--objective", "switch-then-length"}, t8a);
  CHECK(stl.out.find("len=43 sw=31") != std::string::npos);
  CHECK(stl.err.rfind("display: ", 0) == 0);
  CHECK(run({"opt"}, serialize_dfa(cerny(4))).out == "word=baaabaaab len=9 sw=5\n");
  CHECK(run({"count", "--objective", "switch"}, t8a).code == 2);
}

TEST_CASE("closure and transforms") {
  const std::string c4 = serialize_dfa(cerny(4));
  const Outcome closure = run({"closure"}, c4);
  CHECK(closure.out.rfind("4 4\n", 0) == 0);
  CHECK(closure.out.find("# s3 = a^3") != std::string::npos);
  CHECK(run({"sw"}, run({"transform", "f"}, c4).out).out == "18\n");
  CHECK(run({"transform", "f2"}, c4).out.rfind("12 2\n", 0) == 0);
  const Outcome mismatch = run({"transform", "f2"}, serialize_dfa(cyclic_counterexample()));
  CHECK(mismatch.code == 1);
  CHECK(mismatch.err.find("error:") == 0);
}

TEST_CASE("exit codes") {
  const Outcome non_sync = run({"sw"}, "2 1\n0\n1\n");
  CHECK(non_sync.code == 1);
  CHECK(non_sync.err.find("not synchronizing") != std::string::npos);
  CHECK(run({"sw"}, "2 1\n0\n").code == 2);
  CHECK(run({"sw"}, "banana").code == 2);
  CHECK(run({"gen", "nope", "4"}).code == 2);
  CHECK(run({"gen", "cerny", "four"}).code == 2);
  CHECK(run({"gen", "q", "7"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"sw", "/nonexistent/file"}).code == 2);
  CHECK(run({"search", "--n", "6"}).code == 1);
}

TEST_CASE("search and lemma commands") {
  const Outcome s = run({"search", "--n", "3"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("SEARCH n=3 k=2 scanned=729 max=3", 0) == 0);
  CHECK(s.err.find("SHARD") != std::string::npos);
  CHECK(run({"search", "--n", "3", "--jobs", "2"}).out == s.out);
  CHECK(run({"cyclic-search", "--n", "5", "--k", "2"}).out.find("max=7") != std::string::npos);
  const Outcome lemmas = run({"verify-lemmas", "--n", "6"});
  CHECK(lemmas.code == 0);
  CHECK(lemmas.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify-lemmas", "--n", "7"}).code == 2);
}
