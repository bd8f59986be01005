#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "frobq/cli.hpp"
#include "frobq/json_io.hpp"

namespace fs = std::filesystem;
using frobq::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FROBQ_DATA_DIR) + "/" + name; }

class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() / ("frobq-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("dimensions of the bundled documents") {
  CHECK(call({"dim", data("diamond22.qv")}).out == "1\n");
  CHECK(call({"dim", data("canonical_235.qv")}).out == "0\n");
  const Result r = call({"dim", data("case4.qv")});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
  const auto j = frobq::Json::parse(call({"dim", data("case4.qv"), "--json"}).out);
  CHECK(j.at("schema") == "frobq/1");
  CHECK(j.at("frobenius_dimension") == 4);
  CHECK(j.at("algebra_dimension") == 9);
}

TEST_CASE("exit codes") {
  Scratch s;
  CHECK(call({"dim", s.path("missing.qv")}).code == 1);
  CHECK(call({"dim", s.write("bad.qv", "vertex 1 2\narrow a 1 -> 2\n")}).code == 1);
  CHECK(call({"dim", s.write("inadmissible.qv", "vertex 1 2\narrow a : 1 -> 2\nrelation a ;\n")})
            .code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"dim", s.write("loops.qv",
                             "vertex p\narrow x : p -> p\narrow y : p -> p\n"
                             "relation x*x ;\nrelation y*y ;\nrelation x*y - y*x ;\n")})
            .code == 2);
  const Result inf = call({"dim", s.write("cycle.qv", "vertex 1 2\narrow a : 1 -> 2\narrow b : 2 -> 1\n")});
  CHECK(inf.code == 3);
  CHECK_FALSE(inf.err.empty());
}

TEST_CASE("verify accepts solutions and rejects perturbations") {
  Scratch s;
  const Result space = call({"space", data("diamond22.qv"), "--json"});
  REQUIRE(space.code == 0);
  const std::string good = s.write("space.json", space.out);
  const Result ok = call({"verify", data("diamond22.qv"), "--coproduct", good});
  CHECK(ok.code == 0);
  CHECK(ok.out == "VERIFIED\n");

  auto j = frobq::Json::parse(space.out);
  auto& first = j["basis"][0]["coproduct"];
  for (auto& entry : first) {
    if (entry["vertex"] == "w") entry["terms"][0]["coeff"] = "2/1";
  }
  const Result bad = call({"verify", data("diamond22.qv"), "--coproduct", s.write("bad.json", j.dump())});
  CHECK(bad.code == 4);
  CHECK(bad.out.rfind("NOT VERIFIED\n", 0) == 0);

  CHECK(call({"verify", data("diamond22.qv"), "--coproduct", s.write("junk.json", "{")}).code == 1);
}

TEST_CASE("json output is deterministic") {
  for (const char* cmd : {"basis", "dim", "space", "classify", "patterns"}) {
    for (const char* file : {"diamond22.qv", "case4.qv", "canonical_235.qv"}) {
      const Result a = call({cmd, data(file), "--json"});
      const Result b = call({cmd, data(file), "--json"});
      CHECK(a.code == b.code);
      CHECK(a.out == b.out);
      CHECK(frobq::Json::parse(a.out).at("schema") == "frobq/1");
    }
  }
}

TEST_CASE("field override") {
  const Result q = call({"dim", data("case4.qv"), "--field", "F7"});
  CHECK(q.out == "4\n");
  const auto j = frobq::Json::parse(call({"basis", data("case4.qv"), "--field", "F7", "--json"}).out);
  CHECK(j.at("field") == "F7");
  CHECK(call({"dim", data("case4.qv"), "--field", "F8"}).code == 1);
}

TEST_CASE("gen writes documents that parse") {
  Scratch s;
  const std::vector<std::vector<std::string>> families = {
      {"linear", "4", "--rel", "1:3"},
      {"cycle", "3", "2"},
      {"canonical", "2,3,5", "--lambda", "1"},
      {"toupie", "2,3", "--mono", "1:1:2"},
      {"toupie", "2,2", "--lin", "1,-2"},
      {"diamond", "3", "2"},
      {"gdiamond", "2,2,3"},
      {"random", "42", "5", "7", "rsz"},
      {"string-case", "3"},
  };
  for (auto args : families) {
    args.insert(args.begin(), "gen");
    const Result g = call(args);
    REQUIRE(g.code == 0);
    args.push_back("-o");
    args.push_back(s.path("doc.qv"));
    REQUIRE(call(args).code == 0);
    std::ifstream in(s.path("doc.qv"));
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == g.out);
    CHECK(call({"basis", s.path("doc.qv")}).code == 0);
  }
  CHECK(call({"gen", "random", "42", "5", "7", "rsz"}).out ==
        call({"gen", "random", "42", "5", "7", "rsz"}).out);
  CHECK(call({"gen", "rsz", data("case4.qv")}).code == 0);
  CHECK(call({"gen", "linear", "3", "--rel", "3:2"}).code == 1);
  CHECK(call({"gen", "canonical", "2,2,2", "--lambda", "0"}).code == 1);
  CHECK(call({"gen", "string-case", "5"}).code == 1);
  CHECK(call({"gen", "random", "1", "4", "6", "gentle"}).code == 1);
}

TEST_CASE("classify and patterns") {
  const Result c = call({"classify", data("canonical_235.qv")});
  CHECK(c.code == 0);
  CHECK(c.out.find("M_ZERO_OTHER") != std::string::npos);
  const Result p = call({"patterns", data("case4.qv")});
  CHECK(p.code == 0);
  CHECK(p.out.find("pattern 4 at 3") != std::string::npos);
  CHECK(p.out.find("VERIFIED") != std::string::npos);
}
