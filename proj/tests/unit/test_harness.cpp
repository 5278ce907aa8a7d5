#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "adelic/core/errors.hpp"
#include "adelic/ffbundles/bundles.hpp"
#include "adelic/harness/cli.hpp"
#include "adelic/harness/generate.hpp"

using namespace adelic;
using adelic::io::json;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "adelic");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = harness::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() {
    static int counter = 0;
    dir_ = fs::temp_directory_path() / ("adelic_harness_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(dir_);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

const char* kStd2 = R"({"schema":"v1","type":"euclidean","dim":2,"gram":[["1","0"],["0","1"]]})";
const char* kConstRoof =
    R"({"type":"roof","pieces":[{"gradient":["0","0"],"offset":"3/2"}]})";

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("json codecs round trip") {
    const Rational r = make_rational(-22, 7);
    CHECK(io::rational_from_json(io::to_json(r)) == r);
    CHECK(io::rational_from_json(json(12)) == 12);
    CHECK_THROWS_AS(io::rational_from_json(json(1.5)), ValidationError);
    CHECK_THROWS_AS(io::rational_from_json(json("1/0")), ValidationError);
    const auto v = exactlog::LogValue::of_rational(make_rational(12, 5));
    CHECK(io::log_from_json(io::to_json(v)) == v);
    const exactlog::Quantity qv(make_rational(1, 3), v);
    CHECK(io::quantity_from_json(io::to_json(qv)) == qv);
    const lattices::EuclideanLattice e = io::lattice_from_json(io::parse_json(kStd2));
    CHECK(io::lattice_from_json(io::to_json(e)).gram() == e.gram());
    CHECK_THROWS_AS(io::lattice_from_json(io::parse_json(R"({"dim":3,"gram":[["1"]]})")), ValidationError);
    CHECK_THROWS_AS(io::lattice_from_json(io::parse_json(R"({"gram":[["1","2"],["2","1"]]})")), ValidationError);
    const ffbundles::SplittingType s({3, -1});
    CHECK(io::splitting_from_json(io::to_json(s)).degrees() == s.degrees());
    const auto md = io::divisor_from_json(io::parse_json(
        R"j({"type":"matrix_divisor","field":"GF(7)","matrix":[["T^2","0"],["0","1"]]})j"));
    CHECK(ffbundles::reduce_to_splitting(md).degrees() == std::vector<long>{0, -2});
    const auto g = io::roof_from_json(io::parse_json(kConstRoof));
    CHECK(g.dim() == 2);
    const auto g2 = io::roof_from_json(io::to_json(g));
    CHECK(g2.evaluate({Rational(0), Rational(0)}) == exactlog::Quantity(make_rational(3, 2)));
    CHECK_THROWS_AS(io::check_schema(io::parse_json(R"({"schema":"v2"})")), ValidationError);
    CHECK_NOTHROW(io::check_schema(io::parse_json("{}")));
    CHECK_THROWS_AS(io::parse_json("{not json"), ValidationError);
    CHECK(io::input_kind(io::parse_json(R"({"gram":[]})")) == "euclidean");
    CHECK(io::input_kind(io::parse_json(R"({"degrees":[]})")) == "splitting");
  }

  TEST_CASE("sha256") {
    CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }

  TEST_CASE("generators are deterministic") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      for (const char* kind : {"random-gram", "random-splitting", "random-roof"}) {
        harness::GenerateParams p;
        p.kind = kind;
        p.seed = seed;
        p.dim = 1 + seed % 3;
        CHECK(harness::generate(p).dump() == harness::generate(p).dump());
      }
    }
  }

  TEST_CASE("generated objects decode and carry consistent metadata") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      harness::GenerateParams p;
      p.seed = seed;
      p.dim = 1 + seed % 4;
      p.kind = "random-gram";
      const json gram = harness::generate(p);
      CHECK(io::lattice_from_json(gram).dim() == p.dim);
      p.kind = "random-splitting";
      const json split = harness::generate(p);
      const auto s = io::splitting_from_json(split);
      CHECK(split["metadata"]["total_degree"].get<long>() == s.total_degree());
      CHECK(ffbundles::wedge_ff(s, s.rank()).total_degree() == s.total_degree());
      p.kind = "random-roof";
      p.dim = 1 + seed % 3;
      CHECK(io::roof_from_json(harness::generate(p)).dim() == p.dim);
    }
    harness::GenerateParams bad;
    bad.kind = "random-nothing";
    CHECK_THROWS_AS(harness::generate(bad), ValidationError);
  }

  TEST_CASE("exit codes") {
    Scratch s;
    const std::string std2 = s.file("std2.json", kStd2);
    CHECK(invoke({"slopes", "--in", std2}).code == harness::kOk);
    CHECK(invoke({"bogus-command"}).code == harness::kValidation);
    CHECK(invoke({"slopes", "--in", s.path("missing.json")}).code == harness::kValidation);
    CHECK(invoke({"slopes", "--in", s.file("bad.json", "{\"gram\": [[\"1\", \"2\"], [\"2\", \"1\"]]}")}).code ==
          harness::kValidation);
    CHECK(invoke({"okounkov-body", "--in", std2}).code == harness::kValidation);
    CHECK(invoke({"slopes", "--in", s.file("v2.json", R"({"schema":"v2","gram":[["1"]]})")}).code ==
          harness::kValidation);
    const Invocation trunc = invoke({"sym-sequence", "--in", std2, "--max-n", "8", "--cap", "4"});
    CHECK(trunc.code == harness::kResource);
    const json partial = json::parse(trunc.out);
    CHECK(partial["status"] == "resource_limit");
    CHECK(partial["entries"].size() == 6);
    CHECK(invoke({"slopes", "--in", std2, "--out", s.path("no/such/dir/out.json")}).code == harness::kInternal);
    CHECK(invoke({"--version"}).code == harness::kOk);
  }

  TEST_CASE("reports reproduce byte for byte") {
    Scratch s;
    const std::string std2 = s.file("std2.json", kStd2);
    for (const char* cmd : {"invariants", "minima", "slopes", "hn-polygon", "sym-sequence", "defects", "transference"}) {
      const Invocation a = invoke({cmd, "--in", std2, "--max-n", "4"});
      const Invocation b = invoke({cmd, "--in", std2, "--max-n", "4"});
      CHECK_MESSAGE(a.code == harness::kOk, cmd);
      CHECK(a.out == b.out);
      const json rep = json::parse(a.out);
      CHECK(rep["schema"] == "v1");
      CHECK(rep["provenance"]["input_sha256"] == io::sha256_hex(kStd2));
    }
  }

  TEST_CASE("sym-sequence report values") {
    Scratch s;
    const Invocation r = invoke({"sym-sequence", "--in", s.file("std2.json", kStd2), "--max-n", "2"});
    REQUIRE(r.code == harness::kOk);
    const json rep = json::parse(r.out);
    const json& e = rep["entries"][2];
    CHECK(e["name"] == "pmax_over_n");
    CHECK(e["n"] == 2);
    CHECK(e["exact"] == json{{"2", "1/4"}});
    CHECK(e["float"].get<double>() == doctest::Approx(0.17328679513998632).epsilon(1e-15));
  }

  TEST_CASE("csv output writes a json companion") {
    Scratch s;
    const std::string std2 = s.file("std2.json", kStd2);
    const std::string out = s.path("report.csv");
    REQUIRE(invoke({"hn-polygon", "--in", std2, "--format", "csv", "--out", out}).code == harness::kOk);
    const std::string csv = io::read_file(out);
    CHECK(csv.rfind("name,n,value,certified,exact\n", 0) == 0);
    CHECK(fs::exists(out + ".json"));
    CHECK_FALSE(fs::exists(out + ".tmp"));
    const json rep = io::parse_json(io::read_file(out + ".json"));
    CHECK(rep["command"] == "hn-polygon");
    REQUIRE(invoke({"hn-polygon", "--in", std2, "--format", "md", "--out", s.path("r.md")}).code == harness::kOk);
    CHECK(io::read_file(s.path("r.md")).find('|') != std::string::npos);
  }

  TEST_CASE("zhang-check and okounkov-body commands") {
    Scratch s;
    const Invocation z = invoke({"zhang-check", "--roof", s.file("roof.json", kConstRoof)});
    REQUIRE(z.code == harness::kOk);
    const json rep = json::parse(z.out);
    bool saw_equality = false;
    for (const auto& e : rep["entries"]) {
      if (e["name"] == "equality") saw_equality = e["exact"].get<bool>();
      if (e["name"] == "height") CHECK(e["exact"]["constant"] == "9/2");
      if (e["name"] == "bound") CHECK(e["exact"]["constant"] == "3/2");
    }
    CHECK(saw_equality);
    const Invocation b = invoke(
        {"okounkov-body", "--in", s.file("p2.json", R"({"type":"series","dim":2,"levels":{"1":[[0,0],[1,0],[0,1]]}})")});
    REQUIRE(b.code == harness::kOk);
    const json body = json::parse(b.out);
    CHECK(body["entries"][3]["name"] == "normalized_volume");
    CHECK(body["entries"][3]["exact"] == "1");
  }

  TEST_CASE("ff commands") {
    Scratch s;
    const std::string split = s.file("s.json", R"({"type":"splitting","degrees":[2,-1,0]})");
    const Invocation r = invoke({"invariants", "--in", split});
    REQUIRE(r.code == harness::kOk);
    const json rep = json::parse(r.out);
    CHECK(rep["entries"][1]["exact"] == "1");
    const std::string div = s.file(
        "d.json", R"j({"type":"matrix_divisor","field":"GF(7)","matrix":[["T^2","0"],["0","1"]]})j");
    const Invocation f = invoke({"ff-reduce", "--in", div});
    REQUIRE(f.code == harness::kOk);
    CHECK(json::parse(f.out)["entries"][1]["exact"] == json({0, -2}));
    CHECK(invoke({"ff-reduce", "--in", split}).code == harness::kValidation);
  }
}
