#include "doctest.h"

#include "commands.hpp"
#include "specs.hpp"

#include "hmf/classifier.hpp"
#include "hmf/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace hmf;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

Run hmf_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Splits "hmf mf X --tau Y --halved" into arguments after the program name.
std::vector<std::string> words(const std::string& command) {
  std::istringstream is(command);
  std::vector<std::string> out;
  std::string w;
  is >> w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("weights and dim") {
  CHECK(hmf_run({"weights", "gl:2", "2,0"}).body()["weights"].size() == 3);
  const Run spin = hmf_run({"weights", "spin:10", "1,1,1,1,1", "--halved"});
  CHECK(spin.code == 0);
  CHECK(spin.body()["weights"].size() == 16);
  CHECK(spin.body()["weights"].contains("1,1,1,1,1"));
  const json e6 = hmf_run({"weights", "e6", "w1"}).body();
  CHECK(e6["weights"].size() == 27);
  CHECK(e6["scale"] == 6);
  CHECK(hmf_run({"dim", "sp:3", "1,1,0"}).body()["dimension"] == 14);
  CHECK(hmf_run({"dim", "e6", "w4"}).body()["dimension"] == 2925);

  const Run capped = hmf_run({"weights", "e6", "2w4"});
  CHECK(capped.code == cli::kFailure);
  CHECK(capped.err.find("1337050") != std::string::npos);
  CHECK(hmf_run({"dim", "gl:3", "0,1,0"}).code == cli::kFailure);
  const Run bad = hmf_run({"weights", "gl:3", "1,x,0"});
  CHECK(bad.code == cli::kFailure);
  CHECK(bad.err.find("position 2") != std::string::npos);
}

TEST_CASE("branch subcommands") {
  const json one_gap = hmf_run({"branch", "gl-levi", "gl:4", "2,2,0,0", "--r", "2", "--b", "2"}).body();
  CHECK(one_gap["count"] == 10);
  CHECK(one_gap["multiplicity_free"] == true);
  CHECK(hmf_run({"branch", "gl-levi", "gl:4", "2,1,0,0", "--r", "2", "--b", "2"}).body()["multiplicity_free"] == false);
  CHECK(hmf_run({"branch", "lr", "gl:4", "1,1,0,0", "--p", "2", "--q", "2"}).body()["count"] == 3);
  CHECK(hmf_run({"branch", "so", "so:7", "1,0,0"}).body()["count"] == 2);
  CHECK(hmf_run({"branch", "su2", "--m", "2", "--r", "2"}).body()["count"] == 3);
  CHECK(hmf_run({"branch", "so", "gl:3", "1,0,0"}).code == cli::kFailure);
  CHECK(hmf_run({"branch"}).code == cli::kFailure);
}

TEST_CASE("mf verdicts and exit codes") {
  const Run c3 = hmf_run({"mf", "C:3", "--tau", "ex:2"});
  CHECK(c3.code == cli::kOk);
  CHECK(c3.body()["verdict"] == true);

  const Run e7 = hmf_run({"mf", "E7", "--tau", "w1"});
  CHECK(e7.code == cli::kOk);
  CHECK(e7.body()["verdict"] == false);
  CHECK(e7.body()["witness"]["highest"] == "0,0,0,0");

  CHECK(hmf_run({"mf", "A:r=1,b=2", "--tau", "3,1,0/5"}).body()["verdict"] == true);
  CHECK(hmf_run({"mf", "D:5", "--tau", "dual-sym:3"}).body()["verdict"] == true);
  CHECK(hmf_run({"mf", "BD:6", "--tau", "ex:2+char:3"}).body()["expected"] == false);
  CHECK(hmf_run({"mf", "BDspin:7", "--tau", "1,1,1/1", "--halved"}).body()["verdict"] == true);

  const Run decomposition = hmf_run({"mf", "C:2", "--tau", "sym:2", "--decomposition"});
  CHECK(decomposition.body()["decomposition"].size() == 2);
  CHECK(decomposition.body()["witness"]["multiplicity"] == 2);

  // the D(3) list omits (2,1,0), which restricts multiplicity-free
  CHECK(hmf_run({"mf", "D:3", "--tau", "2,1,0"}).code == cli::kDisagreement);
  CHECK(hmf_run({"mf", "C:2", "--tau", "0,2"}).code == cli::kFailure);
  CHECK(hmf_run({"mf", "E6", "--tau", "ex:1"}).code == cli::kFailure);
  CHECK(hmf_run({"mf", "Q:3", "--tau", "ex:1"}).code == cli::kFailure);
  CHECK(hmf_run({"mf", "C:3"}).code == cli::kFailure);
}

TEST_CASE("classify reports and reproduction commands") {
  const Run c2 = hmf_run({"classify", "C:2", "--bound", "6"});
  CHECK(c2.code == cli::kOk);
  CHECK(c2.body()["disagreements"].empty());
  CHECK(hmf_run({"classify", "BD:6", "--bound", "4"}).body()["disagreements"].empty());

  const Run d3 = hmf_run({"classify", "D:3"});
  CHECK(d3.code == cli::kDisagreement);
  CHECK(d3.body()["bound"] == 6);
  for (const char* spec : {"D:3", "E6"}) {
    const json report = hmf_run({"classify", spec}).body();
    REQUIRE_FALSE(report["disagreements"].empty());
    for (const auto& d : report["disagreements"]) {
      const Run again = hmf_run(words(d["reproduce"].get<std::string>()));
      CAPTURE(d["reproduce"]);
      CHECK(again.code == cli::kDisagreement);
      CHECK(again.body()["verdict"] == d["verdict"]);
      CHECK(again.body()["witness"] == d["witness"]);
    }
  }

  const Run serial = hmf_run({"classify", "A:r=2,b=2", "--jobs", "1"});
  const Run parallel = hmf_run({"classify", "A:r=2,b=2", "--jobs", "4"});
  CHECK(serial.out == parallel.out);
  CHECK(serial.code == parallel.code);
}

TEST_CASE("config file and output file") {
  const std::string ini = "hmf_test_config.ini";
  const std::string out = "hmf_test_out.json";
  {
    std::ofstream f(ini);
    f << "bound-classical = 2\ncap = 2000000\njobs = 2\n";
  }
  const Run r = hmf_run({"--config", ini, "--out", out, "classify", "C:3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  std::ifstream f(out);
  const json body = json::parse(f);
  CHECK(body["bound"] == 2);
  CHECK(hmf_run({"--config", ini, "mf", "E7", "--tau", "2w4"}).code == cli::kOk);
  std::remove(ini.c_str());
  std::remove(out.c_str());
}

TEST_CASE("weyl-orbit and rho-a") {
  CHECK(hmf_run({"weyl-orbit", "--rank", "2", "--nu", "1,0"}).body()["size"] == 4);
  CHECK(hmf_run({"weyl-orbit", "--rank", "3", "--count-group"}).body()["group_order"] == 48);
  CHECK(hmf_run({"weyl-orbit", "--rank", "1", "--nu", "0"}).body()["size"] == 1);
  const json sym = hmf_run({"weyl-orbit", "--rank", "2", "--nu", "x1,1/2", "--sigma", "1,0"}).body();
  CHECK(sym["size"] == 8);
  CHECK(hmf_run({"weyl-orbit", "--rank", "2", "--nu", "x1,1/2", "--sigma", "1,0", "--pair", "D:4"}).code ==
        cli::kFailure);
  CHECK(hmf_run({"weyl-orbit", "--rank", "9", "--count-group"}).code == cli::kFailure);

  const json e7 = hmf_run({"rho-a", "E7"}).body();
  CHECK(e7["dim_p"] == 54);
  CHECK(e7["restricted_type"] == "C");
  CHECK(e7["rho_a"] == json::array({"17", "9", "1"}));
}

TEST_CASE("property: tau specs read back to the same weight") {
  for (const char* spec :
       {"A:r=2,b=1", "A:r=1,b=2", "C:3", "Cmp:2", "D:4", "D:5", "BD:5", "BD:6", "BDspin:5", "BDspin:6", "E6", "E7"}) {
    const HermitianPair p = HermitianPair::parse(spec);
    const int bound = p.family == Family::E6 || p.family == Family::E7 ? 2 : 4;
    for (const auto& tau : enumerate_dominant(p, bound)) {
      const cli::TauSpec text = cli::tau_spec(p, tau);
      CAPTURE(text.text);
      CHECK(cli::parse_tau(p, text.text, text.halved) == tau);
    }
  }
}
