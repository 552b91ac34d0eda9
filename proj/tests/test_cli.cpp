#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "segre/cli.hpp"

using namespace segre;

namespace {

const std::string kInputs = SEGRE_INPUT_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("worked examples through the command line") {
  CHECK(run({"segre", kInputs + "/cone.txt", "--x", "X", "--y", "Y"}).out == "1 [P^1]\n");
  CHECK(run({"csm", kInputs + "/cone.txt", "--z", "Y"}).out == "2 [P^2] + 4 [P^1] + 3 [P^0]\n");
  CHECK(run({"mather", kInputs + "/cone.txt", "--z", "Y"}).out == "2 [P^2] + 4 [P^1] + 2 [P^0]\n");
  CHECK(run({"eddegree", kInputs + "/cayley.txt", "--z", "C"}).out == "13\n");
  CHECK(run({"polar", kInputs + "/cayley.txt", "--z", "C"}).out == "(3, 6, 4)\n");
  CHECK(run({"intersect", kInputs + "/grassmannian.txt", "--x", "S21", "--v", "S1", "--y", "G", "--normal", "1,1,1,1/2"}).out ==
        "1 [P^0]\n");
  CHECK(run({"tau", kInputs + "/det3.txt", "--size", "3", "--corank", "1", "--center", "S331"}).out ==
        "segre: 2 [P^1] - 11 [P^0]\ndegree: 0\n");
  // Y defaults to P^N
  CHECK(run({"segre", kInputs + "/cone.txt", "--x", "X"}).out == "1 [P^1] - 2 [P^0]\n");
}

TEST_CASE("json output") {
  const Run r = run({"segre", kInputs + "/cone.txt", "--x", "X", "--y", "Y", "--json", "--seed", "42"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["class"].size() == 4);
  CHECK(j["class"][1]["dim"] == 1);
  CHECK(j["class"][1]["coeff"] == 1);
  CHECK(j["deltas"] == nlohmann::json::array({2, 1}));
  CHECK(j["seeds"].size() == 2);
  CHECK(j["prime"].get<std::uint64_t>() > (1u << 30));
  CHECK(r.out.find("{\"class\":[{\"dim\":0,\"coeff\":0}") == 0);

  // byte-reproducible
  CHECK(run({"segre", kInputs + "/cone.txt", "--x", "X", "--y", "Y", "--json", "--seed", "42"}).out == r.out);
  const Run other = run({"segre", kInputs + "/cone.txt", "--x", "X", "--y", "Y", "--json", "--seed", "43"});
  CHECK(other.out != r.out);

  const Run fixed = run({"segre", kInputs + "/cone.txt", "--x", "X", "--y", "Y", "--json", "--prime", "1048583", "--paranoid"});
  CHECK(nlohmann::json::parse(fixed.out)["prime"] == 1048583);
  const Run retries = run({"csm", kInputs + "/cone.txt", "--z", "Y", "--json", "--retries", "2"});
  CHECK(nlohmann::json::parse(retries.out)["class"][0]["coeff"] == 3);
}

TEST_CASE("input errors exit with 1") {
  const Run missing = run({"segre", kInputs + "/cone.txt", "--x", "Q"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("no ideal named 'Q'") != std::string::npos);

  CHECK(run({"segre", "/nonexistent/file.txt", "--x", "X"}).code == 1);
  CHECK(run({"segre", kInputs + "/cone.txt", "--x", "Y", "--y", "Y"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"segre", kInputs + "/cone.txt"}).code == 1);
  CHECK(run({"segre", kInputs + "/cone.txt", "--x", "X", "--prime", "1000004"}).code == 1);
  CHECK(run({"csm", kInputs + "/cone.txt", "--z", "X"}).code == 1);
  CHECK(run({"intersect", kInputs + "/grassmannian.txt", "--x", "S21", "--v", "S1", "--y", "G", "--normal", "1,a/2"}).code == 1);
  CHECK(run({"tau", kInputs + "/cone.txt", "--size", "3", "--corank", "1", "--center", "X"}).code == 1);

  const Run bad = run({"segre", temp_file("segre_bad_input.txt", "ring x, y\nideal I = x + 1\n"), "--x", "I"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2, column 11") != std::string::npos);
  CHECK(run({"segre", temp_file("segre_bad_var.txt", "ring x\nideal I = y\n"), "--x", "I"}).code == 1);

  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("retry option") {
  const std::string f = temp_file("segre_retry.txt", "ring x, y, z\nideal X = x^2, x*y\n");
  CHECK(run({"segre", f, "--x", "X"}).code == 0);
  CHECK(run({"segre", f, "--x", "X", "--retries", "1"}).code == 0);
  CHECK(run({"segre", f, "--x", "X", "--retries", "0"}).code == 1);
}
