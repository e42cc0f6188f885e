// Copyright 2026 The lapdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "lapdom/graph6.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = lapdom::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("lapdom_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string kC8 = "8 8\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n1 8\n";

}  // namespace

TEST_CASE("analyze C8 as JSON") {
  const auto r = run({"analyze", "--json", "-"}, kC8);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "analysis");
  CHECK(j["n"] == 8);
  CHECK(j["m"] == 8);
  CHECK(j["energy"].get<double>() == doctest::Approx(9.656854249).epsilon(1e-9));
  CHECK(r.out.find("\"energy\":9.65685424949") != std::string::npos);
  CHECK(j["checks"]["std"]["holds"] == true);
  CHECK(j["witnesses"][2]["cols"] == nlohmann::json::array({4, 3, 1}));
  CHECK(j["witnesses"][2]["prefix_sum"] == 14);
}

TEST_CASE("analyze edgeless and K6 plus isolated") {
  const auto e = run({"analyze", "--json", "--g6", "D??"});
  REQUIRE(e.code == 0);
  const auto ej = nlohmann::json::parse(e.out);
  CHECK(ej["energy"] == 0.0);
  for (const char* c : {"gmb", "brouwer", "std"}) CHECK(ej["checks"][c]["holds"] == true);

  const auto path = temp_file("k6.txt",
                              "8 15\n1 2\n1 3\n1 4\n1 5\n1 6\n2 3\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n4 5\n"
                              "4 6\n5 6\n");
  const auto k = run({"analyze", path, "--json"});
  REQUIRE(k.code == 0);
  const auto kj = nlohmann::json::parse(k.out);
  CHECK(kj["checks"]["brouwer"]["near_equality_k"] == nlohmann::json::array({5}));
  const auto text = run({"analyze", path});
  CHECK(text.out.find("brouwer   holds  worst k=5 margin 0  equality at k=5") != std::string::npos);
}

TEST_CASE("analyze several graph6 lines and CSV") {
  const auto r = run({"analyze", "--csv"}, "DQc\nA_\n");
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 1 + 5 + 2);
  CHECK(r.out.rfind("id,k,lambda_prefix", 0) == 0);
}

TEST_CASE("analyze input errors exit with 2") {
  CHECK(run({"analyze"}, "D Qc\n").code == 2);
  CHECK(run({"analyze", "--g6", "DQ"}).code == 2);
  CHECK(run({"analyze"}, "3 2\n1 2\n").code == 2);
  CHECK(run({"analyze", "/nonexistent/file"}).code == 2);
  CHECK(run({"analyze", "--json", "--csv"}, kC8).code == 2);
  CHECK(run({"analyze"}, "").code == 2);
}

TEST_CASE("build commands") {
  const auto be = run({"build", "brouwer-extremal", "8", "15", "4"});
  REQUIRE(be.code == 0);
  CHECK(be.out.find("conjugate  7 6 6 6 4 1 0 0") != std::string::npos);
  CHECK(be.out.find("case       2") != std::string::npos);

  const auto cd = run({"build", "cycle-dominator", "8", "--json"});
  REQUIRE(cd.code == 0);
  const auto j = nlohmann::json::parse(cd.out);
  CHECK(j["cols"] == nlohmann::json::array({4, 3, 1}));
  CHECK(j["conjugate"] == nlohmann::json::array({5, 5, 4, 2, 0, 0, 0, 0}));
  CHECK(lapdom::decode_graph6(j["graph6"].get<std::string>()).m() == 8);

  const auto ci = run({"build", "clique-isolated", "9"});
  CHECK(ci.out.find("threshold  9: 6 5 4 3 2 1") != std::string::npos);

  const auto pa = run({"build", "pineapple", "8", "6"});
  CHECK(pa.code == 0);
  CHECK(pa.out.find("threshold  8: 7 4 3 2 1") != std::string::npos);

  const auto list = temp_file("union.txt", "# parts\n3: 2 1\n4: 3\n");
  const auto um = run({"build", "union-merge", list});
  CHECK(um.code == 0);
  CHECK(um.out.find("threshold  7: 5 1") != std::string::npos);

  const auto split = temp_file("split.txt", "6 8\n1 2\n1 3\n1 4\n2 3\n2 4\n3 5\n1 6\n2 5\n");
  const auto sd = run({"build", "split-dominator", split, "3"});
  CHECK(sd.code == 0);
  CHECK(sd.out.find("threshold  6: 4 3 1") != std::string::npos);
}

TEST_CASE("build argument errors exit with 2") {
  CHECK(run({"build", "brouwer-extremal", "4", "7", "1"}).code == 2);
  CHECK(run({"build", "cycle-dominator", "7"}).code == 2);
  CHECK(run({"build", "pineapple", "5", "9"}).code == 2);
  CHECK(run({"build", "cycle-dominator"}).code == 2);
  CHECK(run({"build", "split-dominator", temp_file("c5.txt", "Dhc\n"), "2"}).code == 2);
  CHECK(run({"build", "union-merge", temp_file("bad.txt", "4: 1 3\n")}).code == 2);
  CHECK(run({"build"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("enumerate-threshold") {
  const auto r = run({"enumerate-threshold", "4", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "4: 2 1\n4: 3\ncount 2\n");
  CHECK(run({"enumerate-threshold", "4"}).out.find("count 8\n") != std::string::npos);
  CHECK(run({"enumerate-threshold", "1"}).out == "1:\ncount 1\n");
  CHECK(run({"enumerate-threshold", "21"}).code == 2);
  CHECK(run({"enumerate-threshold", "0"}).code == 2);
  const auto j = nlohmann::json::parse(run({"enumerate-threshold", "4", "--json"}).out);
  CHECK(j["count"] == 8);
  CHECK(j["m"].is_null());
}

TEST_CASE("search exit codes and determinism") {
  std::string stream;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    stream += lapdom::encode_graph6(lapdom::Graph::from_mask(4, mask)) + "\n";
  }
  const auto one = run({"search", "--jobs", "1", "--check", "std"}, stream);
  const auto eight = run({"search", "--jobs", "8", "--check", "std"}, stream);
  CHECK(one.code == 0);
  CHECK(one.out == eight.out);
  CHECK(one.out.find("records 64\n") != std::string::npos);

  CHECK(run({"search"}, "").code == 0);
  const auto bad = run({"search", "--json"}, "DQc\nbad!\n");
  CHECK(bad.code == 2);
  const auto j = nlohmann::json::parse(bad.out);
  CHECK(j["input_errors"][0]["line"] == 2);
  CHECK(j["records"] == 1);

  // A negative tolerance turns exact GMB equalities into violations.
  const auto strict = run({"search", "--check", "gmb", "--tolerance", "-0.5"}, stream);
  CHECK(strict.code == 1);
  CHECK(strict.out.find("violation index=1 ") != std::string::npos);
  CHECK(run({"search", "--tolerance", "abc"}, stream).code == 2);
  CHECK(run({"search", "--check", "nope"}, stream).code == 2);
  CHECK(run({"search", "--gen-all", "8"}).code == 2);

  const auto gen = run({"search", "--gen-all", "4", "--json", "--timing", "--jobs", "2"});
  CHECK(gen.code == 0);
  const auto gj = nlohmann::json::parse(gen.out);
  CHECK(gj["records"] == 64);
  CHECK(gj["jobs"] == 2);
  CHECK(gj.contains("wall_seconds"));
}

TEST_CASE("help exits with 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("analyze") != std::string::npos);
}
