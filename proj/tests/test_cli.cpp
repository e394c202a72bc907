// Copyright 2026 The sparsezt Authors
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
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;
using sparsezt::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SPARSEZT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("test-zero on the data files") {
  const Run fermat = run({"test-zero", "--poly", data("fermat.json")});
  CHECK(fermat.code == 0);
  const json j = json::parse(fermat.out);
  CHECK(j.at("verdict") == "vanishes");
  CHECK(j.at("evaluations") == 2);
  CHECK(j.at("budget") == 2);
  CHECK(j.at("field") == "GF(3)");

  const Run f4 = run({"test-zero", "--poly", data("f4_example.json")});
  CHECK(f4.code == 1);
  const json k = json::parse(f4.out);
  CHECK(k.at("verdict") == "witness");
  CHECK(k.at("distance") == 0);
  CHECK(k.at("field") == "GF(2^2)");

  CHECK(run({"test-zero", "--poly", data("malformed.json")}).code == 2);
  CHECK(run({"test-zero", "--poly", data("missing.json")}).code == 2);
  CHECK(run({"test-zero", "--poly", data("fermat.json"), "--bound", "1"}).code == 2);
  CHECK(run({"test-zero", "--poly", data("fermat.json"), "--set", "0,1"}).code == 2);
  CHECK(run({"test-zero"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("find-nonzero, solve and reduce") {
  const Run f = run({"find-nonzero", "--poly", data("f4_example.json"), "--anchor", "3,2"});
  CHECK(f.code == 1);
  CHECK(json::parse(f.out).at("witness") == json::parse("[3,2]"));
  const Run bb = run({"find-nonzero", "--poly", data("fermat.json"), "--bound", "9"});
  CHECK(bb.code == 0);

  const Run s = run({"solve", "--system", data("solve_demo.json")});
  CHECK(s.code == 0);
  const json sj = json::parse(s.out);
  CHECK(sj.at("verdict") == "solution-found");
  CHECK(sj.at("distance") == 1);
  CHECK(run({"solve", "--system", data("solve_demo.json"), "--anchor", "2,2"}).code == 0);
  CHECK(run({"solve", "--system", data("fermat.json")}).code == 2);

  const Run r = run({"reduce", "--poly", data("f4_example.json")});
  CHECK(r.code == 0);
  const json rj = json::parse(r.out);
  CHECK(rj.at("monomials_before") == 1);
  CHECK(rj.at("monomials_after") == 4);
}

TEST_CASE("output is deterministic and --out writes the same JSON") {
  const std::vector<std::string> args = {"verify-bounds", "--per-theorem", "20", "--seed", "7"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out).at("all_pass") == true);

  const std::string path = "cli_out_test.json";
  std::vector<std::string> with_out = args;
  with_out.insert(with_out.end(), {"--out", path});
  const Run c = run(with_out);
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == a.out);
  std::remove(path.c_str());

  const Run j1 = run({"test-zero", "--poly", data("fermat.json"), "--jobs", "4"});
  CHECK(j1.code == 0);
  CHECK(run({"test-zero", "--poly", data("fermat.json"), "--jobs", "0"}).code == 2);
}
