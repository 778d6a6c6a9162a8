// Copyright 2026 The klocal Authors
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
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

const std::string kCli = KLOCAL_CLI_PATH;

int run(const std::string& args, std::string* out = nullptr) {
  std::string file = "cli_test_out.tmp";
  std::string cmd = kCli + " " + args + " > " + file + " 2>/dev/null";
  int code = std::system(cmd.c_str());
  if (out) {
    std::ifstream f(file, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    *out = ss.str();
  }
  std::remove(file.c_str());
  return WEXITSTATUS(code);
}

}  // namespace

TEST_CASE("verification commands succeed and report pass") {
  std::string out;
  CHECK(run("verify-1d --n 8", &out) == 0);
  CHECK(out.find("\"pass\": true") != std::string::npos);
  CHECK(out.find("\"version\"") != std::string::npos);
  CHECK(run("verify-one-to-all --n 8") == 0);
  CHECK(run("qca-index --case shift", &out) == 0);
  CHECK(out.find("\"num\": 2") != std::string::npos);
}

TEST_CASE("reports round-trip through a json parser") {
  std::string out;
  REQUIRE(run("verify-1d --n 10", &out) == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("n").get<int>() == 10);
  CHECK(j.at("family").at("layers").get<int>() <= 3);
  REQUIRE(run("qca-verify --case shift --region 2", &out) == 0);
  auto q = nlohmann::json::parse(out);
  CHECK(q.at("ring_size").get<int>() == 6);
  CHECK(q.at("deviation").get<double>() <= 1e-9);
  CHECK(q.at("depth_certificate").get<int>() == 2);
  CHECK(q.at("index").at("num").get<int>() == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("verify-1d --n 7") == 2);           // odd ring
  CHECK(run("verify-1d --bogus-flag 3") == 2);  // unknown flag
  CHECK(run("") == 2);                          // missing subcommand
  CHECK(run("verify-2d --lx 4 --ly 6") == 2);   // width not divisible by 3
  CHECK(run("verify-sspt --l 5") == 2);         // odd torus
  CHECK(run("qca-verify --case bogus --region 2") == 2);
  CHECK(run("monitored-sweep --ensemble q --sizes 8 --p-grid 0") == 2);
  CHECK(run("monitored-sweep --ensemble b --sizes 8 --p-grid 0 --filter-sign x") == 2);
}

TEST_CASE("sweep csv is emitted with the agreed header") {
  std::string out;
  CHECK(run("monitored-sweep --ensemble a --sizes 8 --p-grid 0 "
            "--realizations 2 --seed 3",
            &out) == 0);
  CHECK(out.rfind("ensemble,N,p,realizations,steps,s_bar,stderr,seed\n", 0) == 0);
  CHECK(out.find("a,8,0,2,256,1,0,3") != std::string::npos);
}

TEST_CASE("config file supplies flags, command line overrides") {
  {
    std::ofstream f("cli_test_cfg.tmp");
    f << "# sweep configuration\n"
      << "ensemble=a\n"
      << "sizes=8\n"
      << "p-grid=0\n"
      << "realizations=2\n"
      << "seed=5\n";
  }
  std::string from_cfg;
  CHECK(run("monitored-sweep --config cli_test_cfg.tmp", &from_cfg) == 0);
  CHECK(from_cfg.find("a,8,0,2,256,1,0,5") != std::string::npos);
  std::string overridden;
  CHECK(run("monitored-sweep --config cli_test_cfg.tmp --seed 9", &overridden) == 0);
  CHECK(overridden.find("a,8,0,2,256,1,0,9") != std::string::npos);
  std::remove("cli_test_cfg.tmp");
}

TEST_CASE("depth bound helper rides along the sweep output") {
  std::string out;
  CHECK(run("monitored-sweep --ensemble a --sizes 8 --p-grid 0 --realizations 1 "
            "--seed 1 --bound 2 --bound-distance 16",
            &out) == 0);
  CHECK(out.find("depth_lower_bound(k=2,d=16)=4") != std::string::npos);
}
