#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "schur/setfile.hpp"
#include "schur/triples.hpp"

using namespace schur;
using json = nlohmann::json;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& cli_args) {
  CliRun r;
  std::string cmd = std::string(SCHUR_CLI_PATH) + " " + cli_args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/schur_test_") + name;
}

}  // namespace

TEST_CASE("set files round-trip with checksums") {
  GroupSpec g = make_group({10});
  ElementSet s = ElementSet::from_indices(g, {1, 3, 5, 7, 9});
  std::string path = temp_path("roundtrip.set");
  write_set_file(path, s);
  ElementSet back = read_set_file(path);
  CHECK(back == s);

  SUBCASE("corrupted checksum is rejected with the line number") {
    std::ifstream in(path);
    std::string l1, l2, l3;
    std::getline(in, l1);
    std::getline(in, l2);
    std::getline(in, l3);
    in.close();
    std::string bad = temp_path("corrupt.set");
    std::ofstream out(bad);
    out << l1 << "\n" << l2 << "\nsha256=" << std::string(64, '0') << "\n";
    out.close();
    try {
      read_set_file(bad);
      FAIL("expected a checksum error");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(":3:") != std::string::npos);
      CHECK(std::string(e.what()).find("checksum") != std::string::npos);
    }
  }

  SUBCASE("tampered elements are caught by the checksum") {
    std::ifstream in(path);
    std::string l1, l2, l3;
    std::getline(in, l1);
    std::getline(in, l2);
    std::getline(in, l3);
    in.close();
    std::string bad = temp_path("tampered.set");
    std::ofstream out(bad);
    out << l1 << "\nelements=1,3,5,7\n" << l3 << "\n";
    out.close();
    CHECK_THROWS_AS(read_set_file(bad), std::invalid_argument);
  }

  SUBCASE("checksum line is optional") {
    std::string plain = temp_path("plain.set");
    std::ofstream out(plain);
    out << "group=Z7\nelements=2,3,4\n";
    out.close();
    ElementSet t = read_set_file(plain);
    CHECK(t.size() == 3);
    CHECK(count_schur_naive(t) == 1);
  }

  SUBCASE("coordinate form") {
    std::string coords = temp_path("coords.set");
    std::ofstream out(coords);
    out << "group=Z3xZ3\nelements=(1,0);(1,1);(1,2)\n";
    out.close();
    ElementSet t = read_set_file(coords);
    CHECK(t.indices() == std::vector<int64_t>{3, 4, 5});
  }

  SUBCASE("parse errors carry line numbers") {
    std::string bad = temp_path("badline.set");
    std::ofstream out(bad);
    out << "group=Z7\nwrong=1,2\n";
    out.close();
    try {
      read_set_file(bad);
      FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
  }

  SUBCASE("out-of-range elements are rejected") {
    std::string bad = temp_path("range.set");
    std::ofstream out(bad);
    out << "group=Z7\nelements=2,9\n";
    out.close();
    CHECK_THROWS_AS(read_set_file(bad), std::invalid_argument);
  }
}

TEST_CASE("cli count") {
  auto r = run_cli("count -g Z7 -e 2,3,4 --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["outputs"]["st"] == 1);
  CHECK(j["outputs"]["sum_free"] == false);

  r = run_cli("count -g Z2^2 -e 1,2,3 --format json");
  CHECK(json::parse(r.out)["outputs"]["st"] == 6);

  r = run_cli("count -g Z5 -e --format json");
  CHECK(r.exit_code == 0);
  json e = json::parse(r.out);
  CHECK(e["outputs"]["st"] == 0);
  CHECK(e["outputs"]["cardinality"] == 0);

  r = run_cli("count -g Z10 -E \"(1);(3);(5);(7);(9)\" --format json");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["outputs"]["sum_free"] == true);

  SUBCASE("file source carries its own group") {
    std::string path = temp_path("count_src.set");
    GroupSpec g = make_group({7});
    write_set_file(path, ElementSet::from_indices(g, {2, 3, 4}));
    r = run_cli("count --file " + path + " --format json");
    CHECK(r.exit_code == 0);
    json f = json::parse(r.out);
    CHECK(f["inputs"]["group"] == "Z7");
    CHECK(f["outputs"]["st"] == 1);
    // -g must agree with the file when both are given
    r = run_cli("count --file " + path + " -g Z9 --format json");
    CHECK(r.exit_code == 1);
  }

  r = run_cli("count -g Z7 -e 2,3,4 --per-element --format json");
  json pe = json::parse(r.out);
  REQUIRE(pe["outputs"].contains("per_element"));
  CHECK(pe["outputs"]["per_element"][0][0] == 2);
  CHECK(pe["outputs"]["per_element"][0][1] == 1);
  CHECK(pe["outputs"]["per_element"][1][1] == 0);
}

TEST_CASE("cli error reporting") {
  auto r = run_cli("count -g Z7 -e 2,9 --format json");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("out of range") != std::string::npos);

  r = run_cli("count -g Y7 -e 1 --format json");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("column") != std::string::npos);

  r = run_cli("count -g Z7");
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli construct") {
  auto r = run_cli("construct zp -p 7 -a 3 --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["outputs"]["elements"] == json::array({2, 3, 4}));
  CHECK(j["outputs"]["st"] == 1);
  CHECK(j["outputs"]["bound"]["value"] == 1);
  CHECK(j["outputs"]["equal"] == true);

  r = run_cli("construct z2n -n 3 -a 5 --format json");
  j = json::parse(r.out);
  CHECK(j["outputs"]["st"] == 12);
  CHECK(j["outputs"]["bound"]["value"] == 12);
  CHECK(j["outputs"]["equal"] == true);

  r = run_cli("construct typeI -g Z10 -p 2 -t 1 --format json");
  j = json::parse(r.out);
  CHECK(j["outputs"]["st"] == 15);
  CHECK(j["outputs"]["bound"]["value"] == 15);
  CHECK(j["outputs"]["equal"] == true);

  SUBCASE("construct writes a loadable set file") {
    std::string path = temp_path("construct.set");
    r = run_cli("construct z3n -n 2 -t 1 --out " + path + " --format json");
    CHECK(r.exit_code == 0);
    ElementSet s = read_set_file(path);
    CHECK(s.size() == 4);
    CHECK(count_schur_naive(s) == 4);
  }
}

TEST_CASE("cli bound") {
  auto r = run_cli("bound z3n -n 3 -t 2 --format json");
  json j = json::parse(r.out);
  CHECK(j["outputs"]["bound"]["value"] == 22);

  r = run_cli("bound zp -p 7 -a 3 --format json");
  CHECK(json::parse(r.out)["outputs"]["bound"]["value"] == 1);

  r = run_cli("bound typeI -g Z10 -p 2 -t 1 --format json");
  j = json::parse(r.out);
  CHECK(j["outputs"]["bound"]["value"] == 15);
  CHECK(j["outputs"]["bound"]["applicable"] == false);  // t > delta*|G|/p at 1/82

  r = run_cli("bound typeI -g Z10 -p 2 -t 1 --delta 1/2 --format json");
  CHECK(json::parse(r.out)["outputs"]["bound"]["applicable"] == true);

  r = run_cli("bound spectral -g Z3 -e 1,2 --format json");
  j = json::parse(r.out);
  CHECK(j["outputs"]["bound"]["value"] == 2);
}

TEST_CASE("cli table") {
  auto r = run_cli("table -g Z5 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "a,f\n0,0\n1,0\n2,0\n3,4\n4,12\n5,25\n");

  r = run_cli("table -g Z5 --format json");
  json j = json::parse(r.out);
  CHECK(j["outputs"]["a_G"] == 2);
  CHECK(j["outputs"]["rows"][3] == json::array({3, 4}));
}

TEST_CASE("cli minimize") {
  auto r = run_cli("minimize -g Z2^2 -a 3 --enumerate-minimizers --format json");
  json j = json::parse(r.out);
  CHECK(j["outputs"]["f"] == 6);
  CHECK(j["outputs"]["minimizer_count"] == 1);
  CHECK(j["outputs"]["minimizers"][0] == json::array({1, 2, 3}));

  // formula check: floor((3*6-13)/2) * ceil((3*6-13)/2) = 2*3 = 6
  r = run_cli("minimize -g Z13 -a 6 --workers 3 --format json");
  CHECK(json::parse(r.out)["outputs"]["f"] == 6);
}

TEST_CASE("cli verify") {
  auto r = run_cli("verify zp-formula -p 7 --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["outputs"]["suites"][0]["id"] == "AC-1");
  CHECK(j["outputs"]["suites"][0]["pass"] == true);

  r = run_cli("verify AC-4 --format json");
  CHECK(r.exit_code == 0);

  r = run_cli("verify nonsense --format json");
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli removal") {
  auto r = run_cli("removal -g Z10 -e 1,3,5,7,9 --eps 1/10 --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["outputs"]["result_sum_free"] == true);
  CHECK(j["outputs"]["removed"] == 0);

  r = run_cli("removal -g Z12 -e 1,4,5,6,7,8,9 --eps 1/4 --format json");
  j = json::parse(r.out);
  CHECK(j["outputs"]["preconditions_met"] == false);
  CHECK(j["outputs"]["result"] == json::array({7}));
}

TEST_CASE("cli spectrum") {
  auto r = run_cli("spectrum -g Z2^2 -e 1,2,3 --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["outputs"]["lambda_min"] == -1.0);
  CHECK(j["outputs"]["lambda_min_exact"] == -1);

  r = run_cli("spectrum -g Z3 -e 0,1,2 --directed --format json");
  j = json::parse(r.out);
  CHECK(j["outputs"]["r_min_exact"] == 0);
}

TEST_CASE("replaying a command reproduces identical numeric payloads") {
  for (const std::string& cmd :
       std::vector<std::string>{"minimize -g Z11 -a 5 --enumerate-minimizers --seed 7 --format json",
        "construct typeI -g Z10 -p 2 -t 2 --seed 3 --format json",
        "table -g Z2^3 --format json"}) {
    auto r1 = run_cli(cmd);
    auto r2 = run_cli(cmd);
    REQUIRE(r1.exit_code == 0);
    json a = json::parse(r1.out);
    json b = json::parse(r2.out);
    CHECK(a["inputs"].dump() == b["inputs"].dump());
    CHECK(a["outputs"].dump() == b["outputs"].dump());
    CHECK(a["seed"] == b["seed"]);
  }
}
