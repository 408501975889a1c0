#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(DEGFLAG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json envelope(const std::string& args) {
  auto r = cli(args + " --format json");
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("numbers") {
  auto r = cli("numbers --max-n 6");
  CHECK(r.code == 0);
  CHECK(r.out == "1 1\n2 2\n3 7\n4 38\n5 295\n6 3098\n");
  CHECK(cli("numbers --max-n 1").out == "1 1\n");
  CHECK(cli("numbers --max-n 3 --format csv").out == "n,h\n1,1\n2,2\n3,7\n");
  auto j = envelope("numbers --max-n 3");
  CHECK(j["command"] == "numbers");
  CHECK(j["params"]["max_n"] == 3);
  CHECK(j["result"][2]["h"] == "7");
  CHECK(j["elapsed_ms"].is_number_integer());
  auto big = envelope("numbers --max-n 25");
  CHECK(big["result"][24]["h"].is_string());
  CHECK(cli("numbers --max-n 26").code == 2);
  CHECK(cli("numbers --max-n 0").code == 2);
  CHECK(cli("numbers --bogus").code == 2);
  CHECK(cli("").code == 2);
}

TEST_CASE("triangles") {
  auto s = envelope("seidel --rows 9");
  CHECK(s["result"][8] == nlohmann::json::array({"56", "104", "138", "155", "155"}));
  auto k = envelope("kreweras --rows 6");
  CHECK(k["result"][5] == nlohmann::json::array({"295", "552", "702", "702", "552", "295"}));
  auto csv = cli("kreweras --rows 2 --format csv");
  CHECK(csv.out == "row,k,value\n1,1,1\n2,1,1\n2,2,1\n");
}

TEST_CASE("poincare") {
  CHECK(envelope("poincare --n 3")["result"]["coeffs"] == nlohmann::json::array({"1", "2", "3", "1"}));
  CHECK(envelope("poincare --n 1")["result"]["coeffs"] == nlohmann::json::array({"1"}));
  auto four = envelope("poincare --n 4 --at 2,3");
  CHECK(four["result"]["coeffs"] == nlohmann::json::array({"1", "3", "7", "10", "10", "6", "1"}));
  CHECK(four["result"]["values"][0]["value"] == "531");
  CHECK(four["result"]["values"][1]["value"] == "3340");
  CHECK(cli("poincare --n 9").code == 2);
  CHECK(cli("poincare --n 0").code == 2);
  CHECK(cli("poincare --n 2").out == "1 + 1q\n");
}

TEST_CASE("dellac and bijections") {
  auto d = envelope("dellac enum --n 3");
  CHECK(d["result"]["count"] == 7);
  CHECK(d["result"]["configs"][6]["length"] == 3);
  CHECK(cli("dellac enum --n 3").out.find("7 configurations") == 0);
  for (const char* kind : {"tuple", "dumont"}) {
    auto r = cli(std::string("bijection roundtrip --n 4 --kind ") + kind);
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
  }
  CHECK(cli("bijection roundtrip --n 3 --kind other").code == 2);
  auto conv = envelope(R"(bijection convert --from tuple --to dumont --input '{"n":3,"dims":[1,2],"subsets":[[2],[1,3]]}')");
  CHECK(conv["result"] == nlohmann::json::array({4, 1, 6, 2, 7, 3, 8, 5}));
  auto back = envelope("bijection convert --from dumont --to tuple --n 3 --input '[2,1,4,3,6,5,8,7]'");
  CHECK(back["result"]["subsets"] == nlohmann::json::parse("[[1],[1,2]]"));
  CHECK(cli("bijection convert --from dumont --to tuple --n 3 --input '[1,2,3,4,5,6,7,8]'").code == 2);
  CHECK(cli("bijection convert --from tuple --to dellac --input '{oops'").code == 2);
}

TEST_CASE("flags") {
  CHECK(cli("flag count --n 3 --p 2").out == "25\n");
  CHECK(envelope("flag count --n 4 --p 2 --dims 1,3")["result"]["count"] == "129");
  CHECK(envelope("flag count --n 4 --p 3 --jobs 2")["result"]["count"] == "3340");
  auto cells = envelope("flag cells --n 3 --p 2");
  CHECK(cells["result"]["cells"] == 7);
  CHECK(cli("flag count --n 3 --p 4").code == 2);
  CHECK(cli("flag count --n 3 --p 2 --dims 2,1").code == 2);
  CHECK(cli("flag cells --n 2 --p 2 --format csv").out == "tuple,dellac_length,count\n({1}),1,2\n({2}),0,1\n");
}

TEST_CASE("plucker") {
  CHECK(cli("pluecker relation --L 1,2,3 --J 4 --k 1").out == "X_123 X_4 - X_234 X_1\n");
  CHECK(cli("pluecker relation --L 1,2,3 --J 4 --k 1 --classical").out ==
        "X_123 X_4 - X_234 X_1 + X_134 X_2 - X_124 X_3\n");
  auto c = envelope("pluecker cutout --n 4 --p 2 --dims 1,3");
  CHECK(c["result"]["equal"] == true);
  CHECK(c["params"]["dims"] == nlohmann::json::array({1, 3}));
}

TEST_CASE("verify") {
  CHECK(cli("verify --suite points --n 3 --p 2").code == 0);
  CHECK(cli("verify --suite triangles --rows 6").code == 0);
  auto b = cli("verify --suite bijections --n 3");
  CHECK(b.code == 0);
  CHECK(b.out.find("FAIL") == std::string::npos);
  CHECK(cli("verify --suite cells --n 3 --p 3").code == 0);
  CHECK(cli("verify --suite pluecker --n 4 --p 2 --dims 1,3").code == 0);
  CHECK(cli("verify --suite nothing").code == 2);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"dellac enum --n 4", "flag cells --n 3 --p 3", "verify --suite bijections --n 4"}) {
    auto a = envelope(args);
    auto b = envelope(std::string(args) + " --jobs 3");
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    a["params"].erase("jobs");
    b["params"].erase("jobs");
    CHECK(a == b);
  }
}

TEST_CASE("no color escapes when NO_COLOR is set") {
  auto r = cli("verify --suite points --n 2 --p 2");
  CHECK(r.out.find('\033') == std::string::npos);
  setenv("NO_COLOR", "1", 1);
  CHECK(cli("verify --suite points --n 2 --p 2").out.find('\033') == std::string::npos);
  unsetenv("NO_COLOR");
}
