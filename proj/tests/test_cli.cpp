#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the tool with stderr folded into the captured output.
Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + std::string(COLLAPSE_LAB_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Result r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("collapse_lab_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(COLLAPSE_LAB_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generate") {
  const auto fib = write("fib.json", R"({"kind": "fibonacci"})");
  auto r = run("generate --spec " + fib + " --length 19");
  CHECK(r.code == 0);
  CHECK(r.out == "0100101001001010010\n");

  const auto ep = write("ep.json", R"({"kind": "eventually_periodic", "alphabet": "01", "preperiod": "", "period": "01"})");
  r = run("generate --spec " + ep + " -L 4");
  CHECK(r.code == 0);
  CHECK(r.out == "0101\n");

  const auto tie = write("tie.json", R"({"kind": "billiard", "x": ["0", "0"], "theta": ["1", "1"]})");
  r = run("generate --spec " + tie + " -L 3");
  CHECK(r.code == 3);
  CHECK(r.out.find("coordinates 1 and 2") != std::string::npos);
}

TEST_CASE("usage and parse errors") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("generate --length 5").code == 2);
  CHECK(run("generate --spec " + write("bad.json", "{") + " -L 5").code == 2);
  CHECK(run("generate --spec " + write("unk.json", R"({"kind": "nope"})") + " -L 5").code == 2);
  CHECK(run("generate --spec /nonexistent.json -L 5").code == 2);
  const auto fib = write("fib.json", R"({"kind": "fibonacci"})");
  CHECK(run("complexity --spec " + fib + " -L 100 --format yaml").code == 2);
  CHECK(run("complexity --spec " + fib + " -L 10 --nmax 20").code == 3);
  CHECK(run("generate --spec " + write("dom.json", R"({"kind": "billiard", "x": ["1/2"], "theta": ["0"]})") + " -L 5")
            .code == 3);
}

TEST_CASE("complexity") {
  const auto fib = write("fib.json", R"({"kind": "fibonacci"})");
  auto r = run("complexity --spec " + fib + " -L 10000 --nmax 10 --k 2 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == golden("fibonacci_complexity.csv"));
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
    ++n;
    CHECK(line == std::to_string(n) + "," + std::to_string(n + 1) + ",2," + std::to_string(n + 1));
  }
  CHECK(n == 10);

  const auto tm = write("tm.json", R"({"kind": "thue_morse"})");
  r = run("complexity --spec " + tm + " -L 4096 --nmax 4 --witnesses --format json");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"][3]["p"] == 10);
  CHECK(doc["rows"][3]["b"]["2"] < 10);
  CHECK(doc["witnesses"][0]["u"] == "0110");
  CHECK(doc["spec"]["kind"] == "morphic");

  r = run("complexity --spec " + fib + " --nmax 20 --saturate --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["saturation"]["stable"] == true);

  const auto one = write("one.json", R"({"kind": "eventually_periodic", "alphabet": "0", "preperiod": "", "period": "0"})");
  r = run("complexity --spec " + one + " -L 50 --nmax 5 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("5,1,1,1") != std::string::npos);
}

TEST_CASE("balance") {
  const auto w = write("w.json", R"({"kind": "eventually_periodic", "alphabet": "12", "preperiod": "11122", "period": "12"})");
  auto r = run("balance --spec " + w + " -L 5 --nmax 5 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["overall_c"] == 2);

  const auto tri = write("tri.json", R"({"kind": "tribonacci"})");
  r = run("balance --spec " + tri + " -L 20000 --nmax 20 --projections --format json");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["projections"][1]["pair"] == nlohmann::json::array({"1", "3"}));
  CHECK(doc["projections"][1]["overall_c"] >= 2);
}

TEST_CASE("classes, project and color") {
  const auto ep = write("ep.json", R"({"kind": "eventually_periodic", "alphabet": "12", "preperiod": "", "period": "11212"})");
  auto r = run("classes --spec " + ep + " -L 5 --n 2 --k 1 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("1,1,11\n2,2,12 21\n") != std::string::npos);

  const auto word = write("abc.json", R"({"kind": "eventually_periodic", "alphabet": "abc", "preperiod": "aabaca", "period": "b"})");
  r = run("project --spec " + word + " --sub ab -L 5");
  CHECK(r.code == 0);
  CHECK(r.out == "aabaa\n");

  const auto base = write("base.json", R"({"kind": "morphic", "alphabet": "0a", "images": ["0a", "0"], "seed": "0"})");
  const auto cols = write("cols.json", R"({"kind": "morphic", "alphabet": "12", "images": ["12", "1"], "seed": "1"})");
  r = run("color --spec " + base + " --letter a --colors " + cols + " -L 13");
  CHECK(r.code == 0);
  CHECK(r.out == "0100201001002\n");
}

TEST_CASE("reconstruct") {
  auto r = run("reconstruct --pair ab=aabaa --pair ac=aaaca --pair bc=bc");
  CHECK(r.code == 0);
  CHECK(r.out == "aabaca\n");

  const auto f = write("pairs.txt", "ab aabaa\nac aaaca\nbc bc\n");
  r = run("reconstruct " + f);
  CHECK(r.code == 0);
  CHECK(r.out == "aabaca\n");

  r = run("reconstruct --pair 01=0110");
  CHECK(r.code == 0);
  CHECK(r.out == "0110\n");

  r = run("reconstruct --pair ab=ab --pair ac=ca --pair bc=bc");
  CHECK(r.code == 1);
  CHECK(r.out.find("inconsistent projection family") != std::string::npos);

  CHECK(run("reconstruct --pair ab=aabaa").code == 0);
  CHECK(run("reconstruct --pair ab=aabaa --alphabet abc").code == 3);
  CHECK(run("reconstruct --pair abaa").code == 2);
}

TEST_CASE("verify") {
  auto r = run("verify --scenario tribonacci-collapse");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  r = run("verify --scenario thue-morse-collision --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["pass"] == true);
  CHECK(run("verify --scenario nonexistent").code == 2);
  CHECK(run("verify").code == 2);
  r = run("verify --list");
  CHECK(r.code == 0);
  CHECK(r.out.find("cassaigne-selmer-sweep-long") != std::string::npos);
  r = run("verify --all --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("threads setting does not change reports") {
  auto strip = [](const std::string& text) {
    auto doc = nlohmann::json::parse(text);
    std::function<void(nlohmann::json&)> go = [&](nlohmann::json& x) {
      if (x.is_object()) {
        x.erase("wall_seconds");
        for (auto& [k, v] : x.items()) go(v);
      } else if (x.is_array()) {
        for (auto& v : x) go(v);
      }
    };
    go(doc);
    return doc;
  };
  const auto one = run("verify --scenario arnoux-rauzy-sweep --format json", "COLLAPSE_LAB_THREADS=1 ");
  const auto many = run("verify --scenario arnoux-rauzy-sweep --format json", "COLLAPSE_LAB_THREADS=3 ");
  CHECK(one.code == 0);
  CHECK(many.code == 0);
  CHECK(strip(one.out) == strip(many.out));
}

}  // TEST_SUITE
