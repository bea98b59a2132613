#include "test_main.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(VK_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool ends_with(const std::string& s, const std::string& tail) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.size() >= tail.size() && t.compare(t.size() - tail.size(), tail.size(), tail) == 0;
}

}  // namespace

TEST_CASE("exit codes") {
  Run d4 = run("khom d4-chain");
  CHECK(d4.code == 0);
  CHECK(ends_with(d4.out, "(Z₂⁴⊕Z, Z)"));
  CHECK(run("khom su2-adjoint --level -1").code == 1);
  CHECK(run("khom su2-adjoint").code == 1);
  CHECK(run("khom nothing").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("khom e6-chain").code == 2);
  CHECK(run("khom e6-chain --lenient").code == 0);
  CHECK(run("khom t2 --matrix 1,1,1,1").code == 2);
  CHECK(run("khom maxrank E8 SU8").code == 2);
  CHECK(run("repring fold E6").code == 2);
  CHECK(run("khom su2-orb --level 1").code == 3);
  CHECK(run("invariants enumerate --level 16 --budget 10").code == 3);
}

TEST_CASE("enumerate at level 4") {
  Run r = run("invariants enumerate --level 4 --json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"count\": 2") != std::string::npos);
}

TEST_CASE("json is byte-identical across runs") {
  for (const char* args : {"khom d4-chain --json", "fusion su2 --level 3 --json", "double alpha --orders 2,2 --json",
                           "repring mckay D5 --json"}) {
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("config file, flags win") {
  std::string path = "vk_test_config.ini";
  {
    std::ofstream f(path);
    f << "level=3\n";
  }
  CHECK(ends_with(run("--config " + path + " khom su2-adjoint").out, "(Z⁴, 0)"));
  CHECK(ends_with(run("--config " + path + " khom su2-adjoint --level 1").out, "(Z², 0)"));
  std::remove(path.c_str());
}

TEST_CASE("window override from the environment") {
  Run r = run("khom circle --level 2");
  CHECK(r.out.find("window [-24, 24]") != std::string::npos);
  Run e = run("khom circle --level 2 --window 30");
  CHECK(e.out.find("window [-30, 30]") != std::string::npos);
  Run v = Run{};
  {
    std::string cmd = std::string("VK_WINDOW=33 ") + VK_BIN + " khom circle --level 2";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) v.out.append(buf.data(), n);
    pclose(p);
  }
  CHECK(v.out.find("window [-33, 33]") != std::string::npos);
}
