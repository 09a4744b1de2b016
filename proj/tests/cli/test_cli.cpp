#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + CECHSPAN_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(CECHSPAN_DATA) + "/fixtures/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cohomology of a hollow triangle") {
  const auto r = run("cohomology " + fixture("hollow-triangle.scx") + " --k 1 --ring Z --reduced");
  CHECK(r.code == 0);
  CHECK(r.out.find("free-rank: 1\n") != std::string::npos);
  CHECK(r.out.find("torsion: none\n") != std::string::npos);
  const auto pt = run("cohomology " + fixture("point.scx") + " --k 0 --reduced");
  CHECK(pt.out.find("group: 0\n") != std::string::npos);
}

TEST_CASE("spans on the three rings and simple pairs") {
  for (const char* x : {"rings-x1.scx", "rings-x2.scx", "rings-x3.scx"}) {
    const auto r = run("spans " + fixture(x) + " " + fixture("rings-a.scx") + " --L canonical --ring Z --m 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("spans: true\n") != std::string::npos);
  }
  const auto cone = run("spans " + fixture("cone.scx") + " " + fixture("hollow-triangle.scx") + " --ring Z3");
  CHECK(cone.out.find("spans: true\n") != std::string::npos);
  const auto same = run("spans " + fixture("hollow-triangle.scx") + " " + fixture("hollow-triangle.scx"));
  CHECK(same.code == 0);
  CHECK(same.out.find("spans: false\n") != std::string::npos);
}

TEST_CASE("minimize names the narrowest station disk") {
  const auto r = run("minimize " + fixture("torus-ambient.scx") + " " + fixture("torus-boundary.scx") + " --L " +
                     fixture("torus-L.txt") + " --method exhaustive");
  CHECK(r.code == 0);
  std::istringstream want(slurp(fixture("torus-narrowest-disk.scx")));
  std::size_t cells = 0;
  for (std::string line; std::getline(want, line);) {
    if (line.rfind("simplex ", 0) != 0) continue;
    std::string cell = "  cell [" + line.substr(8) + "]\n";
    CHECK(r.out.find(cell) != std::string::npos);
    ++cells;
  }
  CHECK(r.out.find("chosen: " + std::to_string(cells) + "\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("cohomology " + fixture("malformed.scx")).code == 2);
  CHECK(run("cohomology " + fixture("does-not-exist.scx")).code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify --seeds 9..1").code == 2);
  CHECK(run("canonical-l " + fixture("figure-eight.scx") + " --m 2").code == 3);
  CHECK(run("minimize " + fixture("infeasible-ambient.scx") + " " + fixture("infeasible-boundary.scx")).code == 4);
  CHECK(run("minimize " + fixture("rings-ambient.scx") + " " + fixture("rings-a.scx") + " --method exhaustive").code ==
        1);
  CHECK(run("verify --replay " + fixture("replay-fault.txt")).code == 5);
  CHECK(run("verify --replay " + fixture("replay-ok.txt")).code == 0);
}

TEST_CASE("linking subcommand") {
  const auto hopf = run("linking " + fixture("loops-hopf.scx"));
  CHECK(hopf.code == 0);
  CHECK((hopf.out.find("link 0 1: 1\n") != std::string::npos || hopf.out.find("link 0 1: -1\n") != std::string::npos));
  const auto probes = run("linking " + fixture("rings-probes.scx") + " --x " + fixture("rings-x1.scx") + " --a " +
                          fixture("rings-a.scx"));
  CHECK(probes.code == 0);
  CHECK(probes.out.find("misses") == std::string::npos);
}

TEST_CASE("reports are byte identical across runs and thread counts") {
  const std::vector<std::string> invocations{
      "verify --id L1A,L13A,ThmFlat --seeds 0..5 --ring Z3 --verbose",
      "minimize " + fixture("torus-ambient.scx") + " " + fixture("torus-boundary.scx") + " --L " + fixture("torus-L.txt"),
      "coboundary " + fixture("rings-x3.scx") + " " + fixture("rings-a.scx") + " --ring Z2"};
  for (const auto& args : invocations) {
    const auto a = run(args, "CECHSPAN_THREADS=1");
    const auto b = run(args, "CECHSPAN_THREADS=3");
    const auto c = run(args);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.code == 0);
  }
}

TEST_CASE("shipped fixtures match the generator") {
  const fs::path out = fs::temp_directory_path() / "cechspan-fixture-check";
  fs::remove_all(out);
  REQUIRE(std::system((std::string(CECHSPAN_FIXTURES) + " " + out.string() + " > /dev/null").c_str()) == 0);
  for (const char* sub : {"fixtures", "corpus"})
    for (const auto& e : fs::directory_iterator(out / sub)) {
      INFO(e.path());
      CHECK(slurp(e.path()) == slurp(fs::path(CECHSPAN_DATA) / sub / e.path().filename()));
    }
  fs::remove_all(out);
}
