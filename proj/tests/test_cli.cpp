#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MIXBRAID_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult res{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.code = WEXITSTATUS(status);
  return res;
}

}  // namespace

TEST_CASE("eq subcommand") {
  RunResult r = run_cli("eq \"g=1 n=3; a1 s2\" \"g=1 n=3; s2 a1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");
  r = run_cli("eq --assert \"g=1 n=2; a1 s1\" \"g=1 n=2; s1 a1\"");
  CHECK(r.code == 1);
  CHECK(r.out == "not equal\n");
}

TEST_CASE("invariant subcommand") {
  RunResult r = run_cli("invariant --functional homology \"g=2 n=1; a1 a2\"");
  CHECK(r.code == 0);
  CHECK(r.out == "t1*t2\n");
}

TEST_CASE("search subcommand reports evidence only") {
  RunResult r = run_cli(
      "search \"g=2 n=1; a1 a2\" \"g=2 n=1; a2 a1\" --depth 4 --max-n 2 --assert");
  CHECK(r.code == 1);
  CHECK(r.out.find("no certificate within budget") != std::string::npos);
  CHECK(r.out.find("evidence, not proof") != std::string::npos);
}

TEST_CASE("parse, nf, convert, embed, stab, conj, lmove") {
  CHECK(run_cli("parse \"g=2 n=2; a1 a1 s1^-2\"").out == "g=2 n=2; a1^2 s1^-2\n");
  CHECK(run_cli("nf \"g=1 n=1;\"").out == "inf=0\n");
  CHECK(run_cli("convert --to b \"g=2 n=1; a1\"").out == "g=2 n=1; b1 b2^-1\n");
  CHECK(run_cli("convert --to a \"g=3 n=1; b1\"").out == "g=3 n=1; a1 a2 a3\n");
  CHECK(run_cli("embed \"g=2 n=1; a1\"").out == "g=0 n=3; s2 s1^2 s2^-1\n");
  CHECK(run_cli("stab \"g=1 n=1; a1\" --split 1 --sign 1").out == "g=1 n=2; a1 s1\n");
  CHECK(run_cli("conj \"g=1 n=2; a1\" --index 1 --sign 1").out == "g=1 n=2; s1^-1 a1 s1\n");
  CHECK(run_cli("lmove \"g=1 n=1; a1\" --split 1 --strand 1 --sign 1 --type o").out ==
        "g=1 n=2; s1^-1 a1 s1^2\n");
}

TEST_CASE("usage errors exit 2, domain errors exit 1") {
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("eq \"g=1 n=1; a1\"").code == 2);
  CHECK(run_cli("parse \"g=1 n=1; a9\"").code == 1);
  CHECK(run_cli("parse \"oops\"").code == 1);
}

TEST_CASE("close, braid, algebraize round trip through files") {
  RunResult closed = run_cli("close \"g=1 n=1; a1\"");
  CHECK(closed.code == 0);
  std::string tmp = std::string(MIXBRAID_DATA_DIR) + "/tmp_cli_diagram.txt";
  {
    std::ofstream out(tmp);
    out << closed.out;
  }
  RunResult braided = run_cli("braid " + tmp);
  CHECK(braided.code == 0);
  std::string tmp2 = std::string(MIXBRAID_DATA_DIR) + "/tmp_cli_gmb.txt";
  {
    std::ofstream out(tmp2);
    out << braided.out;
  }
  RunResult alg = run_cli("algebraize " + tmp2);
  CHECK(alg.code == 0);
  CHECK(alg.out == "g=1 n=1; a1\n");
  std::remove(tmp.c_str());
  std::remove(tmp2.c_str());
}

TEST_CASE("axioms subcommand") {
  RunResult r = run_cli("axioms --genus 2 --functional homology --samples 20 --assert");
  CHECK(r.code == 0);
  r = run_cli("axioms --genus 2 --functional broken --samples 20 --assert");
  CHECK(r.code == 1);
  CHECK(r.out.find("axiom (4): FAIL") != std::string::npos);
}

TEST_CASE("json output is stable") {
  RunResult a = run_cli("--json eq \"g=1 n=1; a1\" \"g=1 n=1; a1\"");
  RunResult b = run_cli("--json eq \"g=1 n=1; a1\" \"g=1 n=1; a1\"");
  CHECK(a.out == b.out);
  CHECK(a.out == "{\"equal\":true}\n");
}

TEST_CASE("search emits a replayable certificate") {
  RunResult r = run_cli("search \"g=1 n=1; a1\" \"g=1 n=2; a1 s1\" --depth 4 --max-n 2");
  CHECK(r.code == 0);
  size_t at = r.out.find("cert\n");
  REQUIRE(at != std::string::npos);
  std::string tmp = std::string(MIXBRAID_DATA_DIR) + "/tmp_cli_cert.txt";
  {
    std::ofstream out(tmp);
    out << r.out.substr(at);
  }
  RunResult rep = run_cli("replay " + tmp);
  CHECK(rep.code == 0);
  CHECK(rep.out.find("certificate ok") != std::string::npos);
  std::remove(tmp.c_str());
}
