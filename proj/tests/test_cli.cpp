#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

std::string binary() {
  const char* path = std::getenv("PRECIMA_BIN");
  REQUIRE_MESSAGE(path != nullptr, "PRECIMA_BIN must point at the CLI");
  return path;
}

RunResult run(const std::string& args) {
  std::string command = binary() + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof(buffer), pipe))
    output.append(buffer, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

}  // namespace

TEST_CASE("measure prints the value and exits zero") {
  auto result = run(
      "measure --measure one-align-etc --model corpus:fig5a_flower "
      "--log corpus:fig5_log");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("value=0.3333") != std::string::npos);
}

TEST_CASE("pcc from the command line") {
  auto result = run(
      "measure --measure pcc --k 2 --model corpus:fig7a_loop "
      "--log corpus:fig7_log");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("value=0.6000") != std::string::npos);
}

TEST_CASE("measure output is byte-identical across runs") {
  std::string args =
      "measure --measure etc --model corpus:fig4_model --log corpus:fig4_log_l2";
  CHECK(run(args).output == run(args).output);
}

TEST_CASE("records format emits one json document") {
  auto result = run(
      "measure --measure etc --model corpus:fig4_model --log corpus:fig4_log_l1 "
      "--format records");
  CHECK(result.exit_code == 0);
  CHECK(result.output.front() == '{');
  CHECK(result.output.find("\"value\":0.75") != std::string::npos);
}

TEST_CASE("missing input file exits one") {
  auto result = run(
      "measure --measure etc --model /nonexistent.net --log corpus:fig5_log");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("error") != std::string::npos);
}

TEST_CASE("undefined measure results exit two") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "precima_cli_test";
  fs::create_directories(dir);
  std::ofstream net(dir / "seq.net");
  net << "place p0 init=1\nplace p1\nplace p2\nplace p3\n"
         "trans a label=a\ntrans b label=b\ntrans c label=c\n"
         "arc p0 a\narc a p1\narc p1 b\narc b p2\narc p2 c\narc c p3\n"
         "final p3=1\n";
  net.close();
  std::ofstream log(dir / "seq.log");
  log << "1x a,b,c\n";
  log.close();

  auto result = run("measure --measure advanced-ba --model " +
                    (dir / "seq.net").string() + " --log " +
                    (dir / "seq.log").string());
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("value=undefined") != std::string::npos);
}

TEST_CASE("axiom violations exit three with the witness values") {
  auto result = run(
      "axiom A5 --measure one-align-etc --log1 corpus:fig4_log_l1 "
      "--log2 corpus:fig4_log_l2 --model corpus:fig4_model");
  CHECK(result.exit_code == 3);
  CHECK(result.output.find("verdict=violated") != std::string::npos);
  CHECK(result.output.find("0.7500") != std::string::npos);
  CHECK(result.output.find("0.7143") != std::string::npos);
}

TEST_CASE("pcc A2 violation from the command line") {
  auto result = run(
      "axiom A2 --measure pcc --model1 corpus:fig7b_unrolled "
      "--model2 corpus:fig7a_loop --log corpus:fig7_log");
  CHECK(result.exit_code == 3);
}

TEST_CASE("a flower fails the A3 hypothesis and exits two") {
  auto result = run(
      "axiom A3 --measure etc --model corpus:fig5a_flower "
      "--log corpus:fig5_log");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("hypothesis-not-met") != std::string::npos);
}

TEST_CASE("corpus list prints all entries") {
  auto result = run("corpus list");
  CHECK(result.exit_code == 0);
  int lines = 0;
  for (char c : result.output)
    if (c == '\n') ++lines;
  CHECK(lines == 18);
  CHECK(result.output.find("fig8_flower") != std::string::npos);
}

TEST_CASE("corpus export writes a parseable file") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "precima_cli_export";
  fs::create_directories(dir);
  auto result = run("corpus export fig8_flower --out " + dir.string());
  CHECK(result.exit_code == 0);
  CHECK(fs::exists(dir / "fig8_flower.net"));
}

TEST_CASE("dot export") {
  auto result = run("dot --model corpus:fig7a_loop");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("digraph") != std::string::npos);
}

TEST_CASE("unknown measure name exits one") {
  auto result = run(
      "measure --measure bogus --model corpus:fig4_model --log corpus:fig5_log");
  CHECK(result.exit_code == 1);
}
