#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

// End-to-end checks of the installed command surface; SIFKIT_BIN is injected
// by the build.

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string command = env_prefix + std::string(SIFKIT_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("is-sif reports the first stabilized interval", "[cli]") {
  const CliResult r = run_cli("is-sif \"6 1 5 3 4 2\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "false stabilized=[3,5]\n");
  CHECK(run_cli("is-sif \"2 3 1\"").out == "true\n");
}

TEST_CASE("count table ends with a_4 = 7", "[cli]") {
  const CliResult r = run_cli("count --max 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0 1\n1 1\n2 1\n3 2\n4 7\n");
  CHECK(run_cli("count --max 4 --bfile").out == r.out);
}

TEST_CASE("connected and partial tables", "[cli]") {
  CHECK(run_cli("connected --max 4").out == "0 0\n1 1\n2 1\n3 3\n4 13\n");
  CHECK(run_cli("partial --n 8 --k 8").out == "12123\n");
  CHECK(run_cli("partial --n 5 --k 1").out == "120\n");
}

TEST_CASE("decode and encode round trip byte for byte", "[cli]") {
  CHECK(run_cli("decode \"e/1\"").out == "2 1\n");
  const std::string sixteen = "2 4 3 1 8 7 6 5 13 10 9 16 11 15 14 12";
  const CliResult encoded = run_cli("encode \"" + sixteen + "\"");
  CHECK(encoded.out == "2,3,1/2,1/e/1/3,1,2/e/2,1/e/1/e/e/e/1/e/e/2,1\n");
  std::string list = encoded.out;
  list.pop_back();
  CHECK(run_cli("decode \"" + list + "\"").out == sixteen + "\n");
}

TEST_CASE("split text, json, and murasaki render", "[cli]") {
  const std::string twelve = "7 5 6 4 2 3 1 8 10 12 11 9";
  CHECK(run_cli("split \"" + twelve + "\"").out ==
        "1,7:21;2,3,5,6:3412;4:1;8:1;9,10,12:231;11:1\n");
  const CliResult json = run_cli("split \"" + twelve + "\" --json");
  CHECK(json.out.find("\"support\":[1,7]") != std::string::npos);
  const CliResult rendered = run_cli("split \"" + twelve + "\" --render murasaki");
  CHECK(rendered.out.find('+') != std::string::npos);
  CHECK(rendered.out.find("11 12") != std::string::npos);  // label row
}

TEST_CASE("encode render shows the balanced path", "[cli]") {
  const CliResult r = run_cli("encode \"2 4 3 1 8 7 6 5 13 10 9 16 11 15 14 12\" --render path");
  CHECK(r.out.find("Q: DDDUDDUUDUDDDUUDDUUDUUUUDUUUDD") != std::string::npos);
  CHECK(r.out.find("marked upstep: 3") != std::string::npos);
}

TEST_CASE("verify prints one report line per n", "[cli]") {
  const CliResult r = run_cli("verify --n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n=4 permutations=24") != std::string::npos);
  CHECK(r.out.find("result=ok") != std::string::npos);
  CHECK(run_cli("verify --n 10").exit_code == 1);  // capped without --force
}

TEST_CASE("series and asym subcommands", "[cli]") {
  const CliResult gf = run_cli("series --order 6 --check gf");
  CHECK(gf.exit_code == 0);
  CHECK(gf.out.find("n=3 coefficient=6 factorial=6 PASS") != std::string::npos);
  const CliResult ode = run_cli("series --order 10 --check ode");
  CHECK(ode.exit_code == 0);
  CHECK(ode.out.find("zero series") != std::string::npos);
  const CliResult asym = run_cli("asym --max 8 --step 4");
  CHECK(asym.exit_code == 0);
  CHECK(asym.out.find("0.3006") != std::string::npos);  // a_8/8! = 12123/40320
  const CliResult dump = run_cli("series --order 5 --dump");
  CHECK(dump.exit_code == 0);
  CHECK(dump.out == "0: 1\n1: 1\n2: 1\n3: 2\n4: 7\n5: 34\n");
  CHECK(run_cli("series --order 5").exit_code == 1);  // neither --check nor --dump
}

TEST_CASE("enumerate-sif lists SIF permutations in lexicographic order", "[cli]") {
  CHECK(run_cli("enumerate-sif --n 3").out == "2 3 1\n3 1 2\n");
  CHECK(run_cli("enumerate-sif --n 2").out == "2 1\n");
}

TEST_CASE("identical invocations produce identical bytes", "[cli]") {
  const std::string args = "encode \"2 4 3 1 8 7 6 5 13 10 9 16 11 15 14 12\" --render path";
  CHECK(run_cli(args).out == run_cli(args).out);
  const std::string verify_args = "verify --n 5";
  const std::string first = run_cli(verify_args).out;
  CHECK(run_cli(verify_args).out == first);
  // SIFKIT_THREADS bounds the verification parallelism without changing output.
  CHECK(run_cli("verify --n 5", "SIFKIT_THREADS=1 ").out == first);
  CHECK(run_cli("verify --n 5 --threads 3").out == first);
}

TEST_CASE("exit codes distinguish usage and validation errors", "[cli]") {
  CHECK(run_cli("nonsense").exit_code == 1);
  CHECK(run_cli("count").exit_code == 1);               // missing --max
  CHECK(run_cli("is-sif \"1 1\"").exit_code == 2);      // not a permutation
  CHECK(run_cli("decode \"1,2\"").exit_code == 2);      // item not SIF
  CHECK(run_cli("decode \"1/1\"").exit_code == 2);      // wrong total length
  CHECK(run_cli("--help").exit_code == 0);
}
