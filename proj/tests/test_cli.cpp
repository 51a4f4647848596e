#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef SUBSEQ_CLI_PATH
#error "SUBSEQ_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SUBSEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json json_of(const std::string& args) {
  const Run r = run("--format json " + args);
  REQUIRE(r.status == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("qbonacci and phi") {
  const auto j = json_of("qbonacci --q 3 --t 4 --sum");
  CHECK(j["result"]["fib"] == "7");
  CHECK(j["result"]["partial_sum"] == "15");
  CHECK(j["provenance"].contains("git"));
  const auto p = json_of("phi --q 3");
  CHECK(p["result"]["value"].get<double>() == doctest::Approx(1.8393).epsilon(1e-4));
  const auto c = json_of("phi --q 2 --method cfrac --iterations 1");
  CHECK(c["result"]["value"].get<double>() == 1.75);
}

TEST_CASE("count and tau") {
  const auto j = json_of("count --master ACA --by-tau");
  CHECK(j["result"]["distinct_subsequences"] == "7");
  CHECK(j["result"]["by_tau"] == nlohmann::json({"1", "1", "2", "3"}));
  const auto l = json_of("count --master ACA --by-length");
  CHECK(l["result"]["by_length"] == nlohmann::json({"1", "2", "3", "1"}));
  CHECK(json_of("tau --strand AA --cyclic ACGT")["result"]["tau"] == 5);
  CHECK(json_of("tau --strand CA --cyclic AC")["result"]["tau"] == 3);
  CHECK(json_of("tau --strand TA --master ACGT")["result"]["tau"].is_null());
  CHECK(json_of("count --master AA,AC,AA")["result"]["distinct_subsequences"] == "7");
}

TEST_CASE("census subcommands") {
  const auto pairs = json_of("census pairs --q 2 --t 2 --exact --bounds");
  CHECK(pairs["result"]["exact"] == "14");
  CHECK(pairs["bounds"]["upper"] == "16");
  CHECK(pairs["bounds"]["bracketed"] == true);
  CHECK(json_of("census tuples --q 2 --t 2 --n 2 --exact")["result"]["exact"] == "50");
  const auto mat = json_of("census matrices --t 1 --n 1 --p 2 --exact");
  CHECK(mat["result"]["exact_valid"] == "1");
  CHECK(mat["bounds"]["bound_lower"] == "1");
  CHECK(json_of("census masterless-tuples --q 2 --t 1 --n 2 --exact")["result"]["exact"] == "7");
  CHECK(json_of("census masterless-sets --q 2 --t 1 --n 2 --exact")["result"]["exact"] == "2");
  const auto ml = json_of("census masterless-sets --q 2 --t 5 --n 3 --bounds");
  CHECK(ml["bounds"]["set_lowers"]["2"] == "2197/192");
}

TEST_CASE("greedy and capacity") {
  const auto g = json_of("greedy --strands AC,AA,CA");
  CHECK(g["result"]["supersequence"] == "ACA");
  CHECK(g["diagnostics"]["scs_length"] == 3);
  const auto c = json_of("capacity --q 2 --t 2 --n 1 --exact");
  CHECK(c["result"]["exact_bits"].get<double>() == doctest::Approx(3.807).epsilon(1e-3));
}

TEST_CASE("csv and table formats") {
  const Run csv = run("--format csv census pairs --q 2 --t 2 --exact");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("q,t,n,quantity,value\n", 0) == 0);
  CHECK(csv.out.find("result.exact,14") != std::string::npos);
  const Run table = run("qbonacci --q 2 --t 10");
  CHECK(table.status == 0);
  CHECK(table.out.find("89") != std::string::npos);
}

TEST_CASE("json output round-trips") {
  const Run r = run("--format json capacity --q 3 --t 6 --n 3 --exact");
  REQUIRE(r.status == 0);
  const auto parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed.dump(2) + "\n" == r.out);
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 1);
  CHECK(run("qbonacci --q 2").status == 1);
  CHECK(run("capacity --q 2 --t 3 --n 0").status == 1);
  CHECK(run("count --master AG --alphabet AC").status == 1);
  CHECK(run("census pairs --q 4 --t 20 --exact").status == 3);
  CHECK(run("--budget 10 census pairs --q 2 --t 6 --exact").status == 3);
  CHECK(run("--no-budget --budget 10 census pairs --q 2 --t 6 --exact").status == 0);
  CHECK(run("verify --only 8,13").status == 0);
}
