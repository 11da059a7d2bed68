#include "spdom/cli.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "spdom/completion.hpp"
#include "spdom/ordinal.hpp"
#include "spdom/space.hpp"

using namespace spdom;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// The timing line is the only nondeterministic part of a report.
std::string strip_time(const std::string& text) {
  std::istringstream in(text);
  std::string line, kept;
  while (std::getline(in, line)) {
    if (line.rfind("time_ms", 0) == 0 || line.find("\"time_ms\"") != std::string::npos)
      continue;
    kept += line;
    kept += '\n';
  }
  return kept;
}

std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  }
  return "";
}

}  // namespace

TEST_CASE("cli frozen examples") {
  auto add = run_cli({"ord", "add", "w+1", "w"});
  CHECK(add.code == 0);
  CHECK(field(add.out, "result") == "w*2");

  auto rank = run_cli({"space", "rank", "ord(w^2*3)"});
  CHECK(rank.code == 0);
  CHECK(field(rank.out, "rank") == "3");
  CHECK(field(rank.out, "penultimate") == "3");
  CHECK(field(rank.out, "final") == "empty");

  auto degree = run_cli({"degree", "sum(ord(w),cantor)"});
  CHECK(degree.code == 0);
  CHECK(field(degree.out, "kind") == "dull");
  CHECK(field(degree.out, "degree") == "2");

  auto divmod = run_cli({"ord", "divmod", "w^2*3+w*2+5", "1"});
  CHECK(field(divmod.out, "q") == "w*3+2");
  CHECK(field(divmod.out, "r") == "5");

  auto cmp = run_cli({"ord", "cmp", "w", "5"});
  CHECK(field(cmp.out, "result") == "GT");
}

TEST_CASE("cli inputs echo in canonical form") {
  auto r = run_cli({"ord", "add", "3+w", "1+1"});
  CHECK(r.out.find("input: w\n") != std::string::npos);
  CHECK(r.out.find("input: 2\n") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"ord", "add", "w^", "w"}).code == 2);        // grammar
  CHECK(run_cli({"nonsense"}).code == 2);                     // unknown verb
  CHECK(run_cli({"ord", "add", "w"}).code == 2);              // missing argument
  CHECK(run_cli({}).code == 2);                               // no verb
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"space", "rank", "torus"}).code == 2);       // bad space
  CHECK(run_cli({"ideal", "factor", "ord(w)", "[0,w]->0"}).code == 2);  // unit ideal
  CHECK(run_cli({"demo", "unknown"}).code == 2);
  CHECK(run_cli({"complete", "psi", "[0,5]->1"}).code == 2);  // gap on ord(w)
  CHECK(run_cli({"ideal", "decompose", "ord(w)", "[0,w]->1"}).code == 3);
  CHECK(run_cli({"ideal", "decompose", "cantor", "cyl()->2"}).code == 3);

  auto bad = run_cli({"ord", "add", "w^", "w"});
  CHECK(bad.out.empty());
  CHECK(bad.err.find("position") != std::string::npos);
}

TEST_CASE("cli round-trips its own canonical output") {
  auto add = run_cli({"ord", "add", "w*2+1", "w^2"});
  std::string result = field(add.out, "result");
  CHECK(parse_ordinal(result) == parse_ordinal("w^2"));
  auto again = run_cli({"ord", "add", result, "0"});
  CHECK(field(again.out, "result") == result);

  auto product = run_cli({"ideal", "product", "ord(w)", "[0,7]", "[0,3]", "[0,3]"});
  CHECK(product.code == 0);
  std::string fn = field(product.out, "result");
  Space sw = parse_space("ord(w)");
  CHECK(parse_step_function(fn, sw) ==
        parse_step_function("[0,3]->3,[4,7]->1,[8,w]->0", sw));

  auto psi_out = run_cli({"complete", "psi", "[0,3]->2,[4,w]->5"});
  CHECK(parse_ep_sequence(field(psi_out.out, "result")) ==
        parse_ep_sequence("pre[2,2,2,2]per[5]"));
  auto inv = run_cli({"complete", "inverse", field(psi_out.out, "result")});
  CHECK(parse_step_function(field(inv.out, "result"), sw) ==
        parse_step_function("[0,3]->2,[4,w]->5", sw));
}

TEST_CASE("cli reports are deterministic") {
  std::vector<std::vector<std::string>> commands = {
      {"ord", "mul", "w+1", "w"},
      {"space", "ed", "ord(w)"},
      {"degree", "ord(w^3)"},
      {"ideal", "factor", "ord(w)", "[0,3]->2,[4,w]->1"},
      {"complete", "divisible", "per[1,0]", "2"},
      {"demo", "dull-degrees"},
      {"--json", "space", "rank", "ord(w^2)"},
      {"ideal", "factor", "ord(w)", "[0,3]->2,[4,w]->1", "--json"},
  };
  for (const auto& cmd : commands) {
    auto first = run_cli(cmd);
    auto second = run_cli(cmd);
    CHECK(first.code == 0);
    CHECK(strip_time(first.out) == strip_time(second.out));
  }
}

TEST_CASE("cli json payloads are well-formed with pinned schema") {
  auto factor = run_cli({"--json", "ideal", "factor", "ord(w)", "[0,3]->2,[4,w]->1"});
  auto j = nlohmann::json::parse(factor.out);
  CHECK(j["verb"] == "ideal factor");
  CHECK(j["inputs"].size() == 2);
  CHECK(j["result"]["chain"].size() == 2);
  CHECK(j["result"]["chain"][0] == "[0,w]");
  CHECK(j["result"]["chain"][1] == "[0,3]");
  CHECK(j["result"]["max"] == 2);

  auto rank = run_cli({"--json", "space", "rank", "cantor"});
  auto jr = nlohmann::json::parse(rank.out);
  CHECK(jr["result"]["rank"] == "0");
  CHECK(jr["result"]["final"] == "perfect");
  CHECK(jr["result"]["penultimate"].is_null());

  auto divisible = run_cli({"--json", "complete", "divisible", "per[1,0]", "2"});
  auto jd = nlohmann::json::parse(divisible.out);
  CHECK(jd["result"]["divisible"] == false);

  auto yes = run_cli({"--json", "complete", "divisible", "per[4]", "2"});
  auto jy = nlohmann::json::parse(yes.out);
  CHECK(jy["result"]["divisible"] == true);
  CHECK(jy["result"]["f"] == "per[2]");
  CHECK(jy["result"]["e"] == "per[0]");
}

TEST_CASE("demos pass and report assertion totals") {
  for (const char* name : {"sharp-degrees", "dull-degrees", "factorization", "completion"}) {
    auto r = run_cli({"demo", name});
    CHECK(r.code == 0);
    CHECK(r.out.find(" FAIL") == std::string::npos);
    std::string summary = field(r.out, "assertions");
    CHECK_FALSE(summary.empty());
    auto slash = summary.find('/');
    CHECK(summary.substr(0, slash) == summary.substr(slash + 1));
  }
  auto sharp = run_cli({"demo", "sharp-degrees"});
  CHECK(sharp.out.find("alpha=2 n=3 space=ord(w^2*3) rank=3 degree=2 count=3 ok") !=
        std::string::npos);
  CHECK(sharp.out.find("alpha=0 n=1 space=ord(0) rank=1 degree=0 count=1 ok") !=
        std::string::npos);
  auto completion = run_cli({"demo", "completion"});
  CHECK(completion.out.find("n=2 g=per[1,0] divisible=false certificate=") !=
        std::string::npos);
}
