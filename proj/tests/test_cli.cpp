#include "doctest.h"

#include <sstream>

#include "app.hpp"
#include "test_support.hpp"

using goodline::cli::run_command;
using nlohmann::json;

namespace {

const std::string kLine = "0,0,0,1,0;0,0,0,0,1";

goodline::cli::Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  auto r = run_command(args, out);
  if (!r.report.is_null()) CHECK(json::parse(out.str()) == r.report);
  return r;
}

std::vector<std::string> example(std::string cmd, std::vector<std::string> extra = {}) {
  std::vector<std::string> a{std::move(cmd), "--field", "GF(2)", "--cubic", goodline::testing::kExampleCubic};
  a.insert(a.end(), extra.begin(), extra.end());
  return a;
}

}  // namespace

TEST_CASE("report layout") {
  const auto r = run(example("smooth"));
  CHECK(r.exit_code == 0);
  CHECK(r.report["results"] == json{{"smooth", true}});
  CHECK(r.report["command"] == "smooth");
  CHECK(r.report["field"] == "GF(2)");
  CHECK(r.report["version"] == goodline::cli::kVersion);
  CHECK(r.report.contains("timing_ms"));
  CHECK(r.report["inputs"]["cubic"] == goodline::testing::kExampleCubic);
}

TEST_CASE("example subcommands") {
  CHECK(run(example("hermitian")).report["results"]["hermitian"] == false);
  CHECK(run({"hermitian", "--cubic", goodline::testing::kFermatCubic}).report["results"]["hermitian"] == true);

  const auto cls = run(example("classify-line", {"--line", kLine}));
  CHECK(cls.report["results"] == json{{"class", "Good"}, {"reason", "None"}});

  const auto lines = run(example("lines"));
  const auto& list = lines.report["results"]["lines"];
  CHECK(lines.report["results"]["count"] == list.size());
  CHECK(std::find(list.begin(), list.end(), json(kLine)) != list.end());

  const auto disc = run(example("discriminant", {"--line", kLine}));
  CHECK(disc.report["results"]["degree"] == 5);
  CHECK(disc.report["results"]["smooth"] == true);
  CHECK(disc.report["results"]["etale"] == true);
  CHECK(disc.report["results"]["Q0"] == "y0^2 + y1^2");

  const auto cov = run(example("cover-count", {"--line", kLine, "--m-max", "3"}));
  CHECK(cov.report["results"]["q"] == 2);
  CHECK(cov.report["results"]["counts"].size() == 3);
  CHECK(cov.report["results"]["counts"][0].contains("Ntilde"));

  const auto ident = run(example("verify-identity", {"--line", kLine, "--m-max", "3"}));
  CHECK(ident.report["results"]["pass"] == true);

  const auto cart = run(example("cartier", {"--line", kLine}));
  const auto zeta = run(example("zeta", {"--line", kLine}));
  CHECK(zeta.report["results"]["L_C"].size() == 13);
  CHECK(zeta.report["results"]["L_Ctilde"].size() == 23);
  CHECK(cart.report["results"]["p_rank"] == zeta.report["results"]["C"]["p_rank"]);
  CHECK(cart.report["results"]["matrix"].size() == 6);

  const auto prym = run(example("prym", {"--line", kLine, "--m-max", "11", "--identity-m", "2"}));
  CHECK(prym.report["results"]["L_Prym"].size() == 11);
  CHECK(prym.report["results"]["prym_dimension"] == 5);
  CHECK(prym.report["results"]["identity"].size() == 2);
  CHECK(prym.report["results"]["identity"][1]["pass"] == true);

  const auto quad = run({"quadric-parity", "--hyperbolic", "3"});
  CHECK(quad.report["results"]["generators"] == 30);
  CHECK(quad.report["results"]["class_sizes"] == json{15, 15});
  CHECK(quad.report["results"]["pass"] == true);
  const auto quad2 = run({"quadric-parity", "--field", "GF(3)", "--quadric", "0,1,0,0,0,0,0,0,1,0"});
  CHECK(quad2.report["results"]["generators"] == 8);
  CHECK(quad2.report["results"]["pass"] == true);
}

TEST_CASE("text output") {
  std::ostringstream out;
  auto args = example("smooth", {"--text"});
  CHECK(run_command(args, out).exit_code == 0);
  CHECK(out.str().find("results.smooth: true\n") != std::string::npos);
}

TEST_CASE("errors are structured with stable codes and exit codes") {
  auto r = run({"smooth", "--field", "GF(6)", "--cubic", "x0^3"});
  CHECK(r.exit_code == 3);
  CHECK(r.report["error"]["code"] == "not_prime");
  CHECK(r.report["error"]["kind"] == "input");

  r = run({"smooth"});
  CHECK(r.exit_code == 2);
  CHECK(r.report["error"]["code"] == "missing_option");

  r = run({"no-such-command"});
  CHECK(r.exit_code == 2);
  CHECK(r.report["error"]["kind"] == "usage");

  r = run({});
  CHECK(r.exit_code == 2);

  r = run(example("lines", {"--over", "GF(2^5)"}));
  CHECK(r.exit_code == 4);
  CHECK(r.report["error"]["code"] == "line_budget");

  r = run(example("classify-line", {"--line", "1,0,0,0,0;0,0,1,0,0"}));
  CHECK(r.exit_code == 3);
  CHECK(r.report["error"]["code"] == "not_on_cubic");

  r = run(example("zeta", {"--line", kLine, "--m-max", "5"}));
  CHECK(r.exit_code == 3);
  CHECK(r.report["error"]["code"] == "too_few_counts");

  r = run({"smooth", "--cubic", "x0^2 + "});
  CHECK(r.exit_code == 3);
  CHECK(r.report["error"]["code"] == "syntax_error");
}

TEST_CASE("help and version exit cleanly") {
  std::ostringstream out;
  CHECK(run_command({"--help"}, out).exit_code == 0);
  CHECK(out.str().find("quadric-parity") != std::string::npos);
  std::ostringstream v;
  CHECK(run_command({"--version"}, v).exit_code == 0);
  CHECK(v.str() == std::string(goodline::cli::kVersion) + "\n");
}

TEST_CASE("results do not depend on --threads") {
  const std::vector<std::vector<std::string>> cmds{
      example("lines", {"--over", "GF(2^2)"}), example("cover-count", {"--line", kLine, "--m-max", "8"}),
      example("verify-identity", {"--line", kLine, "--m-max", "3"}), {"quadric-parity", "--hyperbolic", "3"}};
  for (const auto& cmd : cmds) {
    json first;
    for (const char* t : {"1", "2", "5"}) {
      auto args = cmd;
      args.insert(args.end(), {"--threads", t});
      const auto r = run(args);
      REQUIRE(r.exit_code == 0);
      if (first.is_null())
        first = r.report["results"];
      else
        CHECK(r.report["results"] == first);
    }
  }
}
