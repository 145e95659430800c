#include "whvi/commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <chrono>

using namespace whvi;
using json = nlohmann::json;

TEST_CASE("repro passes with the documented flags") {
  const auto t0 = std::chrono::steady_clock::now();
  const CommandResult r = cmd_repro();
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 10.0);
  CHECK(r.exit_code == exit_code::ok);
  const json j = json::parse(r.json);
  CHECK(j["failed"] == false);
  int flags = 0;
  for (const auto& row : j["rows"]) {
    CHECK(row["status"] != "FAIL");
    if (row["status"] == "FLAG") {
      ++flags;
      CHECK(row["instance"] == "ex4_5");
    }
  }
  CHECK(flags == 3);
  CHECK(r.text.find("FLAG") != std::string::npos);
}

TEST_CASE("check report carries the same numbers in text and JSON") {
  const CommandResult r = cmd_check(builtin_instance("ex4_1b"));
  CHECK(r.exit_code == exit_code::ok);
  const json j = json::parse(r.json);
  CHECK(j["instance"] == "ex4_1b");
  bool saw_witness = false;
  for (const auto& row : j["rows"]) {
    CHECK(r.text.find(row["result"].get<std::string>()) != std::string::npos);
    for (const auto& cell : row["cells"]) {
      const auto& w = cell["verdict"]["witness"];
      if (w.is_null()) continue;
      saw_witness = true;
      // numbers are printed with the JSON formatter in both outputs
      CHECK(r.text.find(w[0].dump()) != std::string::npos);
      CHECK(r.text.find(w[1].dump()) != std::string::npos);
    }
  }
  CHECK(saw_witness);
}

TEST_CASE("solve reports") {
  SUBCASE("solved instance") {
    const CommandResult r = cmd_solve(builtin_instance("ex4_2"));
    CHECK(r.exit_code == exit_code::ok);
    const json j = json::parse(r.json);
    CHECK(j["status"] == "SOLVED");
    REQUIRE(j["points"].size() == 1);
    CHECK(j["points"][0]["residual"].get<double>() <= 1e-10);
  }
  SUBCASE("divergent instance is a normal outcome") {
    const CommandResult r = cmd_solve(builtin_instance("ex4_2_inf_shifted"));
    CHECK(r.exit_code == exit_code::ok);
    const json j = json::parse(r.json);
    CHECK(j["status"] == "DIVERGED");
    CHECK(j["trace"].size() >= 2);
  }
}

TEST_CASE("oracle report") {
  const CommandResult r = cmd_oracle(builtin_instance("ex4_3"), {0.05, 2.0});
  CHECK(r.exit_code == exit_code::ok);
  const json j = json::parse(r.json);
  REQUIRE(j["representatives"].size() == 1);
  CHECK(j["representatives"][0]["natural_residual"].get<double>() <=
        j["representatives"][0]["tolerance"].get<double>());
  CHECK(j["f_inf_copositivity_minimum"]["value"].get<double>() == doctest::Approx(0.0));
}
