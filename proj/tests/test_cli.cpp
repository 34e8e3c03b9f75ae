#include "doctest.h"
#include "grid.hpp"
#include "reciplab/errors.hpp"
#include "sweep.hpp"

using namespace reciplab;
using namespace reciplab::cli;

TEST_CASE("grid parsing") {
  auto g = parse_grid("# comment\nn = 0..2\nu = 2, zeta5  # trailing\n\nk=3\n", "g");
  REQUIRE(g.entries.size() == 3);
  CHECK(g.at("n") == std::vector<std::string>{"0", "1", "2"});
  CHECK(g.at("u") == std::vector<std::string>{"2", "zeta5"});
  CHECK(g.at("k") == std::vector<std::string>{"3"});
  apply_assignment(g, "k=1..2");
  CHECK(g.at("k").size() == 2);
  CHECK_THROWS_AS(parse_grid("n 3\n", "g"), ConfigError);
  CHECK_THROWS_AS(parse_grid("n = 3..1\n", "g"), ConfigError);
  CHECK_THROWS_AS(parse_grid("n = 1\nn = 2\n", "g"), ConfigError);
  CHECK_THROWS_AS(parse_grid("n = 1,,2\n", "g"), ConfigError);
  try {
    parse_grid("n = 1\nh = a..b\n", "grid.txt");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("grid.txt:2:") != std::string::npos);
  }
}

TEST_CASE("sweep examples") {
  Grid g;
  apply_assignment(g, "n=0..2");
  apply_assignment(g, "h=1..4");
  apply_assignment(g, "k=1..4");
  apply_assignment(g, "u=2");
  auto reports = run_sweep("th11", g, 1);
  CHECK(!reports.empty());
  for (const auto& r : reports) CHECK(r.status == "pass");

  Grid pole;
  apply_assignment(pole, "n=1");
  apply_assignment(pole, "h=5");
  apply_assignment(pole, "k=2");
  apply_assignment(pole, "u=zeta5");
  auto pr = run_sweep("th11", pole, 1);
  REQUIRE(pr.size() == 1);
  CHECK(pr[0].status == "skipped-pole");

  CHECK_THROWS_AS(run_sweep("th99", g, 1), ConfigError);
  Grid bad;
  apply_assignment(bad, "zzz=1");
  CHECK_THROWS_AS(run_sweep("th11", bad, 1), ConfigError);
}

TEST_CASE("sweep output is independent of the job count") {
  for (const auto& id : {"th4", "twisted", "witt", "remark2"}) {
    auto g = default_grid(id);
    auto a = run_sweep(id, g, 1), b = run_sweep(id, g, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(report_json(a[i], false).dump() == report_json(b[i], false).dump());
  }
}

TEST_CASE("sweep points come in grid order") {
  Grid g;
  apply_assignment(g, "n=1");
  apply_assignment(g, "h=3, 1, 2");
  apply_assignment(g, "k=1");
  apply_assignment(g, "u=2");
  auto r = run_sweep("th11", g, 2);
  REQUIRE(r.size() == 3);
  CHECK(r[0].params["h"] == "1");
  CHECK(r[2].params["h"] == "3");
}
