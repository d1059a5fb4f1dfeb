#include <doctest.h>

#include <sstream>

#include "config.hpp"
#include "experiments.hpp"
#include "format.hpp"

using namespace risgg::tools;

TEST_SUITE("tools") {
  TEST_CASE("shortest round-trip formatting") {
    CHECK(fmt(0.1) == "0.1");
    CHECK(fmt(1e-300) == "1e-300");
    CHECK(std::stod(fmt(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(fmt(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(fmt(-std::numeric_limits<double>::infinity()) == "-inf");
  }

  TEST_CASE("table writer") {
    std::ostringstream os;
    TableWriter t(os, {{"seed", "3"}}, {"a", "b"});
    t.row({"1", "2"});
    CHECK(os.str() == "# seed = 3\na,b\n1,2\n");
    CHECK_THROWS_AS(t.row({"1"}), std::logic_error);
  }

  TEST_CASE("config parsing") {
    const auto c = parse_config(
        "# comment\n"
        "experiment = ser-curve\n"
        "n_elements = 4, 8\n"
        "snr_db = 0:2.5:10   # inline comment\n"
        "noise_cases = laplacian, 1/3\n"
        "modulation = 16-qam\n"
        "trials = 5000\n",
        default_config(Experiment::ser_curve));
    CHECK(c.n_elements == std::vector<unsigned>{4, 8});
    CHECK(c.snr_db == std::vector<double>{0, 2.5, 5, 7.5, 10});
    REQUIRE(c.parsed_noise_cases().size() == 2);
    CHECK(c.parsed_noise_cases()[1].k == 3);
    CHECK(c.parsed_modulation().order == 16);
    CHECK_NOTHROW(c.validate());
  }

  TEST_CASE("config errors") {
    const auto base = default_config(Experiment::ser_curve);
    CHECK_THROWS_AS(parse_config("colour = blue\n", base), ConfigError);
    CHECK_THROWS_AS(parse_config("no equals sign\n", base), ConfigError);
    CHECK_THROWS_AS(parse_config("seed = -3\n", base), ConfigError);
    CHECK_THROWS_AS(parse_config("rho = abc\n", base), ConfigError);
    CHECK_THROWS_AS(parse_config("snr_db = 0:0:10\n", base), ConfigError);
    CHECK_THROWS_AS(parse_config("experiment = diversity\n", base), ConfigError);
    CHECK_THROWS_AS(parse_config("snr_db = 3, 2, 1\n", base).validate(), ConfigError);
    CHECK_THROWS_AS(parse_config("noise_cases = purple\n", base).parsed_noise_cases(), ConfigError);
    CHECK_THROWS_AS(parse_config("trials = 10\n", base).validate(), ConfigError);
    CHECK_THROWS_AS(parse_config("modulation = 6-psk\n", base).parsed_modulation(), ConfigError);

    auto div = default_config(Experiment::diversity);
    CHECK_NOTHROW(div.validate());
    CHECK_THROWS_AS(parse_config("snr_db = 0:2:40\n", div).validate(), ConfigError);

    auto sweep = default_config(Experiment::distance_sweep);
    CHECK_THROWS_AS(parse_config("d1 = 1, 5.5\n", sweep).validate(), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/file.cfg", Experiment::ser_curve), ConfigError);
  }

  TEST_CASE("threads and output do not appear in the output header") {
    auto a = default_config(Experiment::ser_curve);
    auto b = a;
    b.threads = 7;
    b.output = "x.csv";
    CHECK(a.entries() == b.entries());
  }

  TEST_CASE("diversity self test recovers the reference slope") {
    auto c = parse_config("n_elements = 5\nnoise_cases = gaussian\npower_law_self_test = true\n",
                          default_config(Experiment::diversity));
    std::ostringstream out, log;
    run_diversity(c, out, log);
    std::istringstream in(out.str());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("n_elements", 0) == 0) continue;
      std::vector<std::string> cells;
      std::stringstream ss(line);
      for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
      REQUIRE(cells.size() == 9);
      CHECK(std::stod(cells[7]) == doctest::Approx(std::stod(cells[8])).epsilon(1e-9));
      ++rows;
    }
    CHECK(rows == 31);
  }
}
