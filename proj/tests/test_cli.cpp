#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhj/potentials.hpp"

#ifndef QHJ_CLI_PATH
#define QHJ_CLI_PATH "./qhj"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QHJ_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

TEST_CASE("cli spectrum: csv rows carry the pipeline energies") {
  const auto res = run_cli("spectrum --kind morse --v1 1 --v2 6 --alpha 1 --n-max 2 --format csv");
  CHECK(res.exit_code == 0);
  const auto lines = split(res.out, '\n');
  REQUIRE(lines.size() > 1);
  CHECK(lines[0] == "n,source,re_energy,im_energy");
  bool found = false;
  for (const auto& line : lines) {
    const auto cells = split(line, ',');
    if (cells.size() == 4 && cells[0] == "0" && cells[1] == "pipeline") {
      CHECK(std::abs(std::stod(cells[2]) + 6.25) < 1e-12);
      CHECK(std::abs(std::stod(cells[3])) < 1e-12);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("cli spectrum: csv and json numbers agree to 15 significant digits") {
  const std::string flags = "--kind poschl_teller --v0 1 --q 1 --alpha 1 --n-max 0";
  const auto csv = run_cli("spectrum " + flags + " --format csv");
  const auto js = run_cli("spectrum " + flags + " --format json");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(js.exit_code == 0);
  const auto j = nlohmann::json::parse(js.out);
  std::vector<std::pair<std::string, double>> json_entries;
  for (const auto& lvl : j.at("levels"))
    for (const auto& e : lvl.at("entries"))
      json_entries.push_back({e.at("source").get<std::string>(), e.at("energy")[0].get<double>()});
  const auto lines = split(csv.out, '\n');
  std::size_t k = 0;
  for (const auto& line : lines) {
    const auto cells = split(line, ',');
    if (cells.size() != 4 || cells[0] == "n") continue;
    REQUIRE(k < json_entries.size());
    CHECK(cells[1] == json_entries[k].first);
    const double a = std::stod(cells[2]), b = json_entries[k].second;
    CHECK(std::abs(a - b) <= 1e-15 * std::max(1.0, std::abs(b)));
    ++k;
  }
  CHECK(k == json_entries.size());
}

TEST_CASE("cli classify and the emit-spec round trip") {
  const auto res = run_cli("classify --kind morse --v1 1 --v2 2 --alpha 0+1i");
  CHECK(res.exit_code == 0);
  CHECK(nlohmann::json::parse(res.out).at("symmetry") == "pt_symmetric");

  const auto spec = run_cli("classify --kind morse --v1 -3+4i --v2 7+14i --alpha 1 --emit-spec");
  CHECK(spec.exit_code == 0);
  const qhj::PotentialSpec p = qhj::potential_from_json(nlohmann::json::parse(spec.out));
  const auto& m = std::get<qhj::GeneralizedMorse>(p);
  CHECK(m.v1 == qhj::Complex(-3.0, 4.0));
  CHECK(m.v2 == qhj::Complex(7.0, 14.0));
  CHECK(m.alpha == qhj::Complex(1.0));
}

TEST_CASE("cli verify: mismatch verdicts set exit code 3") {
  const auto res =
      run_cli("verify --kind poschl_teller --v0 1 --q 1 --alpha 1 --n-max 0");
  CHECK(res.exit_code == 3);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("any_mismatch").get<bool>());
  CHECK(j.at("levels")[0].at("verdicts").at("eq48[-]_vs_oracle") == "mismatch");
}

TEST_CASE("cli verify: clean Morse report exits 0 and is seed-reproducible") {
  const std::string flags =
      "verify --kind morse --v1 1 --v2 6 --alpha 1 --n-max 1 --num-points 2000";
  const auto a = run_cli(flags);
  const auto b = run_cli(flags);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli wavefunction: columnar samples") {
  const auto res = run_cli(
      "wavefunction --kind morse --v1 1 --v2 6 --alpha 1 --n 1 --samples 51 --format csv");
  CHECK(res.exit_code == 0);
  const auto lines = split(res.out, '\n');
  REQUIRE(lines.size() >= 52);
  CHECK(lines[0] == "x,re_psi,im_psi");
  const auto cells = split(lines[1], ',');
  REQUIRE(cells.size() == 3);
}

TEST_CASE("cli residues: selected level data") {
  const auto res = run_cli(
      "residues --kind poschl_teller --v0 1 --q 1 --alpha 1 --n-max 0 --format json");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  REQUIRE(j.at("levels").size() == 1);
  const auto& lvl = j.at("levels")[0];
  // b1 = 1/2 + sqrt(-E), b1p = b1pp = (sqrt 5 - 1)/2
  CHECK(std::abs(lvl.at("b1")[0].get<double>() - 1.1180339887) < 1e-8);
  CHECK(std::abs(lvl.at("b1p")[0].get<double>() - 0.6180339887) < 1e-8);
  CHECK(std::abs(lvl.at("b1pp")[0].get<double>() - lvl.at("b1p")[0].get<double>()) < 1e-12);
}

TEST_CASE("cli rejects malformed input with exit 1") {
  CHECK(run_cli("spectrum --kind morse --v1 nope --v2 6 --alpha 1").exit_code == 1);
  CHECK(run_cli("spectrum --kind box --v1 1 --v2 6 --alpha 1").exit_code == 1);
  CHECK(run_cli("bogus-subcommand").exit_code == 1);
  CHECK(run_cli("spectrum --kind morse --v1 1 --v2 6 --alpha 1 --policy nope").exit_code == 1);
}

TEST_CASE("cli computation failures exit 2") {
  // v2 = 0 Morse has no selected level at any n
  const auto res = run_cli("spectrum --kind morse --v1 1 --v2 0 --alpha 1 --n-max 2");
  CHECK(res.exit_code == 2);
  const auto wf = run_cli("wavefunction --kind morse --v1 1 --v2 0 --alpha 1 --n 0");
  CHECK(wf.exit_code == 2);
}

TEST_CASE("cli accepts a potential from a JSON spec file") {
  const auto spec = run_cli("classify --kind poschl_teller --v0 1 --q 1 --alpha 1 --emit-spec");
  const std::string path = "/tmp/qhj_cli_spec_test.json";
  {
    std::ofstream out(path);
    out << spec.out;
  }
  const auto res = run_cli("spectrum --spec " + path + " --n-max 0 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("pipeline") != std::string::npos);
  std::remove(path.c_str());
}
