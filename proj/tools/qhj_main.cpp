// Command-line front end: spectra tables, eigenfunction samples, residue
// sets, symmetry classification, and the full adjudication report.
//
// Exit codes: 0 success, 1 usage/parse error, 2 computation error,
// 3 verification found at least one mismatch verdict.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhj/qhj.hpp"

namespace {

using qhj::Complex;
using ordered_json = nlohmann::ordered_json;

// Accepts bare reals ("1.5", "-2"), pure imaginaries ("2i", "-i"), and the
// combined form "a+bi" / "a-bi".
std::optional<Complex> parse_complex(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const bool has_i = text.back() == 'i' || text.back() == 'I';
  auto parse_real = [](const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
  };
  if (!has_i) {
    double re = 0.0;
    if (!parse_real(text, re)) return std::nullopt;
    return Complex(re, 0.0);
  }
  std::string body = text.substr(0, text.size() - 1);
  // split at the last +/- that is not an exponent sign and not leading
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto parse_imag_part = [&](std::string s, double& out) {
    if (s.empty() || s == "+") {
      out = 1.0;
      return true;
    }
    if (s == "-") {
      out = -1.0;
      return true;
    }
    return parse_real(s, out);
  };
  if (split == std::string::npos) {
    double im = 0.0;
    if (!parse_imag_part(body, im)) return std::nullopt;
    return Complex(0.0, im);
  }
  double re = 0.0, im = 0.0;
  if (!parse_real(body.substr(0, split), re)) return std::nullopt;
  if (!parse_imag_part(body.substr(split), im)) return std::nullopt;
  return Complex(re, im);
}

// Round-trip decimal string; the same serializer the JSON writer uses, so
// CSV and JSON carry identical digits.
std::string dtos(double v) { return nlohmann::json(v == 0.0 ? 0.0 : v).dump(); }

struct PotentialOptions {
  std::string kind;
  std::string v1, v2, alpha, v0, q;
  std::string spec_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--kind", kind, "morse | poschl_teller");
    cmd->add_option("--v1", v1, "Morse v1 (complex, e.g. 1, -2.5, 0+1i)");
    cmd->add_option("--v2", v2, "Morse v2");
    cmd->add_option("--v0", v0, "Poschl-Teller v0");
    cmd->add_option("--q", q, "Poschl-Teller q");
    cmd->add_option("--alpha", alpha, "range parameter alpha");
    cmd->add_option("--spec", spec_path, "JSON file with {kind, params}");
  }

  qhj::PotentialSpec build() const {
    if (!spec_path.empty()) {
      std::ifstream in(spec_path);
      if (!in) throw CLI::ValidationError("--spec", "cannot open " + spec_path);
      nlohmann::json j;
      try {
        in >> j;
        return qhj::potential_from_json(j);
      } catch (const std::exception& e) {
        throw CLI::ValidationError("--spec", e.what());
      }
    }
    auto need = [&](const std::string& text, const char* name) {
      const auto z = parse_complex(text);
      if (!z) throw CLI::ValidationError(name, "expected a complex value like 1.5 or 0+1i");
      return *z;
    };
    if (kind == "morse")
      return qhj::GeneralizedMorse{need(v1, "--v1"), need(v2, "--v2"), need(alpha, "--alpha")};
    if (kind == "poschl_teller")
      return qhj::PoschlTeller{need(v0, "--v0"), need(q, "--q"), need(alpha, "--alpha")};
    throw CLI::ValidationError("--kind", "must be morse or poschl_teller");
  }
};

struct GridOptions {
  double x_min = 0.0, x_max = 0.0;
  int num_points = 0;
  bool has_min = false, has_max = false, has_n = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--x-min", x_min, "oracle box lower edge")->each([this](std::string) {
      has_min = true;
    });
    cmd->add_option("--x-max", x_max, "oracle box upper edge")->each([this](std::string) {
      has_max = true;
    });
    cmd->add_option("--num-points", num_points, "interior grid points")
        ->each([this](std::string) { has_n = true; });
  }

  qhj::GridOracleConfig resolve(const qhj::PotentialSpec& p) const {
    qhj::GridOracleConfig cfg = qhj::default_grid(p);
    if (has_min) cfg.x_min = x_min;
    if (has_max) cfg.x_max = x_max;
    if (has_n) cfg.num_points = num_points;
    return cfg;
  }
};

qhj::BranchPolicy parse_policy(const std::string& name) {
  if (name == "automatic") return qhj::BranchPolicy::automatic;
  if (name == "decay") return qhj::BranchPolicy::decay_filter;
  if (name == "residual") return qhj::BranchPolicy::min_grid_residual;
  if (name == "all") return qhj::BranchPolicy::keep_all;
  throw CLI::ValidationError("--policy", "must be automatic, decay, residual, or all");
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw qhj::Error("cannot write " + out_path);
  out << text;
}

std::string complex_csv(Complex z) { return dtos(z.real()) + "," + dtos(z.imag()); }

struct SpectrumRow {
  int n;
  std::string source;
  Complex energy;
};

std::vector<SpectrumRow> spectrum_rows(const qhj::PotentialSpec& p, int n_max,
                                       qhj::BranchPolicy policy,
                                       const qhj::GridOracleConfig& cfg, std::uint64_t seed) {
  const qhj::RiccatiProblem r = qhj::transform(p);
  const auto printed_set = qhj::applicable_printed_formulas(p);
  std::vector<SpectrumRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& f : printed_set) {
      const auto evs = qhj::printed_energy(f.id, f.params, n);
      for (const auto& e : evs) {
        const std::string label =
            f.id + (evs.size() > 1 ? (e.branch.lambda_sign > 0 ? "[+]" : "[-]") : "");
        rows.push_back({n, label, e.energy});
      }
    }
    for (const auto& pl : qhj::pipeline_levels(p, r, n, policy, cfg, seed))
      if (pl.selected) rows.push_back({n, "pipeline", pl.level.energy});
  }
  return rows;
}

int run_spectrum(const qhj::PotentialSpec& p, int n_max, qhj::BranchPolicy policy,
                 const qhj::GridOracleConfig& cfg, const std::string& format,
                 const std::string& out_path, std::uint64_t seed) {
  const auto rows = spectrum_rows(p, n_max, policy, cfg, seed);
  bool any_pipeline = false;
  for (const auto& row : rows) any_pipeline |= row.source == "pipeline";
  std::ostringstream os;
  if (format == "csv") {
    os << "n,source,re_energy,im_energy\n";
    for (const auto& row : rows)
      os << row.n << "," << row.source << "," << complex_csv(row.energy) << "\n";
  } else {
    ordered_json j;
    j["potential"] = qhj::to_json(p);
    j["levels"] = ordered_json::array();
    int current = -1;
    for (const auto& row : rows) {
      if (row.n != current) {
        j["levels"].push_back({{"n", row.n}, {"entries", ordered_json::array()}});
        current = row.n;
      }
      j["levels"].back()["entries"].push_back(
          {{"source", row.source}, {"energy", qhj::complex_to_json(row.energy)}});
    }
    os << j.dump(2) << "\n";
  }
  write_output(out_path, os.str());
  if (!any_pipeline) {
    std::cerr << "no pipeline level selected for any n <= " << n_max << "\n";
    return 2;
  }
  return 0;
}

int run_wavefunction(const qhj::PotentialSpec& p, int n, qhj::BranchPolicy policy,
                     const qhj::GridOracleConfig& cfg, int samples, const std::string& format,
                     const std::string& out_path, std::uint64_t seed) {
  const qhj::RiccatiProblem r = qhj::transform(p);
  const auto pls = qhj::pipeline_levels(p, r, n, policy, cfg, seed);
  const qhj::PipelineLevel* chosen = nullptr;
  for (const auto& pl : pls)
    if (pl.selected && pl.ef) {
      chosen = &pl;
      break;
    }
  if (!chosen) throw qhj::NoBoundState("no selected eigenfunction for n = " + std::to_string(n));
  std::ostringstream os;
  const double h = (cfg.x_max - cfg.x_min) / (samples - 1);
  if (format == "csv") {
    os << "x,re_psi,im_psi\n";
    for (int i = 0; i < samples; ++i) {
      const double x = cfg.x_min + i * h;
      const Complex v = qhj::eigenfunction_value(*chosen->ef, Complex(x, 0.0));
      os << dtos(x) << "," << complex_csv(v) << "\n";
    }
  } else {
    ordered_json j;
    j["potential"] = qhj::to_json(p);
    j["n"] = n;
    j["energy"] = qhj::complex_to_json(chosen->level.energy);
    j["samples"] = ordered_json::array();
    for (int i = 0; i < samples; ++i) {
      const double x = cfg.x_min + i * h;
      const Complex v = qhj::eigenfunction_value(*chosen->ef, Complex(x, 0.0));
      j["samples"].push_back({x, v.real(), v.imag()});
    }
    os << j.dump(2) << "\n";
  }
  write_output(out_path, os.str());
  return 0;
}

int run_residues(const qhj::PotentialSpec& p, int n_max, qhj::BranchPolicy policy,
                 const qhj::GridOracleConfig& cfg, const std::string& format,
                 const std::string& out_path, std::uint64_t seed) {
  const qhj::RiccatiProblem r = qhj::transform(p);
  std::ostringstream os;
  ordered_json j;
  j["potential"] = qhj::to_json(p);
  j["levels"] = ordered_json::array();
  std::ostringstream csv;
  csv << "n,re_energy,im_energy,re_b1,im_b1,re_b1p,im_b1p,re_b1pp,im_b1pp,re_lambda,im_lambda,"
         "re_a0,im_a0,re_c_const,im_c_const\n";
  bool any = false;
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& pl : qhj::pipeline_levels(p, r, n, policy, cfg, seed)) {
      if (!pl.selected || !pl.ef) continue;
      any = true;
      const auto& ef = *pl.ef;
      const qhj::ResidueSet rs = qhj::pole_residues(r, pl.level.energy);
      const Complex b1 = ef.exponent_at_0 + 0.5;
      const Complex b1p = r.kind == qhj::PotentialKind::poschl_teller ? -ef.exponent_at_plus1
                                                                      : Complex(0.0);
      const Complex b1pp = r.kind == qhj::PotentialKind::poschl_teller ? -ef.exponent_at_minus1
                                                                       : Complex(0.0);
      // lambda from the satisfied quantization relation
      const Complex lambda = r.kind == qhj::PotentialKind::morse
                                 ? b1 + double(n)
                                 : b1 + 2.0 * ef.exponent_at_plus1 + 2.0 * double(n);
      const Complex c_const =
          r.kind == qhj::PotentialKind::morse ? ef.exp_rate : Complex(0.0);
      const Complex a0 = c_const;  // constant term of chi at infinity
      ordered_json lvl;
      lvl["n"] = n;
      lvl["energy"] = qhj::complex_to_json(pl.level.energy);
      lvl["branch"] = {{"b1_sign", pl.level.branch.b1_sign},
                       {"lambda_sign", pl.level.branch.lambda_sign},
                       {"b1p_index", pl.level.branch.b1p_index}};
      lvl["b1"] = qhj::complex_to_json(b1);
      lvl["b1_pair"] = {qhj::complex_to_json(rs.b1_pair[0]), qhj::complex_to_json(rs.b1_pair[1])};
      if (r.kind == qhj::PotentialKind::poschl_teller) {
        lvl["b1p"] = qhj::complex_to_json(b1p);
        lvl["b1p_pair"] = {qhj::complex_to_json(rs.b1p_pair[0]),
                           qhj::complex_to_json(rs.b1p_pair[1])};
        lvl["b1pp"] = qhj::complex_to_json(b1pp);
      }
      lvl["lambda"] = qhj::complex_to_json(lambda);
      lvl["lambda_pair"] = {qhj::complex_to_json(rs.lambda_pair[0]),
                            qhj::complex_to_json(rs.lambda_pair[1])};
      lvl["a0"] = qhj::complex_to_json(a0);
      lvl["c_const"] = qhj::complex_to_json(c_const);
      j["levels"].push_back(lvl);
      csv << n << "," << complex_csv(pl.level.energy) << "," << complex_csv(b1) << ","
          << complex_csv(b1p) << "," << complex_csv(b1pp) << "," << complex_csv(lambda) << ","
          << complex_csv(a0) << "," << complex_csv(c_const) << "\n";
    }
  }
  os << (format == "csv" ? csv.str() : j.dump(2) + "\n");
  write_output(out_path, os.str());
  if (!any) {
    std::cerr << "no selected levels up to n_max\n";
    return 2;
  }
  return 0;
}

int run_classify(const qhj::PotentialSpec& p, bool emit_spec, const std::string& out_path,
                 std::uint64_t seed) {
  std::ostringstream os;
  if (emit_spec) {
    os << qhj::to_json(p).dump(2) << "\n";
  } else {
    ordered_json j;
    j["symmetry"] = qhj::to_string(qhj::classify_symmetry(p, seed));
    if (const auto* t = std::get_if<qhj::PoschlTeller>(&p))
      j["reality_condition"] = qhj::reality_condition(t->v0, t->q);
    else
      j["reality_condition"] = nullptr;
    os << j.dump(2) << "\n";
  }
  write_output(out_path, os.str());
  return 0;
}

int run_verify(const qhj::PotentialSpec& p, int n_max, const qhj::GridOracleConfig& cfg,
               const std::string& out_path, std::uint64_t seed) {
  const auto rep = qhj::adjudicate(p, n_max, cfg, seed);
  write_output(out_path, rep.dump() + "\n");
  return rep.any_mismatch ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum Hamilton-Jacobi spectra for exponential-type complex potentials"};
  app.require_subcommand(1);

  std::string format = "json", out_path, policy_name = "automatic";
  int n_max = 0, wf_n = 0, wf_samples = 401;
  bool emit_spec = false;

  PotentialOptions pot_spectrum, pot_wf, pot_res, pot_verify, pot_classify;
  GridOptions grid_spectrum, grid_wf, grid_res, grid_verify;

  auto* spectrum = app.add_subcommand("spectrum", "quoted and pipeline energies for n <= n-max");
  pot_spectrum.attach(spectrum);
  grid_spectrum.attach(spectrum);
  spectrum->add_option("--n-max", n_max, "largest quantum number");
  spectrum->add_option("--format", format, "json | csv");
  spectrum->add_option("--out", out_path, "output path (default stdout)");
  spectrum->add_option("--policy", policy_name, "automatic | decay | residual | all");

  auto* wavefunction = app.add_subcommand("wavefunction", "sample psi on a grid");
  pot_wf.attach(wavefunction);
  grid_wf.attach(wavefunction);
  wavefunction->add_option("--n", wf_n, "quantum number");
  wavefunction->add_option("--samples", wf_samples, "number of sample points");
  wavefunction->add_option("--format", format, "json | csv");
  wavefunction->add_option("--out", out_path, "output path");
  wavefunction->add_option("--policy", policy_name, "branch policy");

  auto* residues = app.add_subcommand("residues", "residue set per selected level");
  pot_res.attach(residues);
  grid_res.attach(residues);
  residues->add_option("--n-max", n_max, "largest quantum number");
  residues->add_option("--format", format, "json | csv");
  residues->add_option("--out", out_path, "output path");
  residues->add_option("--policy", policy_name, "branch policy");

  auto* verify = app.add_subcommand("verify", "full adjudication report (exit 3 on mismatch)");
  pot_verify.attach(verify);
  grid_verify.attach(verify);
  verify->add_option("--n-max", n_max, "largest quantum number");
  verify->add_option("--out", out_path, "output path");

  auto* classify = app.add_subcommand("classify", "symmetry class and reality condition");
  pot_classify.attach(classify);
  classify->add_flag("--emit-spec", emit_spec, "print the potential JSON and exit");
  classify->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const std::uint64_t seed = qhj::default_seed();
  try {
    if (spectrum->parsed()) {
      const auto p = pot_spectrum.build();
      return run_spectrum(p, n_max, parse_policy(policy_name), grid_spectrum.resolve(p), format,
                          out_path, seed);
    }
    if (wavefunction->parsed()) {
      const auto p = pot_wf.build();
      return run_wavefunction(p, wf_n, parse_policy(policy_name), grid_wf.resolve(p), wf_samples,
                              format, out_path, seed);
    }
    if (residues->parsed()) {
      const auto p = pot_res.build();
      return run_residues(p, n_max, parse_policy(policy_name), grid_res.resolve(p), format,
                          out_path, seed);
    }
    if (verify->parsed()) {
      const auto p = pot_verify.build();
      return run_verify(p, n_max, grid_verify.resolve(p), out_path, seed);
    }
    if (classify->parsed()) {
      return run_classify(pot_classify.build(), emit_spec, out_path, seed);
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const qhj::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
