// Copyright 2026 The critex Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "critex/cli.hpp"

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "critex/error.hpp"
#include "critex/exponent_engine.hpp"
#include "critex/grid_io.hpp"
#include "critex/report.hpp"
#include "critex/testfn.hpp"

namespace critex {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return buf.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write " + path);
  file << text;
  if (!file) throw IoError("write failed: " + path);
}

double number_or(const json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc.at(key).is_number()) throw ValidationError(std::string(key) + " must be a number");
  return doc.at(key).get<double>();
}

Rational rational_arg(const std::string& text, const char* name) {
  try {
    return Rational::parse(text);
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw ValidationError(std::string("bad rational for ") + name + ": " + text);
  }
}

void configure_logging() {
  static const bool once = [] {
    auto logger = spdlog::stderr_logger_mt("critex");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* level = std::getenv("CRITEX_LOG")) {
      spdlog::set_level(spdlog::level::from_str(level));
    }
    return true;
  }();
  (void)once;
}

void write_error(std::ostream& err, const char* kind, const std::string& message) {
  ordered_json doc;
  doc["error"] = kind;
  doc["message"] = message;
  err << doc.dump() << "\n";
}

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  // fraclap-verify
  int n = 1;
  std::string sigma = "1/2";
  std::string q = "2";
  // testfn-dump
  int m = 1;
  double p = 2.0;
  std::string eta = "1";
  double R = 1.0;
  int samples = 200;
  // simulate / sweep
  std::string series;
  std::string snapshot_dir;
  std::vector<double> p_values;
  int jobs = 1;
};

int exponent_cmd(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.input);
  const OperatorSpec spec = parse_operator(std::string_view(text));
  ordered_json doc = exponent_json(critical_exponent(spec));
  stamp(doc, text);
  emit(dump(doc), o.output, out);
  spdlog::info("p_c = {}", doc["p_c"].get<std::string>());
  return kExitOk;
}

int envelope_cmd(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.input);
  const Envelope env = lower_envelope(parse_operator(std::string_view(text)));
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "eta,j,slope,intercept\n";
    for (const auto& piece : env.pieces) {
      csv << piece.eta.to_string() << ',' << piece.j() << ',' << piece.line.slope.to_string()
          << ',' << piece.line.intercept.to_string() << '\n';
    }
    emit(csv.str(), o.output, out);
  } else {
    ordered_json doc = envelope_json(env);
    stamp(doc, text);
    emit(dump(doc), o.output, out);
  }
  return kExitOk;
}

int fraclap_cmd(const Options& o, std::ostream& out) {
  const Rational sigma = rational_arg(o.sigma, "sigma");
  const Rational q = rational_arg(o.q, "q");
  const FraclapVerification v = verify_fraclap(o.n, sigma, q);
  if (o.format == "csv") {
    emit(decay_table_csv(v), o.output, out);
  } else {
    ordered_json doc = fraclap_json(v);
    stamp(doc, "fraclap-verify n=" + std::to_string(o.n) + " sigma=" + sigma.to_string() +
                   " q=" + q.to_string());
    emit(dump(doc), o.output, out);
  }
  return kExitOk;
}

int testfn_cmd(const Options& o, std::ostream& out) {
  TestFunctionFamily fam{o.m, o.p, rational_arg(o.eta, "eta"), o.R};
  fam.validate();
  if (o.samples < 2) throw ValidationError("samples must be at least 2");
  emit(psi_table_csv(fam, o.samples), o.output, out);
  return kExitOk;
}

int simulate_cmd(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.input);
  const json doc = parse_json(text);
  SimConfig config = parse_sim_config(doc);
  if (!o.snapshot_dir.empty() && config.snapshot_every == 0) config.snapshot_every = 100;
  SimRun run = simulate(config);
  if (doc.contains("residual")) {
    const json& r = doc.at("residual");
    TestFunctionFamily fam{r.value("m", 2), config.p,
                           rational_arg(r.value("eta", std::string("1")), "eta"),
                           number_or(r, "R", 1.0)};
    fam.validate();
    run.weak_residual = weak_residual(run, config.spec, fam,
                                      rational_arg(r.value("q", std::string("2")), "q"));
  }
  ordered_json report = run_json(run, config);
  stamp(report, text);
  emit(dump(report), o.output, out);
  if (!o.series.empty()) emit(sup_series_csv(run), o.series, out);
  if (!o.snapshot_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(o.snapshot_dir, ec);
    if (ec) throw IoError("cannot create " + o.snapshot_dir);
    for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
      write_grid(o.snapshot_dir + "/u_" + std::to_string(k) + ".bin", run.snapshots[k].u);
    }
  }
  return kExitOk;
}

int sweep_cmd(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.input);
  const json doc = parse_json(text);
  const SimConfig config = parse_sim_config(doc);
  std::vector<double> ps = o.p_values;
  if (ps.empty() && doc.contains("p_values")) ps = doc.at("p_values").get<std::vector<double>>();
  if (o.jobs < 1) throw ValidationError("--jobs must be at least 1");
  const SweepResult result = sweep_p(config, ps, o.jobs);
  ordered_json report = sweep_json(result);
  stamp(report, text);
  emit(dump(report), o.output, out);
  return kExitOk;
}

}  // namespace

SimConfig parse_sim_config(const json& doc) {
  if (!doc.is_object()) throw ValidationError("simulation input must be an object");
  if (!doc.contains("operator")) throw ValidationError("missing operator");
  SimConfig config{parse_operator(doc.at("operator"))};
  if (doc.contains("data")) config.data = parse_data(doc.at("data"), config.spec);
  config.p = number_or(doc, "p", config.p);
  config.points = static_cast<int>(number_or(doc, "points", config.points));
  config.dim = static_cast<int>(number_or(doc, "dim", config.spec.dimension()));
  config.half_width = number_or(doc, "half_width", config.half_width);
  config.dt = number_or(doc, "dt", config.dt);
  config.t_end = number_or(doc, "t_end", config.t_end);
  config.blowup_threshold = number_or(doc, "threshold", config.blowup_threshold);
  config.snapshot_every = static_cast<int>(number_or(doc, "snapshot_every", 0));
  config.dt_cap_constant = number_or(doc, "dt_cap_constant", config.dt_cap_constant);
  if (doc.contains("nonlinear")) config.nonlinear = doc.at("nonlinear").get<bool>();
  if (config.dim != config.spec.dimension()) {
    throw ValidationError("grid dimension must equal the operator dimension");
  }
  return config;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_logging();
  CLI::App app{"critical exponents for evolution equations", "critex"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto* exponent = app.add_subcommand("exponent", "critical exponent report");
  exponent->add_option("--input", o.input, "operator JSON")->required();
  exponent->add_option("--output", o.output);

  auto* envelope = app.add_subcommand("envelope", "lower envelope breakpoints");
  envelope->add_option("--input", o.input, "operator JSON")->required();
  envelope->add_option("--output", o.output);
  envelope->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* fraclap = app.add_subcommand("fraclap-verify", "origin value and decay of (-Delta)^s <x>^-q");
  fraclap->add_option("--n", o.n)->required();
  fraclap->add_option("--sigma", o.sigma)->required();
  fraclap->add_option("--q", o.q)->required();
  fraclap->add_option("--output", o.output);
  fraclap->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* testfn = app.add_subcommand("testfn-dump", "CSV of psi and its derivatives");
  testfn->add_option("--m", o.m)->required();
  testfn->add_option("--p", o.p)->required();
  testfn->add_option("--eta", o.eta);
  testfn->add_option("--R", o.R);
  testfn->add_option("--samples", o.samples);
  testfn->add_option("--output", o.output);

  auto* sim = app.add_subcommand("simulate", "one pseudo-spectral run");
  sim->add_option("--input", o.input, "simulation JSON")->required();
  sim->add_option("--output", o.output);
  sim->add_option("--series", o.series, "CSV path for the sup-norm series");
  sim->add_option("--snapshots", o.snapshot_dir, "directory for binary snapshots");

  auto* sweep = app.add_subcommand("sweep", "verdicts over a list of powers");
  sweep->add_option("--input", o.input, "simulation JSON")->required();
  sweep->add_option("--p", o.p_values, "powers")->delimiter(',');
  sweep->add_option("--jobs", o.jobs);
  sweep->add_option("--output", o.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kExitValidation;
  }

  try {
    if (exponent->parsed()) return exponent_cmd(o, out);
    if (envelope->parsed()) return envelope_cmd(o, out);
    if (fraclap->parsed()) return fraclap_cmd(o, out);
    if (testfn->parsed()) return testfn_cmd(o, out);
    if (sim->parsed()) return simulate_cmd(o, out);
    if (sweep->parsed()) return sweep_cmd(o, out);
  } catch (const ValidationError& e) {
    write_error(err, "validation", e.what());
    return kExitValidation;
  } catch (const IoError& e) {
    write_error(err, "io", e.what());
    return kExitIo;
  } catch (const NumericalError& e) {
    write_error(err, "numerical", e.what());
    return kExitNumerical;
  } catch (const json::exception& e) {
    write_error(err, "validation", e.what());
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace critex
