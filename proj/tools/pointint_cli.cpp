// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "pointint/commands.hpp"

namespace {

constexpr int kExitClaimViolation = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string &path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in)
    throw pointint::Error(pointint::ErrorCode::invalid_argument, "cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string &path, const std::string &text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw pointint::Error(pointint::ErrorCode::invalid_argument, "cannot open output file " + path);
  out << text;
}

int report_error(const std::string &code, const std::string &message) {
  std::cout << pointint::Json{{"error", code}, {"message", message}}.dump(2) << '\n';
  return kExitInputError;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Point-interaction boundary conditions: classification, spectra and "
               "Yang-Baxter integrability"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path;
  std::string summary_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  int samples = 100;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--input", input, "JSON input file, - for stdin")->capture_default_str();
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  CLI::App *classify = app.add_subcommand("classify", "classify a boundary condition");
  CLI::App *spectrum = app.add_subcommand("spectrum", "dispersion roots and bound states");
  CLI::App *ybe = app.add_subcommand("ybe", "numerical Yang-Baxter verification");
  CLI::App *bethe = app.add_subcommand("bethe", "Bethe-ansatz amplitude table");
  CLI::App *scan = app.add_subcommand("scan", "parameter-space scan over a grid spec");
  for (CLI::App *sub : {classify, spectrum, ybe, bethe, scan})
    add_common(sub);
  for (CLI::App *sub : {ybe, scan})
    sub->add_option("--seed", seed, "random seed")->capture_default_str();
  ybe->add_option("--samples", samples, "momentum triples")->capture_default_str();
  scan->add_option("--samples", samples, "unused for scans; see ybe_samples in the grid");
  scan->add_option("--summary", summary_path, "write the summary JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    pointint::Json in;
    try {
      in = pointint::Json::parse(read_input(input));
    } catch (const pointint::Json::parse_error &e) {
      return report_error("invalid_json", e.what());
    }

    if (scan->parsed()) {
      const pointint::ScanResult result = pointint::cmd_scan(in, seed);
      const std::string summary = result.summary.dump(2) + "\n";
      const std::string csv = pointint::scan_to_csv(result);
      if (!out_path.empty()) {
        write_output(out_path, csv);
        write_output(summary_path, summary);
      } else if (format == "csv") {
        write_output("", csv);
        if (!summary_path.empty())
          write_output(summary_path, summary);
      } else {
        write_output(summary_path, summary);
      }
      return result.claims_hold ? 0 : kExitClaimViolation;
    }

    if (format != "json")
      return report_error("unsupported", "csv output is only available for scan");

    pointint::Json result;
    if (classify->parsed())
      result = pointint::cmd_classify(in);
    else if (spectrum->parsed())
      result = pointint::cmd_spectrum(in);
    else if (ybe->parsed())
      result = pointint::cmd_ybe(in, samples, seed);
    else
      result = pointint::cmd_bethe(in);
    write_output(out_path, result.dump(2) + "\n");
    return 0;
  } catch (const pointint::Error &e) {
    return report_error(std::string(pointint::to_string(e.code())), e.what());
  } catch (const pointint::Json::exception &e) {
    return report_error("invalid_input", e.what());
  }
}
